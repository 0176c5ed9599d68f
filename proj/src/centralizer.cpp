#include "qpart/centralizer.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace qpart {

namespace {

template <typename F>
struct RowView {
    std::vector<std::vector<std::pair<std::size_t, F>>> rows;
};

template <typename F>
RowView<F> rows_of(const SparseMatrix<F>& m)
{
    RowView<F> view;
    view.rows.resize(m.dim);
    for (std::size_t c = 0; c < m.dim; ++c)
        for (const auto& [r, v] : m.columns[c])
            view.rows[r].emplace_back(c, v);
    return view;
}

/// The single diagonal entry of a column (or row) that has nothing else.
template <typename F>
const F* lone_diagonal(const std::vector<std::pair<std::size_t, F>>& entries, std::size_t idx)
{
    if (entries.size() == 1 && entries.front().first == idx)
        return &entries.front().second;
    return nullptr;
}

template <typename F>
SparseRow<F> sylvester_row(const SparseMatrix<F>& a, const RowView<F>& a_rows, std::size_t dim, std::size_t i,
                           std::size_t j)
{
    // (X A - A X)_{ij} = sum_c X_{ic} A_{cj} - sum_c A_{ic} X_{cj}
    SparseRow<F> row;
    for (const auto& [c, v] : a.columns[j])
        row.emplace_back(static_cast<std::uint32_t>(i * dim + c), v);
    for (const auto& [c, v] : a_rows.rows[i])
        row.emplace_back(static_cast<std::uint32_t>(c * dim + j), -v);
    canonicalize_row(row);
    return row;
}

template <typename F>
Matrix<F> unflatten(const std::vector<F>& flat, std::size_t dim)
{
    Matrix<F> m(dim, dim);
    for (std::size_t k = 0; k < flat.size(); ++k)
        if (!is_zero(flat[k]))
            m(k / dim, k % dim) = flat[k];
    return m;
}

}  // namespace

template <typename F>
CommutantSpace<F> commutant_of(const std::vector<SparseMatrix<F>>& generators, std::size_t dim, bool want_basis)
{
    if (dim > 65536)
        throw std::length_error("commutant system too large");
    const std::size_t unknowns = dim * dim;
    SparseEchelon<F> ech(unknowns);
    for (const auto& a : generators) {
        const RowView<F> a_rows = rows_of(a);
        for (std::size_t i = 0; i < dim; ++i) {
            const F* row_diag = lone_diagonal(a_rows.rows[i], i);
            for (std::size_t j = 0; j < dim; ++j) {
                const F* col_diag = lone_diagonal(a.columns[j], j);
                if (row_diag && col_diag && *row_diag == *col_diag)
                    continue;
                auto row = sylvester_row(a, a_rows, dim, i, j);
                if (!row.empty())
                    ech.add_row(std::move(row));
            }
        }
    }
    CommutantSpace<F> space;
    space.dim = unknowns - ech.rank();
    if (want_basis) {
        auto null = ech.nullspace();
        space.coordinates = ech.free_cols();
        for (const auto& v : null)
            space.basis.push_back(unflatten(v, dim));
    }
    return space;
}

template CommutantSpace<Rational> commutant_of(const std::vector<SparseMatrix<Rational>>&, std::size_t, bool);
template CommutantSpace<RationalFunction> commutant_of(const std::vector<SparseMatrix<RationalFunction>>&,
                                                       std::size_t, bool);

template <typename F>
std::optional<std::vector<F>> expand_in(const CommutantSpace<F>& space, const Matrix<F>& x)
{
    std::vector<F> coords;
    coords.reserve(space.coordinates.size());
    Matrix<F> residual = x;
    for (std::size_t k = 0; k < space.coordinates.size(); ++k) {
        F c = x.data()[space.coordinates[k]];
        if (!is_zero(c))
            residual.add_scaled(space.basis[k], -c);
        coords.push_back(std::move(c));
    }
    if (!residual.is_zero())
        return std::nullopt;
    return coords;
}

template std::optional<std::vector<Rational>> expand_in(const CommutantSpace<Rational>&, const Matrix<Rational>&);
template std::optional<std::vector<RationalFunction>> expand_in(const CommutantSpace<RationalFunction>&,
                                                                const Matrix<RationalFunction>&);

std::size_t commutant_dim_dense(const std::vector<Matrix<Rational>>& generators, std::size_t dim,
                                std::optional<std::size_t> max_rank)
{
    const std::size_t unknowns = dim * dim;
    SparseEchelon<Rational> ech(unknowns);
    // Sparsest constraints first; they tend to produce short pivot rows.
    std::vector<std::size_t> order(generators.size());
    std::vector<std::size_t> nnz(generators.size(), 0);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        order[g] = g;
        for (const auto& v : generators[g].data())
            nnz[g] += is_zero(v) ? 0 : 1;
    }
    std::stable_sort(order.begin(), order.end(), [&nnz](std::size_t a, std::size_t b) { return nnz[a] < nnz[b]; });
    for (std::size_t g : order) {
        const auto& c = generators[g];
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                if (max_rank && ech.rank() >= *max_rank)
                    return unknowns - ech.rank();
                SparseRow<Rational> row;
                for (std::size_t t = 0; t < dim; ++t) {
                    if (!is_zero(c(t, j)))
                        row.emplace_back(static_cast<std::uint32_t>(i * dim + t), c(t, j));
                    if (!is_zero(c(i, t)))
                        row.emplace_back(static_cast<std::uint32_t>(t * dim + j), -c(i, t));
                }
                canonicalize_row(row);
                if (!row.empty())
                    ech.add_row(std::move(row));
            }
    }
    return unknowns - ech.rank();
}

std::size_t CommutantResult::dim() const
{
    if (!specializations.empty())
        return specializations.front().dim;
    return symbolic_dim.value_or(0);
}

std::vector<SparseMatrix<Rational>> specialized_generators(int n, int r, const Rational& q0, bool half,
                                                           std::uint64_t limit)
{
    if (q0 == 0)
        throw ZeroSpecialization();
    const TensorSpace space(n, r, limit);
    std::vector<SparseMatrix<Rational>> out;
    const int last = half ? n - 2 : n - 1;
    for (int i = 1; i <= last; ++i)
        out.push_back(specialize(generator_matrix(space, i), q0));
    return out;
}

namespace {

CommutantResult run_commutant(int n, int r, const CommutantOptions& options, bool half)
{
    for (const auto& q0 : options.q_values)
        if (q0 == 0)
            throw ZeroSpecialization();
    const TensorSpace space(n, r, options.limit);
    CommutantResult result;
    result.n = n;
    result.r = r;
    result.half = half;

    // Independent specializations; each task owns its inputs.
    std::vector<std::future<SpecializedCommutant>> tasks;
    for (const auto& q0 : options.q_values) {
        tasks.push_back(std::async(std::launch::async, [&space, &options, n, r, q0, half] {
            auto gens = specialized_generators(n, r, q0, half, options.limit);
            auto cs = commutant_of(gens, space.dim(), options.want_basis);
            return SpecializedCommutant{q0, cs.dim, std::move(cs.basis)};
        }));
    }
    for (auto& t : tasks)
        result.specializations.push_back(t.get());

    if (options.symbolic) {
        if (!checked_power(n, r, options.symbolic_limit))
            throw DimensionLimitExceeded(n, r, options.symbolic_limit);
        std::vector<SparseMatrix<RationalFunction>> gens;
        const int last = half ? n - 2 : n - 1;
        for (int i = 1; i <= last; ++i) {
            auto m = generator_matrix(space, i);
            SparseMatrix<RationalFunction> g;
            g.dim = m.dim;
            g.columns.resize(m.dim);
            for (std::size_t c = 0; c < m.dim; ++c)
                for (const auto& [row, v] : m.columns[c])
                    g.columns[c].emplace_back(row, RationalFunction(v));
            gens.push_back(std::move(g));
        }
        auto cs = commutant_of(gens, space.dim(), options.want_basis);
        result.symbolic_dim = cs.dim;
        result.symbolic_basis = std::move(cs.basis);
    }

    std::optional<std::size_t> seen;
    for (const auto& s : result.specializations) {
        if (seen && *seen != s.dim)
            result.agree = false;
        seen = s.dim;
    }
    if (result.symbolic_dim && seen && *seen != *result.symbolic_dim)
        result.agree = false;
    return result;
}

Matrix<Rational> dense(const SparseMatrix<Rational>& m)
{
    return m.to_dense();
}

bool commutes(const Matrix<Rational>& a, const Matrix<Rational>& b)
{
    return a * b == b * a;
}

}  // namespace

CommutantResult commutant_basis(int n, int r, const CommutantOptions& options)
{
    return run_commutant(n, r, options, false);
}

CommutantResult half_commutant_basis(int n, int r, const CommutantOptions& options)
{
    return run_commutant(n, r, options, true);
}

std::vector<Matrix<Rational>> t_w_matrices(int n, int r, const Rational& q0, std::uint64_t limit)
{
    const auto gens = specialized_generators(n, r, q0, false, limit);
    std::vector<Matrix<Rational>> dense_gens;
    for (const auto& g : gens)
        dense_gens.push_back(dense(g));
    const std::size_t dim = TensorSpace(n, r, limit).dim();

    // T_{s_i w} = T_i T_w whenever l(s_i w) = l(w) + 1; grow by length.
    std::map<Permutation, Matrix<Rational>> found;
    found.emplace(Permutation::identity(n), Matrix<Rational>::identity(dim));
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
            for (int i = 1; i < n; ++i) {
                if (w.has_left_descent(i))
                    continue;
                Permutation sw = w.left_mul_simple(i);
                if (found.count(sw))
                    continue;
                found.emplace(sw, dense_gens[static_cast<std::size_t>(i - 1)] * found.at(w));
                next.push_back(std::move(sw));
            }
        frontier = std::move(next);
    }
    std::vector<Matrix<Rational>> out;
    for (auto& [w, m] : found)
        out.push_back(std::move(m));
    return out;
}

DoubleCentralizerReport double_centralizer_check(int n, int r, const Rational& q0, std::uint64_t limit)
{
    DoubleCentralizerReport rep;
    rep.n = n;
    rep.r = r;
    rep.q0 = q0;
    const std::size_t dim = TensorSpace(n, r, limit).dim();
    const auto gens = specialized_generators(n, r, q0, false, limit);
    const auto commutant = commutant_of(gens, dim, true);
    rep.commutant_dim = commutant.dim;

    const auto images = t_w_matrices(n, r, q0, limit);
    std::vector<std::vector<Rational>> flat;
    for (const auto& m : images)
        flat.push_back(m.data());
    rep.image_dim = rank_of(flat);

    rep.image_commutes = true;
    for (const auto& t : images) {
        for (const auto& c : commutant.basis)
            if (!commutes(t, c)) {
                rep.image_commutes = false;
                break;
            }
        if (!rep.image_commutes)
            break;
    }

    // The image always lies in the bicommutant once it commutes with the
    // commutant, so the Sylvester rank is at most dim^2 - image_dim and the
    // elimination may stop there.
    std::optional<std::size_t> cap;
    if (rep.image_commutes)
        cap = dim * dim - rep.image_dim;
    rep.bicommutant_dim = commutant_dim_dense(commutant.basis, dim, cap);
    rep.pass = rep.image_commutes && rep.bicommutant_dim == rep.image_dim;
    return rep;
}

StructureConstants structure_constants(int n, int r, const Rational& q0, std::uint64_t limit)
{
    const std::size_t dim = TensorSpace(n, r, limit).dim();
    const auto commutant = commutant_of(specialized_generators(n, r, q0, false, limit), dim, true);
    const std::size_t m = commutant.dim;
    StructureConstants sc;
    sc.dim = m;
    sc.gamma.assign(m * m * m, Rational(0));
    sc.closed = true;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto coords = expand_in(commutant, commutant.basis[a] * commutant.basis[b]);
            if (!coords) {
                sc.closed = false;
                continue;
            }
            for (std::size_t c = 0; c < m; ++c)
                sc.gamma[(a * m + b) * m + c] = (*coords)[c];
        }
    if (auto id = expand_in(commutant, Matrix<Rational>::identity(dim)))
        sc.identity = std::move(*id);
    else
        sc.closed = false;

    auto g = [&sc, m](std::size_t a, std::size_t b, std::size_t c) -> const Rational& {
        return sc.gamma[(a * m + b) * m + c];
    };
    sc.associative = sc.closed;
    for (std::size_t a = 0; a < m && sc.associative; ++a)
        for (std::size_t b = 0; b < m && sc.associative; ++b)
            for (std::size_t c = 0; c < m && sc.associative; ++c)
                for (std::size_t e = 0; e < m; ++e) {
                    Rational lhs = 0;
                    Rational rhs = 0;
                    for (std::size_t d = 0; d < m; ++d) {
                        lhs += g(a, b, d) * g(d, c, e);
                        rhs += g(b, c, d) * g(a, d, e);
                    }
                    if (lhs != rhs) {
                        sc.associative = false;
                        break;
                    }
                }
    return sc;
}

}  // namespace qpart
