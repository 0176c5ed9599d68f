#include "qpart/tensor.hpp"

#include "qpart/qperm.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qpart {

GeneratorOutOfRange::GeneratorOutOfRange(int i, int n)
    : std::out_of_range("generator T_" + std::to_string(i) + " does not exist for n = " + std::to_string(n))
{
}

DimensionLimitExceeded::DimensionLimitExceeded(int n, int r, std::uint64_t limit)
    : std::length_error("n^r = " + std::to_string(n) + "^" + std::to_string(r) + " exceeds the limit "
                        + std::to_string(limit))
{
}

// ---------------------------------------------------------------- multi-indices

MultiIndex::MultiIndex(std::vector<int> entries, int n) : entries_(std::move(entries))
{
    for (int v : entries_)
        if (v < 1 || v > n)
            throw std::invalid_argument("multi-index entry " + std::to_string(v) + " outside 1.."
                                        + std::to_string(n));
}

MultiIndex MultiIndex::swap_letters(int i) const
{
    MultiIndex out = *this;
    for (int& v : out.entries_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return out;
}

MultiIndex MultiIndex::permute_letters(const Permutation& w) const
{
    MultiIndex out = *this;
    for (int& v : out.entries_)
        v = w(v);
    return out;
}

std::string MultiIndex::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < entries_.size(); ++k)
        os << (k ? "," : "") << entries_[k];
    os << ")";
    return os.str();
}

int first(const MultiIndex& j, int letter)
{
    const auto& e = j.entries();
    auto it = std::find(e.begin(), e.end(), letter);
    return it == e.end() ? 0 : static_cast<int>(it - e.begin()) + 1;
}

ColoredSetPartition colored_partition(const MultiIndex& j)
{
    ColoredSetPartition p;
    for (int pos = 1; pos <= j.r(); ++pos) {
        int letter = j[pos];
        auto it = std::find(p.colors.begin(), p.colors.end(), letter);
        if (it == p.colors.end()) {
            p.colors.push_back(letter);
            p.blocks.push_back({pos});
        } else {
            p.blocks[static_cast<std::size_t>(it - p.colors.begin())].push_back(pos);
        }
    }
    return p;
}

MultiIndex multi_index_of(const ColoredSetPartition& p, int n)
{
    int r = 0;
    for (const auto& b : p.blocks)
        r += static_cast<int>(b.size());
    std::vector<int> entries(static_cast<std::size_t>(r), 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int pos : p.blocks[b])
            entries[static_cast<std::size_t>(pos - 1)] = p.colors[b];
    return MultiIndex(std::move(entries), n);
}

RowStandardTableau tableau_of(const MultiIndex& j, int n)
{
    const auto p = colored_partition(j);
    std::vector<std::vector<int>> rows(1);
    for (int letter = 1; letter <= n; ++letter)
        if (std::find(p.colors.begin(), p.colors.end(), letter) == p.colors.end())
            rows[0].push_back(letter);
    for (int c : p.colors)
        rows.push_back({c});
    return RowStandardTableau(std::move(rows));
}

std::vector<SetPartition> set_partitions(int r, int max_blocks)
{
    std::vector<SetPartition> out;
    if (r <= 0 || max_blocks <= 0)
        return out;
    // Restricted growth strings a_1 = 0, a_{i} <= 1 + max(a_1..a_{i-1}).
    std::vector<int> a(static_cast<std::size_t>(r), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(r), 0);
    while (true) {
        int blocks = prefix_max.back() + 1;
        if (blocks <= max_blocks) {
            SetPartition p(static_cast<std::size_t>(blocks));
            for (int pos = 0; pos < r; ++pos)
                p[static_cast<std::size_t>(a[static_cast<std::size_t>(pos)])].push_back(pos + 1);
            out.push_back(std::move(p));
        }
        int i = r - 1;
        while (i > 0 && (a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]
                         || a[static_cast<std::size_t>(i)] + 1 >= max_blocks))
            --i;
        if (i == 0)
            break;
        ++a[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)],
                                                           a[static_cast<std::size_t>(i)]);
        for (int t = i + 1; t < r; ++t) {
            a[static_cast<std::size_t>(t)] = 0;
            prefix_max[static_cast<std::size_t>(t)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::vector<Orbit> orbits(int n, int r)
{
    std::vector<Orbit> out;
    for (auto& p : set_partitions(r, std::min(n, r))) {
        Natural size = 1;
        for (int t = 0; t < static_cast<int>(p.size()); ++t)
            size *= n - t;
        out.push_back({std::move(p), size});
    }
    return out;
}

// ---------------------------------------------------------------- tensor space

std::optional<std::uint64_t> checked_power(int n, int r, std::uint64_t limit)
{
    if (n < 1 || r < 1)
        return std::nullopt;
    std::uint64_t acc = 1;
    for (int t = 0; t < r; ++t) {
        if (acc > limit / static_cast<std::uint64_t>(n))
            return std::nullopt;
        acc *= static_cast<std::uint64_t>(n);
    }
    return acc <= limit ? std::optional<std::uint64_t>(acc) : std::nullopt;
}

TensorSpace::TensorSpace(int n, int r, std::uint64_t limit) : n_(n), r_(r)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("tensor space needs n >= 1 and r >= 1");
    auto d = checked_power(n, r, limit);
    if (!d)
        throw DimensionLimitExceeded(n, r, limit);
    dim_ = static_cast<std::size_t>(*d);
}

std::size_t TensorSpace::index_of(const MultiIndex& j) const
{
    std::size_t idx = 0;
    for (int v : j.entries())
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    return idx;
}

MultiIndex TensorSpace::multi_index(std::size_t idx) const
{
    std::vector<int> e(static_cast<std::size_t>(r_));
    for (int pos = r_ - 1; pos >= 0; --pos) {
        e[static_cast<std::size_t>(pos)] = static_cast<int>(idx % static_cast<std::size_t>(n_)) + 1;
        idx /= static_cast<std::size_t>(n_);
    }
    return MultiIndex(std::move(e), n_);
}

// ---------------------------------------------------------------- vectors

TensorVector TensorVector::basis(const MultiIndex& j, int n, const LaurentPoly& c)
{
    TensorVector v(n, j.r());
    v.add_term(j, c);
    return v;
}

LaurentPoly TensorVector::coeff(const MultiIndex& j) const
{
    auto it = terms_.find(j);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add_term(const MultiIndex& j, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& other)
{
    for (const auto& [j, c] : other.terms_)
        add_term(j, c);
    return *this;
}

TensorVector& TensorVector::operator*=(const LaurentPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [j, v] : terms_)
        v *= c;
    return *this;
}

std::string TensorVector::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [j, c] : terms_) {
        os << (lead ? "" : " + ");
        if (!(c == LaurentPoly(1)))
            os << "(" << c.to_string() << ")*";
        os << "e" << j.to_string();
        lead = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- action

std::vector<std::pair<MultiIndex, LaurentPoly>> act_gen_basis(int i, const MultiIndex& j, int n)
{
    if (i < 1 || i >= n)
        throw GeneratorOutOfRange(i, n);
    const int fi = first(j, i);
    const int fnext = first(j, i + 1);
    const LaurentPoly q = LaurentPoly::q();
    if (fi == 0 && fnext == 0)
        return {{j, q}};
    if (fi < fnext)
        return {{j.swap_letters(i), LaurentPoly(1)}};
    return {{j.swap_letters(i), q}, {j, q - 1}};
}

TensorVector act_gen(int i, const TensorVector& v)
{
    if (i < 1 || i >= v.n())
        throw GeneratorOutOfRange(i, v.n());
    TensorVector out(v.n(), v.r());
    for (const auto& [j, c] : v.terms())
        for (const auto& [y, a] : act_gen_basis(i, j, v.n()))
            out.add_term(y, a * c);
    return out;
}

TensorVector act(const HeckeElement& h, const TensorVector& v)
{
    if (h.n() != v.n())
        throw RankMismatch();
    TensorVector out(v.n(), v.r());
    for (const auto& [w, c] : h.terms()) {
        TensorVector acc = v;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = act_gen(*it, acc);
        acc *= c;
        out += acc;
    }
    return out;
}

SparseMatrix<LaurentPoly> generator_matrix(const TensorSpace& space, int i)
{
    SparseMatrix<LaurentPoly> m;
    m.dim = space.dim();
    m.columns.resize(m.dim);
    for (std::size_t col = 0; col < m.dim; ++col) {
        auto& column = m.columns[col];
        for (auto& [y, c] : act_gen_basis(i, space.multi_index(col), space.n()))
            column.emplace_back(space.index_of(y), std::move(c));
        std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

std::vector<SparseMatrix<LaurentPoly>> generator_matrices(const TensorSpace& space)
{
    std::vector<SparseMatrix<LaurentPoly>> out;
    for (int i = 1; i < space.n(); ++i)
        out.push_back(generator_matrix(space, i));
    return out;
}

SparseMatrix<Rational> specialize(const SparseMatrix<LaurentPoly>& m, const Rational& q0)
{
    SparseMatrix<Rational> out;
    out.dim = m.dim;
    out.columns.resize(m.dim);
    for (std::size_t c = 0; c < m.dim; ++c)
        for (const auto& [r, v] : m.columns[c]) {
            Rational x = v.eval(q0);
            if (x != 0)
                out.columns[c].emplace_back(r, std::move(x));
        }
    return out;
}

namespace {

TensorVector apply_word(const std::vector<int>& word, TensorVector v)
{
    // Rightmost generator acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = act_gen(*it, v);
    return v;
}

}  // namespace

RelationReport verify_relations(int n, int r, std::uint64_t limit)
{
    const TensorSpace space(n, r, limit);
    RelationReport report;
    const LaurentPoly q = LaurentPoly::q();
    auto fail = [&report](const std::string& what, const MultiIndex& j) {
        if (report.ok) {
            report.ok = false;
            report.counterexample = what + " fails on e" + j.to_string();
        }
    };
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        const MultiIndex j = space.multi_index(idx);
        const TensorVector x = TensorVector::basis(j, n);
        for (int i = 1; i < n; ++i) {
            // T_i T_i = q + (q-1) T_i
            TensorVector lhs = apply_word({i, i}, x);
            TensorVector rhs = x;
            rhs *= q;
            TensorVector ti = act_gen(i, x);
            ti *= q - 1;
            rhs += ti;
            ++report.checks;
            if (!(lhs == rhs))
                fail("T_" + std::to_string(i) + "^2 = q + (q-1)T_" + std::to_string(i), j);
            if (i + 1 < n) {
                ++report.checks;
                if (!(apply_word({i, i + 1, i}, x) == apply_word({i + 1, i, i + 1}, x)))
                    fail("braid relation at i = " + std::to_string(i), j);
            }
            for (int k = i + 2; k < n; ++k) {
                ++report.checks;
                if (!(apply_word({i, k}, x) == apply_word({k, i}, x)))
                    fail("T_" + std::to_string(i) + " T_" + std::to_string(k) + " commutation", j);
            }
        }
    }
    return report;
}

OrbitCorrespondence orbit_iso(int n, int r, const SetPartition& partition)
{
    const int k = static_cast<int>(partition.size());
    if (k < 1 || k > std::min(n, r))
        throw std::invalid_argument("set partition must have between 1 and min(n,r) blocks");
    OrbitCorrespondence out;
    out.shape = Composition::hook(n, k);
    const QPermModule module(out.shape);

    // Every injective coloring of the blocks gives one tensor of the orbit.
    std::map<MultiIndex, std::size_t> tensor_to_basis;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> chosen;
        for (int t = 0; t < n; ++t)
            if (pick[static_cast<std::size_t>(t)])
                chosen.push_back(t + 1);
        do {
            MultiIndex j = multi_index_of({partition, chosen}, n);
            Permutation d = d_of_tableau(tableau_of(j, n));
            tensor_to_basis.emplace(j, module.index_of(d));
            out.pairs.emplace_back(std::move(j), std::move(d));
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(out.pairs.begin(), out.pairs.end());

    // The correspondence must be a bijection onto D_lambda and intertwine T_i.
    bool ok = out.pairs.size() == module.dim();
    std::vector<bool> hit(module.dim(), false);
    for (const auto& [j, idx] : tensor_to_basis)
        hit[idx] = true;
    ok = ok && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    for (int i = 1; ok && i < n; ++i) {
        for (const auto& [j, idx] : tensor_to_basis) {
            std::map<std::size_t, LaurentPoly> via_tensor;
            for (const auto& [y, c] : act_gen_basis(i, j, n)) {
                auto it = tensor_to_basis.find(y);
                if (it == tensor_to_basis.end()) {
                    ok = false;
                    break;
                }
                via_tensor[it->second] += c;
            }
            std::map<std::size_t, LaurentPoly> via_module;
            for (const auto& [t, c] : module.act_gen(i, idx))
                via_module[t] += c;
            if (!ok || via_tensor != via_module) {
                ok = false;
                break;
            }
        }
    }
    out.equivariant = ok;
    return out;
}

}  // namespace qpart
