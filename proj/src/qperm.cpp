#include "qpart/qperm.hpp"

#include <algorithm>

namespace qpart {

QPermModule::QPermModule(Composition shape) : shape_(std::move(shape)), basis_(coset_reps(shape_))
{
    for (std::size_t k = 0; k < basis_.size(); ++k)
        index_.emplace(basis_[k], k);
}

std::size_t QPermModule::index_of(const Permutation& d) const
{
    auto it = index_.find(d);
    if (it == index_.end())
        throw NotDistinguished(d.to_string() + " is not in D_" + shape_.to_string());
    return it->second;
}

std::vector<std::pair<std::size_t, LaurentPoly>> QPermModule::act_gen(int i, std::size_t basis_index) const
{
    if (i < 1 || i >= n())
        throw std::out_of_range("generator index out of range");
    const Permutation& d = basis_[basis_index];
    // Row of the value v in d t^lambda is the block of d^-1(v).
    const Permutation dinv = d.inverse();
    const int row_i = shape_.block_of(dinv(i));
    const int row_next = shape_.block_of(dinv(i + 1));
    const LaurentPoly q = LaurentPoly::q();
    if (row_i == row_next)
        return {{basis_index, q}};
    const std::size_t sd = index_of(d.left_mul_simple(i));
    if (row_i < row_next)
        return {{sd, LaurentPoly(1)}};
    return {{sd, q}, {basis_index, q - 1}};
}

QPermVector QPermModule::act_gen(int i, const QPermVector& v) const
{
    QPermVector out(dim());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        for (const auto& [t, c] : act_gen(i, k))
            out[t] += c * v[k];
    }
    return out;
}

QPermVector QPermModule::act(const HeckeElement& h, const QPermVector& v) const
{
    if (h.n() != n())
        throw RankMismatch();
    QPermVector out(dim());
    for (const auto& [w, c] : h.terms()) {
        QPermVector acc = v;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = act_gen(*it, acc);
        for (std::size_t k = 0; k < dim(); ++k)
            if (!acc[k].is_zero())
                out[k] += c * acc[k];
    }
    return out;
}

Matrix<LaurentPoly> QPermModule::generator_matrix(int i) const
{
    Matrix<LaurentPoly> m(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
        for (const auto& [t, c] : act_gen(i, k))
            m(t, k) += c;
    return m;
}

Permutation double_coset_min(const Composition& mu, const Permutation& w, const Composition& lambda)
{
    // Descend on either side while some generator of Y_mu (left) or Y_lambda
    // (right) shortens w; the double coset has a unique minimal element.
    const auto left = mu.young_generators();
    const auto right = lambda.young_generators();
    Permutation cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : left)
            if (cur.has_left_descent(i)) {
                cur = cur.left_mul_simple(i);
                moved = true;
            }
        for (int i : right)
            if (cur.has_right_descent(i)) {
                cur = cur * Permutation::simple(cur.size(), i);
                moved = true;
            }
    }
    return cur;
}

HomMatrix phi_d(const Composition& mu, const Composition& lambda, const Permutation& d)
{
    if (mu.n() != lambda.n() || d.size() != mu.n() || !is_distinguished(d, lambda)
        || !is_distinguished(d.inverse(), mu))
        throw NotDistinguished(d.to_string() + " is not in D_{" + mu.to_string() + ","
                               + lambda.to_string() + "}");
    const QPermModule source(mu);
    const QPermModule target(lambda);

    // Sum over the double coset = sum of T_e x_lambda over the e in D_lambda
    // lying in it, each coefficient 1.
    QPermVector image_of_generator(target.dim());
    for (std::size_t k = 0; k < target.dim(); ++k)
        if (double_coset_min(mu, target.basis()[k], lambda) == d)
            image_of_generator[k] = 1;

    HomMatrix hom{mu, lambda, source.basis(), target.basis(), Matrix<LaurentPoly>(target.dim(), source.dim())};
    for (std::size_t c = 0; c < source.dim(); ++c) {
        QPermVector img = target.act(t_w(source.basis()[c]), image_of_generator);
        for (std::size_t k = 0; k < target.dim(); ++k)
            hom.matrix(k, c) = std::move(img[k]);
    }
    return hom;
}

std::size_t hom_dim(const Composition& mu, const Composition& lambda)
{
    return double_coset_reps(mu, lambda).size();
}

Natural qpartition_dim(int n, int r)
{
    const int kmax = std::min(n, r);
    Natural total = 0;
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= kmax; ++l)
            total += stirling2(r, k) * stirling2(r, l)
                     * static_cast<unsigned long>(hom_dim(Composition::hook(n, k), Composition::hook(n, l)));
    return total;
}

namespace {

/// (n-k, 1^k) restricted to Y_{(n-1,1)} ~ S_{n-1}: drop the fixed last point.
Composition restricted_hook(int n, int k)
{
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k - 1), 1);
    return Composition(std::move(parts));
}

}  // namespace

Natural half_qpartition_dim(int n, int r)
{
    const int kmax = std::min(n, r + 1);
    Natural total = 0;
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= kmax; ++l)
            total += stirling2(r + 1, k) * stirling2(r + 1, l)
                     * static_cast<unsigned long>(hom_dim(restricted_hook(n, k), restricted_hook(n, l)));
    return total;
}

MultiplicityVector restrict_multiplicities(const MultiplicityVector& m, int n)
{
    MultiplicityVector out;
    auto get = [&m](int k) {
        auto it = m.find(k);
        return it == m.end() ? Natural(0) : it->second;
    };
    for (int k = 1; k <= n; ++k) {
        Natural v = k * get(k) + get(k - 1);
        if (v != 0)
            out.emplace(k, v);
    }
    return out;
}

MultiplicityVector indres_step(const MultiplicityVector& m, int n)
{
    return restrict_multiplicities(m, n);
}

}  // namespace qpart
