#include "qpart/symcomb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qpart {

namespace {

std::string join(const std::vector<int>& xs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = size();
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation: [" + join(images_) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    Permutation w;
    w.images_ = std::move(im);
    return w;
}

Permutation Permutation::simple(int n, int i)
{
    if (i < 1 || i >= n)
        throw std::out_of_range("simple transposition index out of range");
    Permutation w = identity(n);
    std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
    return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word)
{
    Permutation w = identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = w.left_mul_simple(*it);
    return w;
}

Permutation Permutation::inverse() const
{
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

int Permutation::length() const
{
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j])
                ++inv;
    return inv;
}

bool Permutation::has_left_descent(int i) const
{
    // Position of value i lies right of the position of value i+1.
    auto pi = std::find(images_.begin(), images_.end(), i);
    auto pj = std::find(images_.begin(), images_.end(), i + 1);
    return pi > pj;
}

bool Permutation::has_right_descent(int i) const
{
    return (*this)(i) > (*this)(i + 1);
}

Permutation Permutation::left_mul_simple(int i) const
{
    if (i < 1 || i >= size())
        throw std::out_of_range("simple transposition index out of range");
    Permutation w = *this;
    for (int& v : w.images_) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return w;
}

Permutation operator*(const Permutation& v, const Permutation& w)
{
    if (v.size() != w.size())
        throw std::invalid_argument("permutation rank mismatch");
    Permutation out;
    out.images_.resize(w.images_.size());
    for (std::size_t i = 0; i < w.images_.size(); ++i)
        out.images_[i] = v(w.images_[i]);
    return out;
}

std::string Permutation::to_string() const
{
    return "[" + join(images_) + "]";
}

int length(const Permutation& w)
{
    return w.length();
}

std::vector<int> reduced_word(const Permutation& w)
{
    // Peel left descents: w = s_i (s_i w) with l(s_i w) = l(w) - 1.
    std::vector<int> word;
    Permutation cur = w;
    const int n = w.size();
    while (!cur.is_identity()) {
        for (int i = 1; i < n; ++i) {
            if (cur.has_left_descent(i)) {
                word.push_back(i);
                cur = cur.left_mul_simple(i);
                break;
            }
        }
    }
    return word;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0)
            throw std::invalid_argument("composition with negative part");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::hook(int n, int k)
{
    if (k < 0 || k > n)
        throw std::invalid_argument("hook (n-k,1^k) needs 0 <= k <= n");
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Composition(std::move(parts));
}

int Composition::block_of(int i) const
{
    int end = 0;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        end += parts_[j];
        if (i <= end)
            return static_cast<int>(j);
    }
    throw std::out_of_range("letter outside composition range");
}

bool Composition::in_young_subgroup(const Permutation& w) const
{
    for (int i = 1; i <= n_; ++i)
        if (block_of(i) != block_of(w(i)))
            return false;
    return true;
}

std::vector<int> Composition::young_generators() const
{
    std::vector<int> gens;
    int start = 1;
    for (int p : parts_) {
        for (int i = start; i < start + p - 1; ++i)
            gens.push_back(i);
        start += p;
    }
    return gens;
}

Natural Composition::young_order() const
{
    Natural out = 1;
    for (int p : parts_)
        out *= factorial(p);
    return out;
}

std::vector<Permutation> Composition::young_subgroup() const
{
    // Product of the symmetric groups on the blocks, built block by block.
    std::vector<std::vector<int>> acc{{}};
    int start = 1;
    for (int p : parts_) {
        std::vector<int> block(static_cast<std::size_t>(p));
        std::iota(block.begin(), block.end(), start);
        std::vector<std::vector<int>> next;
        for (const auto& prefix : acc) {
            std::vector<int> perm = block;
            do {
                auto w = prefix;
                w.insert(w.end(), perm.begin(), perm.end());
                next.push_back(std::move(w));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        acc = std::move(next);
        start += p;
    }
    std::vector<Permutation> out;
    out.reserve(acc.size());
    for (auto& im : acc)
        out.emplace_back(std::move(im));
    std::sort(out.begin(), out.end());
    return out;
}

Natural Composition::num_cosets() const
{
    return factorial(n_) / young_order();
}

std::string Composition::to_string() const
{
    return "(" + join(parts_) + ")";
}

// ---------------------------------------------------------------- tableaux

RowStandardTableau::RowStandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    int n = 0;
    for (const auto& row : rows_)
        n += static_cast<int>(row.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            int v = row[j];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("tableau entries must be exactly {1..n}");
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 0 && row[j - 1] >= v)
                throw std::invalid_argument("tableau rows must increase");
        }
    }
}

RowStandardTableau RowStandardTableau::initial(const Composition& shape)
{
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts()) {
        std::vector<int> row(static_cast<std::size_t>(p));
        std::iota(row.begin(), row.end(), next);
        next += p;
        rows.push_back(std::move(row));
    }
    return RowStandardTableau(std::move(rows));
}

Composition RowStandardTableau::shape() const
{
    std::vector<int> parts;
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Composition(std::move(parts));
}

int RowStandardTableau::n() const
{
    int n = 0;
    for (const auto& row : rows_)
        n += static_cast<int>(row.size());
    return n;
}

int RowStandardTableau::row_of(int v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (std::find(rows_[r].begin(), rows_[r].end(), v) != rows_[r].end())
            return static_cast<int>(r);
    throw std::out_of_range("entry not in tableau");
}

Permutation d_of_tableau(const RowStandardTableau& s)
{
    // Position-wise: d maps the entry of t^lambda to the entry of s.
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(s.n()));
    for (const auto& row : s.rows())
        im.insert(im.end(), row.begin(), row.end());
    return Permutation(std::move(im));
}

RowStandardTableau tableau_of_coset_rep(const Permutation& d, const Composition& shape)
{
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts()) {
        std::vector<int> row;
        for (int j = 0; j < p; ++j)
            row.push_back(d(next + j));
        std::sort(row.begin(), row.end());
        next += p;
        rows.push_back(std::move(row));
    }
    return RowStandardTableau(std::move(rows));
}

bool is_distinguished(const Permutation& d, const Composition& lambda)
{
    int start = 1;
    for (int p : lambda.parts()) {
        for (int i = start; i < start + p - 1; ++i)
            if (d(i) > d(i + 1))
                return false;
        start += p;
    }
    return true;
}

std::vector<RowStandardTableau> row_standard_tableaux(const Composition& shape)
{
    // A row standard tableau is determined by the row label of each value.
    std::vector<int> labels;
    for (std::size_t j = 0; j < shape.num_parts(); ++j)
        labels.insert(labels.end(), static_cast<std::size_t>(shape.parts()[j]), static_cast<int>(j));
    std::vector<RowStandardTableau> out;
    do {
        std::vector<std::vector<int>> rows(shape.num_parts());
        for (std::size_t v = 0; v < labels.size(); ++v)
            rows[static_cast<std::size_t>(labels[v])].push_back(static_cast<int>(v) + 1);
        out.emplace_back(std::move(rows));
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return d_of_tableau(a) < d_of_tableau(b);
    });
    return out;
}

std::vector<Permutation> coset_reps(const Composition& lambda)
{
    std::vector<Permutation> out;
    for (const auto& t : row_standard_tableaux(lambda))
        out.push_back(d_of_tableau(t));
    return out;
}

std::vector<Permutation> double_coset_reps(const Composition& mu, const Composition& lambda)
{
    if (mu.n() != lambda.n())
        throw std::invalid_argument("compositions of different n");
    std::vector<Permutation> out;
    for (auto& d : coset_reps(lambda))
        if (is_distinguished(d.inverse(), mu))
            out.push_back(std::move(d));
    return out;
}

Composition intersect_composition(const Composition& mu, const Permutation& d,
                                  const Composition& lambda)
{
    if (mu.n() != lambda.n() || d.size() != lambda.n() || !is_distinguished(d, lambda)
        || !is_distinguished(d.inverse(), mu))
        throw NotDistinguished(d.to_string() + " is not in D_{" + mu.to_string() + ","
                               + lambda.to_string() + "}");
    // Within each lambda-block d is increasing, so the points landing in each
    // mu-block form consecutive runs, ordered by mu-block.
    std::vector<int> parts;
    int start = 1;
    for (int p : lambda.parts()) {
        std::vector<int> counts(mu.num_parts(), 0);
        for (int i = start; i < start + p; ++i)
            ++counts[static_cast<std::size_t>(mu.block_of(d(i)))];
        for (int c : counts)
            if (c > 0)
                parts.push_back(c);
        start += p;
    }
    return Composition(std::move(parts));
}

// ---------------------------------------------------------------- counting

Natural stirling2(int r, int k)
{
    if (r < 0 || k < 0)
        return 0;
    // row[k] = s(m, k), updated in place for m = 1..r.
    std::vector<Natural> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= r; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)]
                                               + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

Natural bell(int m)
{
    Natural out = 0;
    for (int k = 0; k <= m; ++k)
        out += stirling2(m, k);
    return out;
}

Natural factorial(int n)
{
    Natural out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

}  // namespace qpart
