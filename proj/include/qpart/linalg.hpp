#pragma once

// Exact linear algebra over Q and over Q(q): dense and column-sparse
// matrices, and an incremental sparse row echelon reducer used for rank and
// nullspace computations. Nothing here rounds.

#include "qpart/coeff.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qpart {

/// Element of the fraction field Q(q), kept as num/den with gcd(num, den) = 1,
/// both ordinary polynomials, den monic.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : RationalFunction(LaurentPoly(c)) {}            // NOLINT
    RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
    RationalFunction(const LaurentPoly& p);                                  // NOLINT
    /// Throws std::domain_error if den is zero.
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

/// Row-major dense matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<T>& data() const { return data_; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return qpart::is_zero(x); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (qpart::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!qpart::is_zero(b(k, j)))
                        out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    Matrix& add_scaled(const Matrix& b, const T& c)
    {
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!qpart::is_zero(b.data_[i]))
                data_[i] += c * b.data_[i];
        return *this;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Column-sparse square matrix: columns[c] lists (row, value) sorted by row.
template <typename T>
struct SparseMatrix {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::size_t, T>>> columns;

    Matrix<T> to_dense() const
    {
        Matrix<T> m(dim, dim);
        for (std::size_t c = 0; c < dim; ++c)
            for (const auto& [r, v] : columns[c])
                m(r, c) = v;
        return m;
    }
};

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

/// Sorts by column, merges duplicates and drops zeros.
template <typename F>
void canonicalize_row(SparseRow<F>& row)
{
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (out > 0 && row[out - 1].first == row[k].first) {
            row[out - 1].second += row[k].second;
            if (qpart::is_zero(row[out - 1].second))
                --out;
            continue;
        }
        if (qpart::is_zero(row[k].second))
            continue;
        if (out != k)
            std::swap(row[out], row[k]);
        ++out;
    }
    row.resize(out);
}

/// Incremental reduced row echelon form of a sparse linear system over a
/// field F. Every stored row has coefficient 1 at its pivot column and no
/// entries in other pivot columns. Pivots are chosen among the columns of the
/// incoming row by fewest occurrences in stored rows.
template <typename F>
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t num_cols)
        : num_cols_(num_cols), pivot_row_(num_cols, npos), occurrences_(num_cols)
    {
    }
    std::size_t num_cols() const { return num_cols_; }
    std::size_t rank() const { return rows_.size(); }
    /// Reduces row against the stored pivots; returns true if it was
    /// independent (and is now stored). row must be canonical.
    bool add_row(const SparseRow<F>& row)
    {
        SparseRow<F> reduced;
        reduced.reserve(2 * row.size());
        for (const auto& [c, v] : row) {
            const std::size_t p = pivot_row_[c];
            if (p == npos) {
                reduced.emplace_back(c, v);
                continue;
            }
            for (const auto& [c2, v2] : rows_[p])
                if (c2 != c)
                    reduced.emplace_back(c2, -(v * v2));
        }
        canonicalize_row(reduced);
        if (reduced.empty())
            return false;

        std::size_t best = 0;
        for (std::size_t t = 1; t < reduced.size(); ++t)
            if (occurrences_[reduced[t].first].size() < occurrences_[reduced[best].first].size())
                best = t;
        const std::uint32_t pivot = reduced[best].first;
        const F inv = F(1) / reduced[best].second;
        for (auto& [c, v] : reduced)
            v = v * inv;

        std::vector<std::size_t> touched;
        touched.swap(occurrences_[pivot]);
        for (std::size_t idx : touched) {
            auto& target = rows_[idx];
            auto it = std::lower_bound(target.begin(), target.end(), pivot,
                                       [](const auto& e, std::uint32_t c) { return e.first < c; });
            if (it == target.end() || it->first != pivot)
                continue;
            const F factor = it->second;
            target = axpy(target, reduced, factor, idx);
        }

        const std::size_t idx = rows_.size();
        pivot_row_[pivot] = idx;
        pivots_.push_back(pivot);
        for (const auto& [c, v] : reduced)
            if (c != pivot)
                occurrences_[c].push_back(idx);
        rows_.push_back(std::move(reduced));
        return true;
    }
    /// Basis of {x : A x = 0} for the system seen so far. Vector k has
    /// x[free_cols()[k]] = 1 and vanishes on every other free column.
    std::vector<std::vector<F>> nullspace()
    {
        free_cols_.clear();
        std::unordered_map<std::uint32_t, std::size_t> slot;
        for (std::size_t c = 0; c < num_cols_; ++c)
            if (pivot_row_[c] == npos) {
                slot.emplace(static_cast<std::uint32_t>(c), free_cols_.size());
                free_cols_.push_back(c);
            }
        std::vector<std::vector<F>> basis(free_cols_.size(), std::vector<F>(num_cols_, F(0)));
        for (std::size_t k = 0; k < free_cols_.size(); ++k)
            basis[k][free_cols_[k]] = F(1);
        for (std::size_t idx = 0; idx < rows_.size(); ++idx) {
            const std::uint32_t p = pivots_[idx];
            for (const auto& [c, v] : rows_[idx])
                if (c != p)
                    basis[slot.at(c)][p] = -v;
        }
        return basis;
    }
    /// Free columns from the last nullspace() call.
    const std::vector<std::size_t>& free_cols() const { return free_cols_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// a - factor * pivot_row, registering new columns of row idx.
    SparseRow<F> axpy(const SparseRow<F>& a, const SparseRow<F>& pivot, const F& factor, std::size_t idx)
    {
        SparseRow<F> out;
        out.reserve(a.size() + pivot.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < a.size() && a[i].first < pivot[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || pivot[j].first < a[i].first) {
                out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
                occurrences_[pivot[j].first].push_back(idx);
                ++j;
            } else {
                F v = a[i].second - factor * pivot[j].second;
                if (!qpart::is_zero(v))
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t num_cols_;
    std::vector<SparseRow<F>> rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::size_t> pivot_row_;
    /// Rows that may hold a column (stale entries are skipped on use).
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<std::size_t> free_cols_;
};

/// Rank of a set of vectors (each flattened to a dense row).
template <typename F>
std::size_t rank_of(const std::vector<std::vector<F>>& vectors)
{
    if (vectors.empty())
        return 0;
    SparseEchelon<F> ech(vectors.front().size());
    for (const auto& v : vectors) {
        SparseRow<F> row;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!qpart::is_zero(v[c]))
                row.emplace_back(static_cast<std::uint32_t>(c), v[c]);
        ech.add_row(std::move(row));
    }
    return ech.rank();
}

}  // namespace qpart
