#pragma once

// Tensor space V^{(x)r}, dim V = n, with the q-deformed letter permutation
// action of H_q(S_n) and its orbit decomposition into q-permutation modules.

#include "qpart/coeff.hpp"
#include "qpart/hecke.hpp"
#include "qpart/linalg.hpp"
#include "qpart/symcomb.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpart {

class GeneratorOutOfRange : public std::out_of_range {
public:
    GeneratorOutOfRange(int i, int n);
};

class DimensionLimitExceeded : public std::length_error {
public:
    DimensionLimitExceeded(int n, int r, std::uint64_t limit);
};

/// A basis tensor e_{j_1} (x) ... (x) e_{j_r}; letters are 1-based.
class MultiIndex {
public:
    MultiIndex() = default;
    /// Throws std::invalid_argument if some entry lies outside {1..n}.
    MultiIndex(std::vector<int> entries, int n);

    int r() const { return static_cast<int>(entries_.size()); }
    int operator[](int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Swaps the letters i and i+1 wherever they occur.
    MultiIndex swap_letters(int i) const;
    /// Applies w to every letter.
    MultiIndex permute_letters(const Permutation& w) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

/// A set partition of {1..r}, blocks sorted internally and ordered by their
/// smallest elements.
using SetPartition = std::vector<std::vector<int>>;

struct ColoredSetPartition {
    SetPartition blocks;
    std::vector<int> colors;

    friend bool operator==(const ColoredSetPartition&, const ColoredSetPartition&) = default;
};

/// Smallest 1-based position of the letter i in j, or 0 if absent.
int first(const MultiIndex& j, int letter);
ColoredSetPartition colored_partition(const MultiIndex& j);
/// Inverse of colored_partition.
MultiIndex multi_index_of(const ColoredSetPartition& p, int n);
/// The hook tableau s(e_j): unused letters in row one, then the block colors.
RowStandardTableau tableau_of(const MultiIndex& j, int n);

/// Set partitions of {1..r} with at most max_blocks blocks, in restricted
/// growth string order.
std::vector<SetPartition> set_partitions(int r, int max_blocks);

struct Orbit {
    SetPartition partition;
    Natural size;  ///< n (n-1) ... (n-k+1)
};

std::vector<Orbit> orbits(int n, int r);

/// Index bookkeeping for the basis of V^{(x)r}, ordered lexicographically.
class TensorSpace {
public:
    static constexpr std::uint64_t default_limit = 4096;

    /// Throws DimensionLimitExceeded if n^r > limit.
    TensorSpace(int n, int r, std::uint64_t limit = default_limit);

    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t dim() const { return dim_; }

    std::size_t index_of(const MultiIndex& j) const;
    MultiIndex multi_index(std::size_t idx) const;

private:
    int n_;
    int r_;
    std::size_t dim_;
};

/// n^r, or nullopt when it exceeds limit.
std::optional<std::uint64_t> checked_power(int n, int r, std::uint64_t limit);

class TensorVector {
public:
    using TermMap = std::map<MultiIndex, LaurentPoly>;

    TensorVector(int n, int r) : n_(n), r_(r) {}
    static TensorVector basis(const MultiIndex& j, int n, const LaurentPoly& c = 1);

    int n() const { return n_; }
    int r() const { return r_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const MultiIndex& j) const;

    void add_term(const MultiIndex& j, const LaurentPoly& c);
    TensorVector& operator+=(const TensorVector& other);
    TensorVector& operator*=(const LaurentPoly& c);

    friend bool operator==(const TensorVector& a, const TensorVector& b)
    {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    /// Terms in lexicographic multi-index order, e.g. "(q - 1)*e(1) + (q)*e(2)".
    std::string to_string() const;

private:
    int n_;
    int r_;
    TermMap terms_;
};

/// Image of a single basis tensor under T_i: one or two terms.
std::vector<std::pair<MultiIndex, LaurentPoly>> act_gen_basis(int i, const MultiIndex& j, int n);
/// Throws GeneratorOutOfRange unless 1 <= i <= n-1.
TensorVector act_gen(int i, const TensorVector& v);
/// Throws RankMismatch unless h.n() == v.n().
TensorVector act(const HeckeElement& h, const TensorVector& v);

/// Matrix of T_i on the lexicographic basis of V^{(x)r}.
SparseMatrix<LaurentPoly> generator_matrix(const TensorSpace& space, int i);
/// Matrices of T_1..T_{n-1}, index 0 holding T_1.
std::vector<SparseMatrix<LaurentPoly>> generator_matrices(const TensorSpace& space);
SparseMatrix<Rational> specialize(const SparseMatrix<LaurentPoly>& m, const Rational& q0);

struct RelationReport {
    bool ok = true;
    std::size_t checks = 0;
    std::optional<std::string> counterexample;
};

/// Checks T_iT_j = T_jT_i (|i-j| >= 2), the braid relation and the quadratic
/// relation on every basis tensor.
RelationReport verify_relations(int n, int r, std::uint64_t limit = TensorSpace::default_limit);

struct OrbitCorrespondence {
    Composition shape;  ///< (n-k, 1^k)
    /// e_j <-> T_d x_shape, sorted by multi-index.
    std::vector<std::pair<MultiIndex, Permutation>> pairs;
    bool equivariant = false;
};

/// Basis correspondence between the orbit of P and M_q^{(n-k,1^k)}, with a flag
/// recording whether every T_i acts identically on both sides.
OrbitCorrespondence orbit_iso(int n, int r, const SetPartition& partition);

}  // namespace qpart
