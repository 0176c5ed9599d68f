#pragma once

// Symmetric group combinatorics: permutations in one-line notation, Young
// subgroups of compositions, row standard tableaux and distinguished coset
// representatives.

#include "qpart/coeff.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpart {

class NotDistinguished : public std::invalid_argument {
public:
    explicit NotDistinguished(const std::string& what) : std::invalid_argument(what) {}
};

/// A permutation w of {1..n}, stored in one-line notation: w(i) = images[i-1].
/// Products compose right to left: (v * w)(i) = v(w(i)).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The simple transposition s_i = (i i+1) in S_n, 1 <= i <= n-1.
    static Permutation simple(int n, int i);
    /// s_{word[0]} s_{word[1]} ... in S_n.
    static Permutation from_word(int n, const std::vector<int>& word);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    /// Number of inversions.
    int length() const;
    /// True if l(s_i w) = l(w) - 1, i.e. w^-1(i) > w^-1(i+1).
    bool has_left_descent(int i) const;
    /// True if l(w s_i) = l(w) - 1, i.e. w(i) > w(i+1).
    bool has_right_descent(int i) const;
    /// s_i * w: swaps the values i and i+1.
    Permutation left_mul_simple(int i) const;

    friend Permutation operator*(const Permutation& v, const Permutation& w);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.images_ <=> b.images_;
    }

    std::string to_string() const;

private:
    std::vector<int> images_;
};

int length(const Permutation& w);
/// Indices i_1..i_k with w = s_{i_1} ... s_{i_k} and k = length(w).
std::vector<int> reduced_word(const Permutation& w);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// A composition of n; zero parts are kept verbatim.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument on a negative part.
    explicit Composition(std::vector<int> parts);

    /// The hook (n-k, 1^k). Requires 0 <= k <= n.
    static Composition hook(int n, int k);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    std::size_t num_parts() const { return parts_.size(); }

    /// Row (0-based part index) holding the letter i of the initial tableau.
    int block_of(int i) const;
    /// True if w permutes each block {a_j+1, ..., a_j+parts[j]} of {1..n} into itself.
    bool in_young_subgroup(const Permutation& w) const;
    /// Generators s_i of the Young subgroup Y_lambda.
    std::vector<int> young_generators() const;
    /// |Y_lambda| = prod parts[j]!.
    Natural young_order() const;
    /// Elements of Y_lambda, sorted.
    std::vector<Permutation> young_subgroup() const;
    /// n! / prod parts[j]!.
    Natural num_cosets() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// A row standard tableau; rows may be empty (zero parts of the shape).
class RowStandardTableau {
public:
    RowStandardTableau() = default;
    /// Throws std::invalid_argument unless rows hold exactly {1..n}, each increasing.
    explicit RowStandardTableau(std::vector<std::vector<int>> rows);

    /// The initial tableau t^lambda: 1..n filled row by row left to right.
    static RowStandardTableau initial(const Composition& shape);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Composition shape() const;
    int n() const;
    /// 0-based row index of entry v.
    int row_of(int v) const;

    friend bool operator==(const RowStandardTableau&, const RowStandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// The unique w with w * t^lambda = s under the letter action on entries.
Permutation d_of_tableau(const RowStandardTableau& s);
/// d * t^lambda.
RowStandardTableau tableau_of_coset_rep(const Permutation& d, const Composition& shape);

/// Row standard tableaux of the given shape, ordered like coset_reps().
std::vector<RowStandardTableau> row_standard_tableaux(const Composition& shape);

/// Distinguished left coset representatives D_lambda, sorted.
std::vector<Permutation> coset_reps(const Composition& lambda);
/// True if d is increasing on every block of lambda.
bool is_distinguished(const Permutation& d, const Composition& lambda);

/// D_{mu,lambda} = D_mu^-1 cap D_lambda, sorted.
std::vector<Permutation> double_coset_reps(const Composition& mu, const Composition& lambda);

/// tau with Y_tau = d^-1 Y_mu d cap Y_lambda; zero parts dropped.
/// Throws NotDistinguished unless d is in D_{mu,lambda}.
Composition intersect_composition(const Composition& mu, const Permutation& d,
                                  const Composition& lambda);

/// Stirling numbers of the second kind, s(r,k) = k s(r-1,k) + s(r-1,k-1).
Natural stirling2(int r, int k);
Natural bell(int m);
Natural factorial(int n);

}  // namespace qpart
