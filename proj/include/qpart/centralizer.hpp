#pragma once

// Brute-force endomorphism algebras of tensor space: the commutant of the
// Hecke generators acting on V^{(x)r} (and of the generators of H_{(n-1,1)}
// for the half-integer case), computed by exact nullspaces of the Sylvester
// system X A_i = A_i X, plus the double centralizer check.

#include "qpart/coeff.hpp"
#include "qpart/linalg.hpp"
#include "qpart/tensor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qpart {

/// Basis of a commutant, flattened row-major. coordinates[k] is the flat
/// position where basis[k] is 1 and every other basis element vanishes, so
/// the k-th coordinate of any commutant element X is X.data()[coordinates[k]].
template <typename F>
struct CommutantSpace {
    std::size_t dim = 0;
    std::vector<Matrix<F>> basis;
    std::vector<std::size_t> coordinates;
};

/// Commutant of sparse generators on a space of dimension `dim`. With
/// want_basis false only the dimension is filled in.
template <typename F>
CommutantSpace<F> commutant_of(const std::vector<SparseMatrix<F>>& generators, std::size_t dim,
                               bool want_basis);

/// Dimension of the commutant of dense matrices, stopping once the rank of the
/// Sylvester system reaches max_rank (when given).
std::size_t commutant_dim_dense(const std::vector<Matrix<Rational>>& generators, std::size_t dim,
                                std::optional<std::size_t> max_rank = std::nullopt);

struct CommutantOptions {
    std::vector<Rational> q_values{Rational(2), Rational(3), Rational(7, 5)};
    bool symbolic = false;
    bool want_basis = false;
    std::uint64_t limit = TensorSpace::default_limit;
    /// Largest n^r accepted in symbolic mode.
    std::uint64_t symbolic_limit = 16;
};

struct SpecializedCommutant {
    Rational q0;
    std::size_t dim = 0;
    std::vector<Matrix<Rational>> basis;
};

struct CommutantResult {
    int n = 0;
    int r = 0;
    bool half = false;
    std::vector<SpecializedCommutant> specializations;
    /// Dimensions agree across all specializations (and symbolic, if run).
    bool agree = true;
    std::optional<std::size_t> symbolic_dim;
    std::vector<Matrix<RationalFunction>> symbolic_basis;

    std::size_t dim() const;
};

/// End_H(V^{(x)r}). Throws DimensionLimitExceeded (n^r over the limit, or
/// symbolic mode over symbolic_limit) and ZeroSpecialization.
CommutantResult commutant_basis(int n, int r, const CommutantOptions& options = {});
/// End_{H_{(n-1,1)}}(V^{(x)r}): commutant of T_1..T_{n-2} only.
CommutantResult half_commutant_basis(int n, int r, const CommutantOptions& options = {});

/// Generator matrices of H or H_{(n-1,1)} specialized at q0.
std::vector<SparseMatrix<Rational>> specialized_generators(int n, int r, const Rational& q0, bool half,
                                                           std::uint64_t limit = TensorSpace::default_limit);

/// Matrices of T_w on V^{(x)r} at q0, for all w in S_n (sorted by w).
std::vector<Matrix<Rational>> t_w_matrices(int n, int r, const Rational& q0,
                                           std::uint64_t limit = TensorSpace::default_limit);

struct DoubleCentralizerReport {
    int n = 0;
    int r = 0;
    Rational q0;
    std::size_t commutant_dim = 0;
    std::size_t image_dim = 0;      ///< dim span{T_w matrices}
    std::size_t bicommutant_dim = 0;
    bool image_commutes = false;    ///< every T_w matrix commutes with the commutant
    bool pass = false;
};

DoubleCentralizerReport double_centralizer_check(int n, int r, const Rational& q0,
                                                 std::uint64_t limit = TensorSpace::default_limit);

struct StructureConstants {
    std::size_t dim = 0;
    /// gamma[(a * dim + b) * dim + c]: coefficient of basis c in basis a * basis b.
    std::vector<Rational> gamma;
    /// Coordinates of the identity matrix.
    std::vector<Rational> identity;
    bool closed = false;       ///< every product re-expands with zero residual
    bool associative = false;  ///< (ab)c = a(bc) on all basis triples
};

StructureConstants structure_constants(int n, int r, const Rational& q0,
                                       std::uint64_t limit = TensorSpace::default_limit);

/// Coordinates of X in a commutant basis; nullopt if X is not in its span.
template <typename F>
std::optional<std::vector<F>> expand_in(const CommutantSpace<F>& space, const Matrix<F>& x);

}  // namespace qpart
