#pragma once

// q-permutation modules M_q^lambda = H x_lambda with basis {T_d x_lambda :
// d in D_lambda}, homomorphisms between them, and the multiplicity calculus
// for restriction to H_{(n-1,1)} and induction back.

#include "qpart/coeff.hpp"
#include "qpart/hecke.hpp"
#include "qpart/linalg.hpp"
#include "qpart/symcomb.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qpart {

/// Element of M_q^lambda in the basis {T_d x_lambda}, indexed like
/// QPermModule::basis().
using QPermVector = std::vector<LaurentPoly>;

class QPermModule {
public:
    explicit QPermModule(Composition shape);

    const Composition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    std::size_t dim() const { return basis_.size(); }
    /// D_lambda in sorted order.
    const std::vector<Permutation>& basis() const { return basis_; }
    /// Throws NotDistinguished if d is not in D_lambda.
    std::size_t index_of(const Permutation& d) const;

    /// T_i T_d x_lambda as (basis index, coefficient) pairs.
    std::vector<std::pair<std::size_t, LaurentPoly>> act_gen(int i, std::size_t basis_index) const;
    QPermVector act_gen(int i, const QPermVector& v) const;
    QPermVector act(const HeckeElement& h, const QPermVector& v) const;
    /// Matrix of T_i; column k is the image of the k-th basis vector.
    Matrix<LaurentPoly> generator_matrix(int i) const;

private:
    Composition shape_;
    std::vector<Permutation> basis_;
    std::map<Permutation, std::size_t> index_;
};

/// A homomorphism M_q^source -> M_q^target; column k of matrix is the image
/// of the k-th source basis vector, rows follow the target basis.
struct HomMatrix {
    Composition source;
    Composition target;
    std::vector<Permutation> source_basis;
    std::vector<Permutation> target_basis;
    Matrix<LaurentPoly> matrix;
};

/// Canonical (minimal length) representative of Y_mu w Y_lambda.
Permutation double_coset_min(const Composition& mu, const Permutation& w, const Composition& lambda);

/// phi_d : x_mu -> sum of T_w over Y_mu d Y_lambda, extended H-linearly.
/// Throws NotDistinguished unless d is in D_{mu,lambda}.
HomMatrix phi_d(const Composition& mu, const Composition& lambda, const Permutation& d);

std::size_t hom_dim(const Composition& mu, const Composition& lambda);

/// Rank of P_q(n,r) from the Hom bases between hook q-permutation modules.
Natural qpartition_dim(int n, int r);
/// Rank of P_q(n, r + 1/2), computed with double cosets inside Y_{(n-1,1)}.
Natural half_qpartition_dim(int n, int r);

/// Multiplicity of M_q^{(n-k,1^k)} keyed by k; k = 0 is the trivial module.
using MultiplicityVector = std::map<int, Natural>;

/// Res to H_{(n-1,1)}: M^{(n-k,1^k)} -> k M^{(n-k,1^k)}(lambda) + M^{(n-k-1,1^{k+1})}(lambda),
/// the second summand only when k < n.
MultiplicityVector restrict_multiplicities(const MultiplicityVector& m, int n);
/// Ind Res; same labels as restrict_multiplicities since Ind M^mu(lambda) = M^mu.
MultiplicityVector indres_step(const MultiplicityVector& m, int n);

}  // namespace qpart
