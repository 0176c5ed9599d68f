#pragma once

// Dimensions on the GL_n(q) side: q-integers, Gaussian multinomials
// [G : P_lambda], and the dimension polynomial of the q-analogue of tensor
// space, a sum of permutation modules on parabolic cosets.

#include "qpart/coeff.hpp"
#include "qpart/symcomb.hpp"

namespace qpart {

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
LaurentPoly q_integer(int m);
/// [m]_q! = [1]_q [2]_q ... [m]_q.
LaurentPoly q_factorial(int m);
/// Gaussian binomial [m choose j]_q.
LaurentPoly gaussian_binomial(int m, int j);
/// [n]_q! / prod [lambda_i]_q!, built from Gaussian binomials.
LaurentPoly gaussian_multinomial(const Composition& lambda);
/// sum_{k=1}^{min(n,r)} s(r,k) [G : P_{(n-k,1^k)}].
LaurentPoly tq_dimension(int n, int r);

}  // namespace qpart
