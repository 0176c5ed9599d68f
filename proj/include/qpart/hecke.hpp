#pragma once

// The Iwahori-Hecke algebra H_q(S_n) in the standard basis {T_w}, with the
// quadratic relation T_i^2 = q + (q-1) T_i.

#include "qpart/coeff.hpp"
#include "qpart/symcomb.hpp"

#include <map>
#include <stdexcept>

namespace qpart {

class RankMismatch : public std::invalid_argument {
public:
    RankMismatch() : std::invalid_argument("operands have different rank n") {}
};

class HeckeElement {
public:
    using TermMap = std::map<Permutation, LaurentPoly>;

    explicit HeckeElement(int n) : n_(n) {}

    /// c * T_w
    static HeckeElement basis(const Permutation& w, const LaurentPoly& c = 1);
    static HeckeElement one(int n) { return basis(Permutation::identity(n)); }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const Permutation& w) const;

    /// Adds c * T_w.
    void add_term(const Permutation& w, const LaurentPoly& c);

    HeckeElement& operator+=(const HeckeElement& other);
    HeckeElement& operator-=(const HeckeElement& other);
    HeckeElement& operator*=(const LaurentPoly& c);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
    friend HeckeElement operator*(const LaurentPoly& c, HeckeElement a) { return a *= c; }
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

    friend bool operator==(const HeckeElement& a, const HeckeElement& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

HeckeElement t_w(const Permutation& w);
/// T_i * h.
HeckeElement mul_gen_left(int i, const HeckeElement& h);
/// h * T_i.
HeckeElement mul_gen_right(const HeckeElement& h, int i);
/// Throws RankMismatch when a.n() != b.n().
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement inverse_t_w(const Permutation& w);
/// x_lambda = sum of T_w over Y_lambda.
HeckeElement x_lambda(const Composition& lambda);
/// y_lambda = sum of (-q)^{-l(w)} T_w over Y_lambda.
HeckeElement y_lambda(const Composition& lambda);
/// Sum of q^{l(w)} over S_n.
LaurentPoly poincare_polynomial(int n);

}  // namespace qpart
