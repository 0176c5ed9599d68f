#pragma once

// Coefficient ring Q[q, q^-1]: sparse Laurent polynomials with exact
// rational coefficients, and their specialization at nonzero rationals.

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpart {

using Rational = mpq_class;
using Natural = mpz_class;

/// Raised when q is specialized to 0; q has to stay a unit.
class ZeroSpecialization : public std::domain_error {
public:
    ZeroSpecialization() : std::domain_error("q cannot be specialized to 0") {}
};

/// Parses "3", "-7/5" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

class LaurentPoly {
public:
    using TermMap = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT: constants convert implicitly
    LaurentPoly(const Rational& c);                   // NOLINT
    LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms);

    static LaurentPoly monomial(const Rational& coeff, int exponent);
    /// The indeterminate q.
    static LaurentPoly q() { return monomial(1, 1); }
    static LaurentPoly q_pow(int exponent) { return monomial(1, exponent); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(int exponent) const;

    /// Lowest and highest exponents; both 0 for the zero polynomial.
    int min_degree() const;
    int max_degree() const;
    Rational leading_coeff() const;

    Rational eval(const Rational& q0) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& c);
    /// Adds c * q^shift * other in place.
    LaurentPoly& add_scaled(const LaurentPoly& other, const Rational& c, int shift = 0);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiplies by q^shift.
    LaurentPoly shifted(int shift) const;

    /// Human readable form, highest exponent first, e.g. "q^2 - 1", "-q^-1 + 3/2".
    std::string to_string() const;

private:
    TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
Rational lp_eval(const LaurentPoly& p, const Rational& q0);

// Ordinary polynomial helpers; inputs must have min_degree() >= 0.

/// Euclidean division of polynomials over Q. Throws std::domain_error on a
/// zero divisor or a Laurent (negative exponent) argument.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace qpart
