#include "qpart/linalg.hpp"

namespace qpart {

RationalFunction::RationalFunction(const LaurentPoly& p)
{
    // q^-k terms move into the denominator.
    int low = p.min_degree();
    if (low < 0) {
        num_ = p.shifted(-low);
        den_ = LaurentPoly::q_pow(-low);
    } else {
        num_ = p;
        den_ = 1;
    }
    normalize();
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero())
        throw std::domain_error("rational function with zero denominator");
    int shift = std::min(0, std::min(num.min_degree(), den.min_degree()));
    num_ = num.shifted(-shift);
    den_ = den.shifted(-shift);
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!(g == LaurentPoly(1))) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero())
        return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

std::string RationalFunction::to_string() const
{
    if (den_ == LaurentPoly(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qpart
