#include "qpart/coeff.hpp"

#include <sstream>

namespace qpart {

namespace {

// mpq_class(a, b) built from integers is not reduced automatically.
Rational canonical(Rational x)
{
    x.canonicalize();
    return x;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational x;
    if (x.set_str(text, 10) != 0 || x.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + text);
    x.canonicalize();
    return x;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

LaurentPoly::LaurentPoly(const Rational& c)
{
    if (c != 0)
        terms_.emplace(0, canonical(c));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms)
{
    for (const auto& [e, c] : terms)
        add_scaled(LaurentPoly::monomial(c, e), 1);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent)
{
    LaurentPoly p;
    if (coeff != 0)
        p.terms_.emplace(exponent, canonical(coeff));
    return p;
}

Rational LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPoly::max_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Rational LaurentPoly::leading_coeff() const
{
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Rational LaurentPoly::eval(const Rational& q_value) const
{
    const Rational q0 = canonical(q_value);
    if (q0 == 0)
        throw ZeroSpecialization();
    if (terms_.empty())
        return 0;
    // Horner from the top exponent down, then rescale by q0^min.
    Rational acc = 0;
    int prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int e = prev; e > it->first; --e)
            acc *= q0;
        acc += it->second;
        prev = it->first;
    }
    int low = prev;
    Rational scale = 1;
    for (int e = 0; e < (low < 0 ? -low : low); ++e)
        scale *= q0;
    if (low < 0)
        acc /= scale;
    else
        acc *= scale;
    return acc;
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& other, const Rational& scale, int shift)
{
    const Rational c = canonical(scale);
    if (c == 0)
        return *this;
    for (const auto& [e, v] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e + shift, 0);
        it->second += c * v;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    return add_scaled(other, 1);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    return add_scaled(other, -1);
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scale)
{
    const Rational c = canonical(scale);
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_)
        out.add_scaled(b, c, e);
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const
{
    LaurentPoly out;
    for (const auto& [e, v] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e + shift, v);
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "q";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b)
{
    return a + b;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b)
{
    return a * b;
}

Rational lp_eval(const LaurentPoly& p, const Rational& q0)
{
    return p.eval(q0);
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.min_degree() < 0 || b.min_degree() < 0)
        throw std::domain_error("poly_divmod expects ordinary polynomials");
    LaurentPoly quot;
    LaurentPoly rem = a;
    const int db = b.max_degree();
    const Rational lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_degree() >= db) {
        int shift = rem.max_degree() - db;
        Rational c = rem.leading_coeff() / lb;
        quot.add_scaled(LaurentPoly(1), c, shift);
        rem.add_scaled(b, -c, shift);
    }
    return {std::move(quot), std::move(rem)};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b)
{
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a *= Rational(1) / a.leading_coeff();
    return a;
}

}  // namespace qpart
