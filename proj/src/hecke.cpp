#include "qpart/hecke.hpp"

#include <sstream>

namespace qpart {

HeckeElement HeckeElement::basis(const Permutation& w, const LaurentPoly& c)
{
    HeckeElement h(w.size());
    h.add_term(w, c);
    return h;
}

LaurentPoly HeckeElement::coeff(const Permutation& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentPoly& c)
{
    if (w.size() != n_)
        throw RankMismatch();
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other)
{
    if (other.n_ != n_)
        throw RankMismatch();
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other)
{
    if (other.n_ != n_)
        throw RankMismatch();
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b)
{
    return mul(a, b);
}

std::string HeckeElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*T" << w.to_string();
        first = false;
    }
    return os.str();
}

HeckeElement t_w(const Permutation& w)
{
    return HeckeElement::basis(w);
}

HeckeElement mul_gen_left(int i, const HeckeElement& h)
{
    const int n = h.n();
    if (i < 1 || i >= n)
        throw std::out_of_range("generator index out of range");
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_minus_1 = q - 1;
    HeckeElement out(n);
    for (const auto& [w, c] : h.terms()) {
        Permutation sw = w.left_mul_simple(i);
        if (!w.has_left_descent(i)) {
            out.add_term(sw, c);
        } else {
            out.add_term(sw, c * q);
            out.add_term(w, c * q_minus_1);
        }
    }
    return out;
}

HeckeElement mul_gen_right(const HeckeElement& h, int i)
{
    const int n = h.n();
    if (i < 1 || i >= n)
        throw std::out_of_range("generator index out of range");
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_minus_1 = q - 1;
    const Permutation s = Permutation::simple(n, i);
    HeckeElement out(n);
    for (const auto& [w, c] : h.terms()) {
        Permutation ws = w * s;
        if (!w.has_right_descent(i)) {
            out.add_term(ws, c);
        } else {
            out.add_term(ws, c * q);
            out.add_term(w, c * q_minus_1);
        }
    }
    return out;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b)
{
    if (a.n() != b.n())
        throw RankMismatch();
    HeckeElement out(a.n());
    for (const auto& [w, c] : a.terms()) {
        // T_w b = T_{i_1}(T_{i_2}(... T_{i_k} b)).
        auto word = reduced_word(w);
        HeckeElement acc = b;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = mul_gen_left(*it, acc);
        out += acc * c;
    }
    return out;
}

HeckeElement inverse_t_w(const Permutation& w)
{
    const int n = w.size();
    const LaurentPoly qinv = LaurentPoly::q_pow(-1);
    HeckeElement out = HeckeElement::one(n);
    // T_w^-1 = T_{t_k}^-1 ... T_{t_1}^-1; build by right-multiplying in that order.
    auto word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HeckeElement gen_inv(n);
        gen_inv.add_term(Permutation::identity(n), qinv - 1);
        gen_inv.add_term(Permutation::simple(n, *it), qinv);
        out = mul(out, gen_inv);
    }
    return out;
}

HeckeElement x_lambda(const Composition& lambda)
{
    HeckeElement out(lambda.n());
    for (const auto& w : lambda.young_subgroup())
        out.add_term(w, 1);
    return out;
}

HeckeElement y_lambda(const Composition& lambda)
{
    HeckeElement out(lambda.n());
    for (const auto& w : lambda.young_subgroup()) {
        int l = w.length();
        out.add_term(w, LaurentPoly::monomial(l % 2 == 0 ? 1 : -1, -l));
    }
    return out;
}

LaurentPoly poincare_polynomial(int n)
{
    LaurentPoly out;
    for (const auto& w : all_permutations(n))
        out += LaurentPoly::q_pow(w.length());
    return out;
}

}  // namespace qpart
