#include "qpart/serialize.hpp"

namespace qpart {

void to_json(json& j, const LaurentPoly& p)
{
    j = json::array();
    for (const auto& [e, c] : p.terms())
        j.push_back(json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
}

void from_json(const json& j, LaurentPoly& p)
{
    if (!j.is_array())
        throw std::invalid_argument("LaurentPoly JSON must be an array");
    LaurentPoly out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_string()
            || !term[2].is_string())
            throw std::invalid_argument("LaurentPoly term must be [exponent, \"num\", \"den\"]");
        Rational c = parse_rational(term[1].get<std::string>() + "/" + term[2].get<std::string>());
        out.add_scaled(LaurentPoly::monomial(c, term[0].get<int>()), 1);
    }
    p = std::move(out);
}

void to_json(json& j, const Permutation& w)
{
    j = w.one_line();
}

void from_json(const json& j, Permutation& w)
{
    w = Permutation(j.get<std::vector<int>>());
}

void to_json(json& j, const Composition& c)
{
    j = c.parts();
}

void to_json(json& j, const MultiIndex& m)
{
    j = m.entries();
}

void to_json(json& j, const HeckeElement& h)
{
    j = json::array();
    for (const auto& [w, c] : h.terms())
        j.push_back({{"perm", w}, {"coeff", c}});
}

HeckeElement hecke_from_json(const json& j, int n)
{
    HeckeElement h(n);
    for (const auto& term : j)
        h.add_term(term.at("perm").get<Permutation>(), term.at("coeff").get<LaurentPoly>());
    return h;
}

void to_json(json& j, const TensorVector& v)
{
    j = json::array();
    for (const auto& [idx, c] : v.terms())
        j.push_back({{"index", idx}, {"coeff", c}});
}

json action_matrix_json(const TensorSpace& space, int generator)
{
    const auto m = generator_matrix(space, generator);
    json columns = json::array();
    for (std::size_t c = 0; c < m.dim; ++c) {
        json terms = json::array();
        for (const auto& [r, v] : m.columns[c])
            terms.push_back({{"index", space.multi_index(r)}, {"coeff", v}});
        columns.push_back({{"index", space.multi_index(c)}, {"terms", std::move(terms)}});
    }
    return {{"n", space.n()}, {"r", space.r()}, {"generator", generator}, {"columns", std::move(columns)}};
}

void to_json(json& j, const HomMatrix& hom)
{
    json entries = json::array();
    for (std::size_t r = 0; r < hom.matrix.rows(); ++r)
        for (std::size_t c = 0; c < hom.matrix.cols(); ++c)
            entries.push_back(hom.matrix(r, c));
    j = {{"source", hom.source},
         {"target", hom.target},
         {"source_basis", hom.source_basis},
         {"target_basis", hom.target_basis},
         {"rows", hom.matrix.rows()},
         {"cols", hom.matrix.cols()},
         {"matrix", std::move(entries)}};
}

json commutant_json(const CommutantResult& result, bool include_basis)
{
    json q_values = json::array();
    json dims = json::array();
    for (const auto& s : result.specializations) {
        q_values.push_back(s.q0.get_str());
        dims.push_back(s.dim);
    }
    json out = {{"n", result.n},
                {"r", result.r},
                {"half", result.half},
                {"dim", result.dim()},
                {"q_values", std::move(q_values)},
                {"dims", std::move(dims)},
                {"agree", result.agree}};
    if (result.symbolic_dim)
        out["symbolic_dim"] = *result.symbolic_dim;
    if (include_basis && !result.specializations.empty()) {
        json basis = json::array();
        for (const auto& m : result.specializations.front().basis) {
            json entries = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (m(r, c) != 0)
                        entries.push_back(json::array({r, c, m(r, c).get_str()}));
            basis.push_back(std::move(entries));
        }
        out["basis"] = std::move(basis);
    }
    return out;
}

}  // namespace qpart
