#pragma once

// JSON encodings shared by the CLI and the export files.
//
//   LaurentPoly      [[exponent, "num", "den"], ...] sorted by exponent
//   Permutation      one-line array, e.g. [2, 1, 3]
//   Composition      array of parts
//   HeckeElement     [{"perm": [...], "coeff": LaurentPoly}, ...] sorted by perm
//   TensorVector     [{"index": [...], "coeff": LaurentPoly}, ...]
//   action matrix    {"n", "r", "generator", "columns": [{"index", "terms": [{"index", "coeff"}]}]}
//   HomMatrix        {"source", "target", "source_basis", "target_basis", "rows", "cols",
//                     "matrix": row-major array of LaurentPoly}

#include "qpart/centralizer.hpp"
#include "qpart/coeff.hpp"
#include "qpart/hecke.hpp"
#include "qpart/qperm.hpp"
#include "qpart/symcomb.hpp"
#include "qpart/tensor.hpp"

#include <json.hpp>

namespace qpart {

using json = nlohmann::json;

void to_json(json& j, const LaurentPoly& p);
/// Throws std::invalid_argument on malformed input.
void from_json(const json& j, LaurentPoly& p);

void to_json(json& j, const Permutation& w);
void from_json(const json& j, Permutation& w);

void to_json(json& j, const Composition& c);
void to_json(json& j, const MultiIndex& m);

void to_json(json& j, const HeckeElement& h);
/// Needs the rank because the zero element carries no permutations.
HeckeElement hecke_from_json(const json& j, int n);

void to_json(json& j, const TensorVector& v);

json action_matrix_json(const TensorSpace& space, int generator);
void to_json(json& j, const HomMatrix& hom);

/// {"dim", "q_values", "dims", "agree", "half", "symbolic_dim"?, "basis"?}; basis
/// matrices (first specialization) are sparse [[row, col, "value"], ...].
json commutant_json(const CommutantResult& result, bool include_basis);

}  // namespace qpart
