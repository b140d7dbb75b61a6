#pragma once

#include <json.hpp>

#include "gmnrep/affine_a2.hpp"
#include "gmnrep/algebra.hpp"
#include "gmnrep/certificate.hpp"
#include "gmnrep/matrix.hpp"
#include "gmnrep/partition.hpp"
#include "gmnrep/representation.hpp"
#include "gmnrep/tableau.hpp"

namespace gmnrep {

using json = nlohmann::ordered_json;

/// Reduced fraction string "p/q" (or "p").
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"m": m, "coeffs": ["p/q", ...]}
json to_json(const CycRat& c);
CycRat cycrat_from_json(const json& j);

/// {"m", "n", "residues", "perm"}; perm is one-line and 1-based.
json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

/// {"m", "n", "terms": [{"g", "c"}]} in canonical term order.
json to_json(const AlgebraElement& a);
AlgebraElement algebra_element_from_json(const json& j);

/// {"m", "parts"}
json to_json(const MPartition& p);
MPartition mpartition_from_json(const json& j);

/// {"shape", "rows"}
json to_json(const MTableau& t);
MTableau mtableau_from_json(const json& j);

/// {"m", "p": [root labels], "c": [contents]}
json to_json(const ContentString& s);
/// "m" may be omitted when m_hint > 0.
ContentString content_string_from_json(const json& j, int m_hint = 0);

/// Array of rows of CycRat objects.
json to_json(const Matrix& a);
Matrix matrix_from_json(const json& j, int m);

json to_json(const Certificate& c);

/// {"m", "n", "shape", "dim", "basis", "t", "s", "form"}
json representation_to_json(const Representation& rep, const std::vector<Rational>& form);
Representation representation_from_json(const json& j);

json to_json(const ComplexMatrix& a);
json to_json(const A2Matrices& mats);
json to_json(const A2Params& p);

}  // namespace gmnrep
