#ifndef OCTADET_JSON_IO_HPP
#define OCTADET_JSON_IO_HPP

#include <json.hpp>

#include "octadet/hyperoct.hpp"
#include "octadet/matrix.hpp"

namespace octadet {

using json = nlohmann::ordered_json;

// Elements: Integers -> JSON integer (decimal string beyond int64);
// IntegersMod -> integer in [0, m); Poly -> array of inner encodings,
// ascending degree.
json element_to_json(const Element& e);
Element element_from_json(const RingPtr& ring, const json& j);

// {"ring": "<spec>", "rows": r, "cols": c, "entries": [[...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, RingPtr ring_override = nullptr);

// {"ring": "<spec>", "degree": n, "coeffs": [...]}
json coeffs_to_json(const CharPolyCoeffs& c);
CharPolyCoeffs coeffs_from_json(const json& j, RingPtr ring_override = nullptr);

// {"n": 4, "members": [1, 3]}
json subset_to_json(const Subset& s);
Subset subset_from_json(const json& j);

// {"image": [2, 1, 3]}
json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

}  // namespace octadet

#endif
