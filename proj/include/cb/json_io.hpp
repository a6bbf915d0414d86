#pragma once

// JSON serialization for every public value type. Layouts are part of
// the tool's output contract: keys are emitted in alphabetical order
// (nlohmann's object ordering) and polynomial terms in the canonical
// lexicographic exponent order, so serialization is byte-deterministic.

#include <json.hpp>

#include "cb/colored_burau.hpp"
#include "cb/freeness.hpp"
#include "cb/laurent.hpp"
#include "cb/poly_matrix.hpp"
#include "cb/rational_matrix.hpp"

namespace cb {

// {"nvars": n, "terms": [{"coeff": "<integer>", "exps": [..]}, ...]}
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

// {"n": n, "rows": [[<poly>, ...], ...]}
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j);

// {"matrix": ..., "perm": [images, 1-based]}
nlohmann::json cb_element_to_json(const CBElement& e);
CBElement cb_element_from_json(const nlohmann::json& j);

// Integer matrices (basis / blocks): {"n": n, "rows": [[int, ...], ...]}.
nlohmann::json int_matrix_to_json(const RationalMatrix& m);
RationalMatrix int_matrix_from_json(const nlohmann::json& j);

// {"n", "j", "jprime", "P", "blocks": {"j", "jprime"}, "zero_pattern_ok",
//  "search_depth", "relation"}; the structural fields are null for the
// search-only pair (2,3), and "relation" is null when none was found.
nlohmann::json certificate_to_json(const FreePairCertificate& c);

} // namespace cb
