#pragma once

// JSON encodings. Scalars are strings in the textual syntax ("3/4+1/2i",
// "5 mod 7"); matrices are {"field": "Q(i)", "rows": [[...], ...]};
// subspaces add "ambient_dim" and use their canonical RREF rows.

#include <json.hpp>

#include "qlogic/subspace.hpp"

namespace qlogic {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& x);

Matrix matrix_from_json(const Json& j);
/// Re-canonicalises the rows, so hand-written bases are accepted.
Subspace subspace_from_json(const Json& j);

}  // namespace qlogic
