#pragma once

#include <json.hpp>

#include "dslice/integer_linalg.hpp"
#include "dslice/partitions.hpp"
#include "dslice/rational.hpp"

namespace dslice {

using Json = nlohmann::json;

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const Integer& v);
/// "p/q", or "p" for integers.
Json to_json(const Rational& r);
Json to_json(const BigVector& v);
Json to_json(const IntMatrix& m);

/// {"n": int, "entries": [[int]]}. Throws PreconditionError on a malformed
/// document.
IntMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const IntMatrix& m);

/// {"n": int, "lk": [[int]], "slice": [bool]}.
LinkData link_data_from_json(const Json& doc);

}  // namespace dslice
