#pragma once

// JSON forms of the library's values. Field elements are lowercase hex,
// bit vectors are "0b" strings with coordinate 0 first.

#include <nlohmann/json.hpp>

#include "bchcov/bch.hpp"
#include "bchcov/charsum.hpp"
#include "bchcov/codes.hpp"
#include "bchcov/construct.hpp"
#include "bchcov/cover.hpp"
#include "bchcov/gf2m.hpp"

namespace bchcov {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& f);
/// Rebuilds and re-validates the field; the generator, if present, must match.
FieldSpec field_from_json(const Json& j);

Json to_json(const BinaryCode& c);
BinaryCode code_from_json(const Json& j);

Json to_json(const ColumnSystem& cs);

Json pair_to_json(SyndromePair p);
SyndromePair pair_from_json(const FieldSpec& f, const Json& j);

Json to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const Json& j);

Json to_json(const BoundReport& b);
Json to_json(const CoverSolution& sol, bool verified);
Json to_json(const CharSumReport& r);
Json to_json(const EisensteinInt& z);

}  // namespace bchcov
