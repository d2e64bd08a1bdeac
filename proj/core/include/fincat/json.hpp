#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fincat/coslice.hpp"
#include "fincat/finset.hpp"
#include "fincat/order.hpp"
#include "fincat/ran.hpp"

namespace fincat {

using Json = nlohmann::ordered_json;

Json to_json(const FinSet& x);
Json to_json(const FinFn& f);
Json to_json(const FinRel& r);
Json to_json(const Partition& p);
Json to_json(const FinPreorder& x);
Json to_json(const MonotoneMap& f);
Json to_json(const CoslObj& x);
Json to_json(const CoslMor& f);
Json to_json(const SynObj& x);
/// {"src", "dst", "map"}; the endpoints are included so the value stands alone.
Json to_json(const SynMor& f);
Json to_json(const RAnObj& x);

// Parsers validate every invariant of the target type and throw
// InvariantViolation with the first failure. Malformed JSON (wrong types,
// missing keys) is reported the same way.
FinSet finset_from_json(const Json& j);
FinFn finfn_from_json(const Json& j);
FinRel finrel_from_json(const Json& j);
/// Class ids must be 0..k-1 with every id used; the result is canonicalized.
Partition partition_from_json(const Json& j);
FinPreorder preorder_from_json(const Json& j);
FinPoset poset_from_json(const Json& j);
/// Both endpoints are parsed as preorders.
MonotoneMap monotone_from_json(const Json& j);
CoslObj coslobj_from_json(const Json& j);
SynObj synobj_from_json(const Json& j);
/// Reads "map"; "src" and "dst" are taken from the JSON when present.
SynMor synmor_from_json(const Json& j);
SynMor synmor_from_json(const Json& j, const SynObj& src, const SynObj& dst);
RAnObj ranobj_from_json(const Json& j);

/// Indented "key: value" rendering in the JSON's own field order. Scalar
/// arrays stay on one line.
std::string render_text(const Json& j);

} // namespace fincat
