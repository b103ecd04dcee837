#pragma once

#include "qh/module.hpp"
#include "qh/stratification.hpp"

#include <json.hpp>

#include <string>

namespace qh {

using Json = nlohmann::json;

Json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const Json& j);

// Modules serialize with rationals as strings and the algebra as a content
// hash by default; parsing validates the hash against the supplied algebra.
Json module_to_json(const Representation& m, bool inline_algebra = false);
Representation module_from_json(const Json& j, const AlgebraPtr& a);

Json order_to_json(const StratOrder& o, const AlgebraPtr& a);
StratOrder order_from_json(const Json& j, const AlgebraPtr& a);

// stable FNV-1a hash of the canonical dump
std::string content_hash(const Json& j);

} // namespace qh
