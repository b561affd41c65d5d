#pragma once

#include <string>

#include "json.hpp"

#include "hyperbolica/function.hpp"
#include "hyperbolica/integration.hpp"
#include "hyperbolica/partition.hpp"
#include "hyperbolica/variation.hpp"

namespace hyperbolica {

using Json = nlohmann::json;

// All readers are strict: unknown object fields are rejected so job files
// double as unambiguous regression fixtures.

// {"e1": a1, "e2": a2}; readers also accept a bare number (embedded real)
// or a string in either textual form ("a1*e1 + a2*e2", "t + s*j").
Json to_json(Hyperbolic value);
Hyperbolic hyperbolic_from_json(const Json& j);

// {"lo": H, "hi": H, "kind": "closed"}; kind defaults to closed on input.
Json to_json(const HInterval& interval);
HInterval interval_from_json(const Json& j);

// {"interval": ..., "points": [H, ...]}
Json to_json(const StrongPartition& partition);

// {"interval": ..., "subintervals": [interval, ...]}
Json to_json(const WeakPartition& partition);

// {"interval": ..., "cells": [interval, ...]}
Json to_json(const RegularPartition& partition);

Json to_json(const DiscontinuityLines& lines);
Json to_json(const VariationEstimate& estimate);
Json to_json(const IntegralResult& result);
Json to_json(const SubstitutionReport& report);

// {"f1": "x^2", "f2": "sin(y)"}; natural when f1 mentions only x and f2
// only y, general (bivariate) otherwise.
NaturalFunction natural_function_from_json(const Json& j);
GeneralFunction general_function_from_json(const Json& j);
bool function_json_is_natural(const Json& j);

const char* kind_name(IntervalKind kind);
IntervalKind kind_from_name(const std::string& name);
const char* mode_name(SumMode mode);
SumMode mode_from_name(const std::string& name);
const char* tag_name(TagRule tag);
TagRule tag_from_name(const std::string& name);

}  // namespace hyperbolica
