#include "hyperbolica/json_io.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hyperbolica {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const char* what) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InputError("bad-job", std::string(what) + ": unknown field '" +
                                      item.key() + "'");
    }
  }
}

double number_field(const Json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw InputError("bad-job",
                     std::string(what) + ": field '" + key + "' must be a number");
  }
  const double value = j.at(key).get<double>();
  if (!std::isfinite(value)) {
    throw NonFiniteError(std::string(what) + ": field '" + key + "' must be finite");
  }
  return value;
}

}  // namespace

Json to_json(Hyperbolic value) { return Json{{"e1", value.a1}, {"e2", value.a2}}; }

Hyperbolic hyperbolic_from_json(const Json& j) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw NonFiniteError("hyperbolic value must be finite");
    return Hyperbolic::embed(v);
  }
  if (j.is_string()) {
    return parse_hyperbolic(j.get<std::string>());
  }
  if (j.is_object()) {
    check_keys(j, {"e1", "e2"}, "hyperbolic value");
    return {number_field(j, "e1", "hyperbolic value"),
            number_field(j, "e2", "hyperbolic value")};
  }
  throw InputError("bad-job", "hyperbolic value must be a number, string or object");
}

const char* kind_name(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::closed: return "closed";
    case IntervalKind::open: return "open";
    case IntervalKind::half_open_left: return "half-open-left";
    case IntervalKind::half_open_right: return "half-open-right";
  }
  return "closed";
}

IntervalKind kind_from_name(const std::string& name) {
  if (name == "closed") return IntervalKind::closed;
  if (name == "open") return IntervalKind::open;
  if (name == "half-open-left") return IntervalKind::half_open_left;
  if (name == "half-open-right") return IntervalKind::half_open_right;
  throw InputError("bad-job", "unknown interval kind '" + name + "'");
}

Json to_json(const HInterval& interval) {
  return Json{{"lo", to_json(interval.lo())},
              {"hi", to_json(interval.hi())},
              {"kind", kind_name(interval.kind())}};
}

HInterval interval_from_json(const Json& j) {
  if (!j.is_object()) {
    throw InputError("bad-job", "interval must be an object");
  }
  check_keys(j, {"lo", "hi", "kind"}, "interval");
  if (!j.contains("lo") || !j.contains("hi")) {
    throw InputError("bad-job", "interval needs 'lo' and 'hi'");
  }
  IntervalKind kind = IntervalKind::closed;
  if (j.contains("kind")) {
    kind = kind_from_name(j.at("kind").get<std::string>());
  }
  return HInterval(hyperbolic_from_json(j.at("lo")),
                   hyperbolic_from_json(j.at("hi")), kind);
}

Json to_json(const StrongPartition& partition) {
  Json points = Json::array();
  for (const Hyperbolic& p : partition.points()) points.push_back(to_json(p));
  return Json{{"interval", to_json(partition.interval())}, {"points", points}};
}

Json to_json(const WeakPartition& partition) {
  Json members = Json::array();
  for (const HInterval& sub : partition.subintervals()) members.push_back(to_json(sub));
  return Json{{"interval", to_json(partition.interval())}, {"subintervals", members}};
}

Json to_json(const RegularPartition& partition) {
  Json cells = Json::array();
  for (const HInterval& cell : partition.cells()) cells.push_back(to_json(cell));
  return Json{{"interval", to_json(partition.interval())}, {"cells", cells}};
}

Json to_json(const DiscontinuityLines& lines) {
  return Json{{"vertical", lines.vertical}, {"horizontal", lines.horizontal}};
}

Json to_json(const VariationEstimate& estimate) {
  return Json{{"value", to_json(estimate.value)},
              {"partitions_used", estimate.partitions_used},
              {"converged", estimate.converged},
              {"lower_bound_only", estimate.lower_bound_only}};
}

const char* mode_name(SumMode mode) {
  return mode == SumMode::paper_abs ? "paper-abs" : "signed";
}

SumMode mode_from_name(const std::string& name) {
  if (name == "paper-abs") return SumMode::paper_abs;
  if (name == "signed") return SumMode::signed_increment;
  throw InputError("bad-job", "unknown mode '" + name + "' (paper-abs|signed)");
}

const char* tag_name(TagRule tag) {
  switch (tag) {
    case TagRule::left: return "left";
    case TagRule::right: return "right";
    case TagRule::midpoint: return "midpoint";
  }
  return "midpoint";
}

TagRule tag_from_name(const std::string& name) {
  if (name == "left") return TagRule::left;
  if (name == "right") return TagRule::right;
  if (name == "midpoint") return TagRule::midpoint;
  throw InputError("bad-job", "unknown tag rule '" + name + "' (left|right|midpoint)");
}

Json to_json(const IntegralResult& result) {
  return Json{{"value", to_json(result.value)},
              {"error_estimate", to_json(result.error_estimate)},
              {"tag_gap", to_json(result.tag_gap)},
              {"refinements", result.refinements},
              {"converged", result.converged},
              {"mode", mode_name(result.mode)}};
}

Json to_json(const SubstitutionReport& report) {
  Json j{{"lhs", to_json(report.lhs)},
         {"rhs", to_json(report.rhs)},
         {"difference", to_json(report.difference)},
         {"pass", report.pass}};
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

namespace {

std::pair<std::string, std::string> component_sources(const Json& j) {
  if (!j.is_object()) {
    throw InputError("bad-job", "function spec must be an object");
  }
  check_keys(j, {"f1", "f2"}, "function spec");
  if (!j.contains("f1") || !j.contains("f2") || !j.at("f1").is_string() ||
      !j.at("f2").is_string()) {
    throw InputError("bad-job", "function spec needs string fields 'f1' and 'f2'");
  }
  return {j.at("f1").get<std::string>(), j.at("f2").get<std::string>()};
}

}  // namespace

bool function_json_is_natural(const Json& j) {
  const auto [s1, s2] = component_sources(j);
  const RealExpr e1 = RealExpr::parse(s1);
  const RealExpr e2 = RealExpr::parse(s2);
  return !e1.mentions(Var::y) && !e2.mentions(Var::x);
}

NaturalFunction natural_function_from_json(const Json& j) {
  const auto [s1, s2] = component_sources(j);
  return NaturalFunction::parse(s1, s2);
}

GeneralFunction general_function_from_json(const Json& j) {
  const auto [s1, s2] = component_sources(j);
  return GeneralFunction::parse(s1, s2);
}

}  // namespace hyperbolica
