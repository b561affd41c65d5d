// Batch front-end: reads a self-describing JSON job file, dispatches to the
// library and emits JSON/CSV results or SVG diagrams.  Outputs are
// byte-deterministic for a fixed job file.
//
// Exit codes: 0 success / validation passed, 1 input or parse error,
// 2 validation failed (structured report emitted), 3 estimator did not
// converge (result still emitted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hyperbolica/json_io.hpp"
#include "hyperbolica/svg.hpp"

namespace hyp = hyperbolica;
using hyp::Json;

namespace {

struct Overrides {
  std::string job_path;
  std::optional<double> tol;
  std::optional<std::string> mode;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<int> seed;  // reserved for reproducibility harnesses
  bool approx_lengths = false;
};

struct Artifact {
  std::string content;
  int exit_code = 0;
};

int env_max_refine_cap() {
  const char* raw = std::getenv("HYPERBOLICA_MAX_REFINE");
  if (raw == nullptr) return std::numeric_limits<int>::max();
  try {
    return std::max(0, std::stoi(raw));
  } catch (const std::exception&) {
    throw hyp::InputError("bad-env", "HYPERBOLICA_MAX_REFINE must be an integer");
  }
}

Json error_json(const hyp::Error& e) {
  Json j{{"code", e.code()}, {"message", e.what()}};
  if (const auto* lm = dynamic_cast<const hyp::LengthMismatchError*>(&e)) {
    j["actual"] = hyp::to_json(lm->actual());
    j["expected"] = hyp::to_json(lm->expected());
  } else if (const auto* am = dynamic_cast<const hyp::AreaMismatchError*>(&e)) {
    j["actual"] = am->actual();
    j["expected"] = am->expected();
  } else if (const auto* oc = dynamic_cast<const hyp::OverlappingCellsError*>(&e)) {
    j["first"] = oc->first();
    j["second"] = oc->second();
  } else if (const auto* nc = dynamic_cast<const hyp::NotAChainError*>(&e)) {
    j["index"] = nc->index();
  } else if (const auto* dp = dynamic_cast<const hyp::DuplicatePointError*>(&e)) {
    j["index"] = dp->index();
  } else if (const auto* ui = dynamic_cast<const hyp::UnsortedInputError*>(&e)) {
    j["index"] = ui->index();
  } else if (const auto* se = dynamic_cast<const hyp::SyntaxError*>(&e)) {
    j["offset"] = se->offset();
  } else if (const auto* un = dynamic_cast<const hyp::UnknownIdentifierError*>(&e)) {
    j["offset"] = un->offset();
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_fields(const Json& payload, std::initializer_list<const char*> allowed,
                    std::initializer_list<const char*> required) {
  for (const auto& item : payload.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw hyp::InputError("bad-job", "payload: unknown field '" + item.key() + "'");
    }
  }
  for (const char* key : required) {
    if (!payload.contains(key)) {
      throw hyp::InputError("bad-job", std::string("payload: missing field '") + key + "'");
    }
  }
}

std::vector<hyp::Hyperbolic> points_from_json(const Json& j) {
  if (!j.is_array()) throw hyp::InputError("bad-job", "'points' must be an array");
  std::vector<hyp::Hyperbolic> points;
  points.reserve(j.size());
  for (const Json& item : j) points.push_back(hyp::hyperbolic_from_json(item));
  return points;
}

std::vector<hyp::HInterval> intervals_from_json(const Json& j, const char* field) {
  if (!j.is_array()) {
    throw hyp::InputError("bad-job", std::string("'") + field + "' must be an array");
  }
  std::vector<hyp::HInterval> members;
  members.reserve(j.size());
  for (const Json& item : j) members.push_back(hyp::interval_from_json(item));
  return members;
}

std::vector<double> reals_from_json(const Json& j, const char* field) {
  if (!j.is_array()) {
    throw hyp::InputError("bad-job", std::string("'") + field + "' must be an array");
  }
  std::vector<double> values;
  values.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_number()) {
      throw hyp::InputError("bad-job", std::string("'") + field + "' must hold numbers");
    }
    values.push_back(item.get<double>());
  }
  return values;
}

// ---- CSV flattening (hyperbolic values become e1/e2 column pairs) ---------

std::string csv_points(std::span<const hyp::Hyperbolic> points) {
  std::string out = "index,e1,e2\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += std::to_string(i) + "," + hyp::format_double(points[i].a1) + "," +
           hyp::format_double(points[i].a2) + "\n";
  }
  return out;
}

std::string csv_intervals(std::span<const hyp::HInterval> members) {
  std::string out = "index,lo_e1,lo_e2,hi_e1,hi_e2\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    const hyp::HInterval& m = members[i];
    out += std::to_string(i) + "," + hyp::format_double(m.lo().a1) + "," +
           hyp::format_double(m.lo().a2) + "," + hyp::format_double(m.hi().a1) +
           "," + hyp::format_double(m.hi().a2) + "\n";
  }
  return out;
}

std::string csv_integral(const hyp::IntegralResult& r) {
  std::string out =
      "value_e1,value_e2,error_e1,error_e2,tag_gap_e1,tag_gap_e2,refinements,"
      "converged,mode\n";
  out += hyp::format_double(r.value.a1) + "," + hyp::format_double(r.value.a2) +
         "," + hyp::format_double(r.error_estimate.a1) + "," +
         hyp::format_double(r.error_estimate.a2) + "," +
         hyp::format_double(r.tag_gap.a1) + "," + hyp::format_double(r.tag_gap.a2) +
         "," + std::to_string(r.refinements) + "," +
         (r.converged ? "true" : "false") + "," + hyp::mode_name(r.mode) + "\n";
  return out;
}

std::string csv_variation(const hyp::VariationEstimate& v) {
  std::string out = "value_e1,value_e2,partitions_used,converged,lower_bound_only\n";
  out += hyp::format_double(v.value.a1) + "," + hyp::format_double(v.value.a2) +
         "," + std::to_string(v.partitions_used) + "," +
         (v.converged ? "true" : "false") + "," +
         (v.lower_bound_only ? "true" : "false") + "\n";
  return out;
}

// ---- task context ----------------------------------------------------------

struct TaskContext {
  std::string format;  // json | csv | svg
  double default_tol = 1e-6;
  hyp::SumMode default_mode = hyp::SumMode::paper_abs;
  hyp::TagRule default_tags = hyp::TagRule::midpoint;
  int max_refinements = 22;
  int max_depth = 20;
  bool approx_lengths = false;
  // Command-line flags beat job-file payload fields.
  std::optional<double> tol_override;
  std::optional<hyp::SumMode> mode_override;

  double tol(const Json& payload) const {
    if (tol_override) return *tol_override;
    return payload.contains("tol") ? payload.at("tol").get<double>() : default_tol;
  }

  hyp::SumMode mode(const Json& payload) const {
    if (mode_override) return *mode_override;
    return payload.contains("mode")
               ? hyp::mode_from_name(payload.at("mode").get<std::string>())
               : default_mode;
  }

  hyp::TagRule tags(const Json& payload) const {
    return payload.contains("tags")
               ? hyp::tag_from_name(payload.at("tags").get<std::string>())
               : default_tags;
  }

  int refinement_cap(const Json& payload) const {
    return std::min(payload.contains("max_refinements")
                        ? payload.at("max_refinements").get<int>()
                        : max_refinements,
                    env_max_refine_cap());
  }
};

Json ok_report(const std::string& task, Json result) {
  return Json{{"status", "ok"}, {"task", task}, {"result", std::move(result)}};
}

Artifact json_or(const TaskContext& ctx, const std::string& task, Json result,
                 int exit_code = 0) {
  if (ctx.format != "json") {
    throw hyp::InputError("bad-job",
                          "format '" + ctx.format + "' is not supported for task '" + task + "'");
  }
  return {dump(ok_report(task, std::move(result))), exit_code};
}

// ---- task handlers ---------------------------------------------------------

Artifact run_validate_strong(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"interval", "points"}, {"interval", "points"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto partition =
      hyp::StrongPartition::validate(points_from_json(payload.at("points")), interval);
  if (ctx.format == "svg") return {hyp::render_svg(partition), 0};
  if (ctx.format == "csv") return {csv_points(partition.points()), 0};
  Json result = hyp::to_json(partition);
  result["telescoped_length"] = hyp::to_json(partition.telescoped_lengths());
  result["diameter"] = hyp::to_json(partition.diameter());
  return {dump(ok_report("validate-strong", std::move(result))), 0};
}

Artifact run_validate_weak(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"interval", "subintervals"}, {"interval", "subintervals"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto partition = hyp::WeakPartition::validate(
      intervals_from_json(payload.at("subintervals"), "subintervals"), interval,
      ctx.approx_lengths ? 1e-9 : 0.0);
  if (ctx.format == "svg") return {hyp::render_svg(partition), 0};
  if (ctx.format == "csv") return {csv_intervals(partition.subintervals()), 0};
  Json result = hyp::to_json(partition);
  result["length_sum"] = hyp::to_json(partition.length_sum());
  return {dump(ok_report("validate-weak", std::move(result))), 0};
}

Artifact run_validate_regular(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"interval", "cells"}, {"interval", "cells"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto partition = hyp::RegularPartition::validate(
      intervals_from_json(payload.at("cells"), "cells"), interval);
  if (ctx.format == "svg") return {hyp::render_svg(partition), 0};
  if (ctx.format == "csv") return {csv_intervals(partition.cells()), 0};
  Json result = hyp::to_json(partition);
  result["area_sum"] = partition.area_sum();
  return {dump(ok_report("validate-regular", std::move(result))), 0};
}

Artifact run_merge(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"p", "q", "mode"}, {"p", "q"});
  hyp::MergeMode mode = hyp::MergeMode::diagonal;
  if (payload.contains("mode")) {
    const std::string name = payload.at("mode").get<std::string>();
    if (name == "diagonal") mode = hyp::MergeMode::diagonal;
    else if (name == "e1-first") mode = hyp::MergeMode::e1_first;
    else if (name == "e2-first") mode = hyp::MergeMode::e2_first;
    else throw hyp::InputError("bad-job", "unknown merge mode '" + name + "'");
  }
  const auto partition = hyp::merge_real_partitions(
      reals_from_json(payload.at("p"), "p"), reals_from_json(payload.at("q"), "q"), mode);
  if (ctx.format == "svg") return {hyp::render_svg(partition), 0};
  if (ctx.format == "csv") return {csv_points(partition.points()), 0};
  return {dump(ok_report("merge", hyp::to_json(partition))), 0};
}

Artifact run_variation(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"f", "interval", "tol", "max_depth"}, {"f", "interval"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const double tol = ctx.tol(payload);
  const int max_depth = std::min(
      payload.contains("max_depth") ? payload.at("max_depth").get<int>() : ctx.max_depth,
      env_max_refine_cap());
  const auto f = hyp::natural_function_from_json(payload.at("f"));
  const hyp::VariationEstimate estimate =
      hyp::total_variation(f, interval, tol, max_depth);
  const int exit_code = estimate.converged ? 0 : 3;
  if (ctx.format == "csv") return {csv_variation(estimate), exit_code};
  return json_or(ctx, "variation", hyp::to_json(estimate), exit_code);
}

Artifact run_variation_set(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"f", "interval", "grid"}, {"f", "interval", "grid"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const Json& grid = payload.at("grid");
  if (!grid.is_array() || grid.size() != 2) {
    throw hyp::InputError("bad-job", "'grid' must be [m, n]");
  }
  const int m = grid.at(0).get<int>();
  const int n = grid.at(1).get<int>();
  const hyp::HyperbolicSet sums =
      hyp::function_json_is_natural(payload.at("f"))
          ? hyp::variation_sum_set_bruteforce(
                hyp::natural_function_from_json(payload.at("f")), interval, m, n)
          : hyp::variation_sum_set_bruteforce(
                hyp::general_function_from_json(payload.at("f")), interval, m, n);
  if (ctx.format == "csv") {
    std::string out = "e1,e2\n";
    for (const hyp::Hyperbolic& v : sums) {
      out += hyp::format_double(v.a1) + "," + hyp::format_double(v.a2) + "\n";
    }
    return {out, 0};
  }
  Json values = Json::array();
  for (const hyp::Hyperbolic& v : sums) values.push_back(hyp::to_json(v));
  return json_or(ctx, "variation-set", Json{{"sums", values}, {"count", sums.size()}});
}

hyp::NaturalFunction integrator_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "identity") {
    return hyp::NaturalFunction::identity();
  }
  return hyp::natural_function_from_json(j);
}

Artifact run_integrate(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"F", "G", "interval", "tol", "mode", "tags", "max_refinements"},
                 {"F", "G", "interval"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto f = hyp::natural_function_from_json(payload.at("F"));
  const auto g = integrator_from_json(payload.at("G"));
  const hyp::IntegralResult result =
      hyp::rs_integral(f, g, interval, ctx.tol(payload), ctx.tags(payload),
                       ctx.mode(payload), ctx.refinement_cap(payload));
  const int exit_code = result.converged ? 0 : 3;
  if (ctx.format == "csv") return {csv_integral(result), exit_code};
  return json_or(ctx, "integrate", hyp::to_json(result), exit_code);
}

Artifact run_riemann(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"F", "interval", "tol", "tags", "max_refinements"},
                 {"F", "interval"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto f = hyp::natural_function_from_json(payload.at("F"));
  const hyp::IntegralResult result =
      hyp::riemann_integral(f, interval, ctx.tol(payload), ctx.tags(payload),
                            ctx.refinement_cap(payload));
  const int exit_code = result.converged ? 0 : 3;
  if (ctx.format == "csv") return {csv_integral(result), exit_code};
  return json_or(ctx, "riemann", hyp::to_json(result), exit_code);
}

Artifact run_check_substitution(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"F", "G", "interval", "tol", "mode", "tags", "max_refinements"},
                 {"F", "G", "interval"});
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  const auto f = hyp::natural_function_from_json(payload.at("F"));
  const auto g = hyp::natural_function_from_json(payload.at("G"));
  const hyp::SubstitutionReport report =
      hyp::check_substitution(f, g, interval, ctx.tol(payload), ctx.tags(payload),
                              ctx.mode(payload), ctx.refinement_cap(payload));
  int exit_code = 0;
  if (!report.lhs.converged || !report.rhs.converged) exit_code = 3;
  else if (!report.pass) exit_code = 2;
  if (ctx.format == "csv") {
    std::string out = "lhs_e1,lhs_e2,rhs_e1,rhs_e2,diff_e1,diff_e2,pass\n";
    out += hyp::format_double(report.lhs.value.a1) + "," +
           hyp::format_double(report.lhs.value.a2) + "," +
           hyp::format_double(report.rhs.value.a1) + "," +
           hyp::format_double(report.rhs.value.a2) + "," +
           hyp::format_double(report.difference.a1) + "," +
           hyp::format_double(report.difference.a2) + "," +
           (report.pass ? "true" : "false") + "\n";
    return {out, exit_code};
  }
  return json_or(ctx, "check-substitution", hyp::to_json(report), exit_code);
}

Artifact run_render(const Json& payload, const TaskContext& ctx) {
  require_fields(payload, {"type", "interval", "points", "subintervals", "f"},
                 {"type", "interval"});
  if (ctx.format != "svg") {
    throw hyp::InputError("bad-job", "task 'render' only supports format 'svg'");
  }
  const std::string type = payload.at("type").get<std::string>();
  const hyp::HInterval interval = hyp::interval_from_json(payload.at("interval"));
  if (type == "interval") {
    return {hyp::render_svg(interval), 0};
  }
  if (type == "strong-partition") {
    require_fields(payload, {"type", "interval", "points"}, {"points"});
    const auto partition =
        hyp::StrongPartition::validate(points_from_json(payload.at("points")), interval);
    return {hyp::render_svg(partition), 0};
  }
  if (type == "weak-partition") {
    require_fields(payload, {"type", "interval", "subintervals"}, {"subintervals"});
    const auto partition = hyp::WeakPartition::validate(
        intervals_from_json(payload.at("subintervals"), "subintervals"), interval,
        ctx.approx_lengths ? 1e-9 : 0.0);
    return {hyp::render_svg(partition), 0};
  }
  if (type == "discontinuity-lines") {
    require_fields(payload, {"type", "interval", "f"}, {"f"});
    const auto f = hyp::natural_function_from_json(payload.at("f"));
    return {hyp::render_svg(hyp::discontinuity_lines(f, interval), interval), 0};
  }
  throw hyp::InputError("bad-job", "unknown render type '" + type + "'");
}

// ---- job driver -------------------------------------------------------------

void write_output(const std::string& target, const std::string& content) {
  if (target.empty() || target == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) {
    throw hyp::InputError("bad-output", "cannot open output file '" + target + "'");
  }
  out << content;
}

int run_job(const Overrides& overrides) {
  std::ifstream in(overrides.job_path, std::ios::binary);
  if (!in) {
    std::cerr << dump(Json{{"status", "error"},
                           {"error",
                            {{"code", "bad-job"},
                             {"message", "cannot read job file '" + overrides.job_path + "'"}}}});
    return 1;
  }

  std::string task;
  std::string target;
  try {
    Json job = Json::parse(in);
    for (const auto& item : job.items()) {
      const std::string& key = item.key();
      if (key != "task" && key != "payload" && key != "output" && key != "format") {
        throw hyp::InputError("bad-job", "job: unknown field '" + key + "'");
      }
    }
    if (!job.contains("task") || !job.at("task").is_string()) {
      throw hyp::InputError("bad-job", "job: missing string field 'task'");
    }
    task = job.at("task").get<std::string>();
    const Json payload = job.contains("payload") ? job.at("payload") : Json::object();
    if (!payload.is_object()) {
      throw hyp::InputError("bad-job", "job: 'payload' must be an object");
    }

    TaskContext ctx;
    ctx.format = task == "render" ? "svg" : "json";
    if (job.contains("format")) ctx.format = job.at("format").get<std::string>();
    if (overrides.format) ctx.format = *overrides.format;
    if (ctx.format != "json" && ctx.format != "csv" && ctx.format != "svg") {
      throw hyp::InputError("bad-job", "unknown format '" + ctx.format + "'");
    }
    if (job.contains("output")) target = job.at("output").get<std::string>();
    if (overrides.out) target = *overrides.out;
    ctx.tol_override = overrides.tol;
    if (overrides.mode) ctx.mode_override = hyp::mode_from_name(*overrides.mode);
    ctx.approx_lengths = overrides.approx_lengths;

    Artifact artifact;
    if (task == "validate-strong") artifact = run_validate_strong(payload, ctx);
    else if (task == "validate-weak") artifact = run_validate_weak(payload, ctx);
    else if (task == "validate-regular") artifact = run_validate_regular(payload, ctx);
    else if (task == "merge") artifact = run_merge(payload, ctx);
    else if (task == "variation") artifact = run_variation(payload, ctx);
    else if (task == "variation-set") artifact = run_variation_set(payload, ctx);
    else if (task == "integrate") artifact = run_integrate(payload, ctx);
    else if (task == "riemann") artifact = run_riemann(payload, ctx);
    else if (task == "check-substitution") artifact = run_check_substitution(payload, ctx);
    else if (task == "render") artifact = run_render(payload, ctx);
    else throw hyp::InputError("bad-job", "unknown task '" + task + "'");

    write_output(target, artifact.content);
    return artifact.exit_code;
  } catch (const hyp::ValidationError& e) {
    const Json report{{"status", "fail"}, {"task", task}, {"error", error_json(e)}};
    try {
      write_output(target, dump(report));
    } catch (const hyp::Error&) {
      std::cerr << dump(report);
    }
    return 2;
  } catch (const hyp::Error& e) {
    std::cerr << dump(Json{{"status", "error"}, {"task", task}, {"error", error_json(e)}});
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << dump(Json{{"status", "error"},
                           {"error", {{"code", "bad-job"}, {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolica: partitions, variation and Riemann-Stieltjes "
               "integration over the hyperbolic number plane"};
  Overrides overrides;
  app.add_option("--job", overrides.job_path, "job file (JSON)")->required();
  app.add_option("--tol", overrides.tol, "override the default tolerance");
  app.add_option("--mode", overrides.mode, "override sum mode: paper-abs|signed");
  app.add_option("--format", overrides.format, "override output format: json|csv|svg");
  app.add_option("--out", overrides.out, "output path ('-' for stdout)");
  app.add_option("--seed", overrides.seed,
                 "reserved: reproducibility seed for test harnesses");
  app.add_flag("--approx-lengths", overrides.approx_lengths,
               "accept weak-partition length sums within 1e-9 absolute "
               "instead of exact equality");
  CLI11_PARSE(app, argc, argv);
  return run_job(overrides);
}
