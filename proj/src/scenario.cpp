#include "naads/scenario.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "naads/corpus.hpp"
#include "naads/errors.hpp"
#include "naads/exact_circle.hpp"
#include "naads/flow.hpp"

namespace naads {
namespace {

using json = nlohmann::json;

ParamSpec req(std::string name, ParamType t) { return {std::move(name), t, std::nullopt}; }
ParamSpec opt(std::string name, ParamType t, std::string fallback) { return {std::move(name), t, std::move(fallback)}; }

constexpr auto R = ParamType::Real;
constexpr auto I = ParamType::Integer;
constexpr auto L = ParamType::RealList;
constexpr auto T = ParamType::Text;

std::vector<ParamSpec> sampling_params() {
  return {opt("samples", I, "16"), opt("sampling", T, "lowdisc"), opt("seed", I, "0")};
}

std::vector<TaskSpec> build_specs() {
  auto with_sampling = [](std::vector<ParamSpec> ps) {
    for (auto& p : sampling_params()) ps.push_back(std::move(p));
    return ps;
  };
  return {
      {"periodicity_check", {req("x", R), req("r", I), opt("horizon", I, "25"), opt("tol", R, "1e-9")}},
      {"exact_periodicity", {req("r", I), opt("horizon", I, "50")}},
      {"almost_periodicity_report", {req("x", R), req("eps", R), opt("N", I, "40")}},
      {"uniform_ap_report", {req("eps", R), opt("N", I, "40"), opt("grid", I, "64")}},
      {"equicontinuity_modulus", {req("eps", R), opt("N", I, "100"), opt("pair_grid", I, "16")}},
      {"li_yorke_classify",
       {req("x", R), req("y", R), opt("N", I, "200"), opt("low_tol", R, "1e-3"), opt("high_tol", R, "0.3")}},
      {"sensitivity_at_point",
       with_sampling({req("x", R), opt("delta", R, "0"), opt("radii", L, "0.1,0.01"), opt("N", I, "200")})},
      {"orbit_density", {req("x", R), req("eps", R), opt("N", I, "120")}},
      {"transitivity_scan", with_sampling({req("eps", R), opt("N", I, "120"), opt("grid", I, "16")})},
      {"r_transitivity_check",
       with_sampling({req("r", I), opt("eps", R, "0.05"), opt("N", I, "120"), opt("grid", I, "16")})},
      {"minimality_certificate",
       {req("eps", R), opt("order_cap", I, "9"), opt("depth", I, "8"), opt("grid_spacing", R, "0"),
        opt("invariance_horizon", I, "64")}},
      {"hull_periodicity_property",
       {req("x", R), req("r", I), opt("order_k", I, "8"), opt("depth", I, "6"), opt("horizon", I, "25"),
        opt("tol", R, "1e-9")}},
      {"ap_propagation_check",
       {req("x", R), req("eps", R), opt("N", I, "40"), opt("order_k", I, "8"), opt("depth", I, "6")}},
      {"hull_closure_equality",
       {req("x", R), opt("eps", R, "0.1"), opt("N", I, "20"), opt("order_k", I, "9"), opt("depth", I, "8"),
        opt("extra_points", L, "")}},
      {"dichotomy_scan",
       {opt("eps", R, "0.1"), opt("delta", R, "0"), opt("grid", I, "16"), opt("order_k", I, "4"),
        opt("depth", I, "3"), opt("N", I, "100")}},
  };
}

double parse_real(std::string_view name, std::string_view text) {
  double v = 0.0;
  try {
    v = exact::nearest_double(exact::parse_rational(text));
  } catch (const std::exception&) {
    throw UsageError("parameter '" + std::string(name) + "': not a number: '" + std::string(text) + "'");
  }
  if (!std::isfinite(v)) throw UsageError("parameter '" + std::string(name) + "' is not finite");
  return v;
}

std::int64_t parse_integer(std::string_view name, std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("parameter '" + std::string(name) + "': not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_list(std::string_view name, std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(name, part));
  return out;
}

void validate(const ParamSpec& spec, const std::string& value) {
  switch (spec.type) {
    case ParamType::Real: parse_real(spec.name, value); break;
    case ParamType::Integer: parse_integer(spec.name, value); break;
    case ParamType::RealList: parse_list(spec.name, value); break;
    case ParamType::Text:
      if (spec.name == "sampling" && value != "lowdisc" && value != "random") {
        throw UsageError("parameter 'sampling' must be 'lowdisc' or 'random'");
      }
      break;
  }
}

// Resolved parameter lookup.
class Args {
 public:
  explicit Args(const Record& r) {
    for (const auto& [k, v] : r) values_[k] = v;
  }
  double real(const std::string& k) const { return parse_real(k, values_.at(k)); }
  std::int64_t integer(const std::string& k) const { return parse_integer(k, values_.at(k)); }
  std::size_t count(const std::string& k) const {
    const auto v = integer(k);
    if (v < 0) throw UsageError("parameter '" + k + "' must be non-negative");
    return static_cast<std::size_t>(v);
  }
  int small(const std::string& k) const { return static_cast<int>(integer(k)); }
  std::vector<double> list(const std::string& k) const { return parse_list(k, values_.at(k)); }
  SamplingOptions sampling() const {
    SamplingOptions o;
    o.samples = count("samples");
    o.random = values_.at("sampling") == "random";
    o.seed = static_cast<std::uint64_t>(integer("seed"));
    return o;
  }

 private:
  std::map<std::string, std::string> values_;
};

using Runner = std::function<PropertyReport(const MapFamily&, const Args&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"periodicity_check",
       [](const MapFamily& f, const Args& a) {
         return periodicity_check(f, a.real("x"), a.integer("r"), a.integer("horizon"), a.real("tol"));
       }},
      {"exact_periodicity",
       [](const MapFamily& f, const Args& a) {
         return exact_periodicity_report(f, a.integer("r"), a.integer("horizon"));
       }},
      {"almost_periodicity_report",
       [](const MapFamily& f, const Args& a) {
         return almost_periodicity_report(f, a.real("x"), a.real("eps"), a.integer("N"));
       }},
      {"uniform_ap_report",
       [](const MapFamily& f, const Args& a) {
         return uniform_ap_report(f, a.real("eps"), a.integer("N"), a.count("grid"));
       }},
      {"equicontinuity_modulus",
       [](const MapFamily& f, const Args& a) {
         return equicontinuity_modulus(f, a.real("eps"), a.integer("N"), a.count("pair_grid"));
       }},
      {"li_yorke_classify",
       [](const MapFamily& f, const Args& a) {
         return li_yorke_classify(f, a.real("x"), a.real("y"), a.integer("N"), a.real("low_tol"),
                                  a.real("high_tol"));
       }},
      {"sensitivity_at_point",
       [](const MapFamily& f, const Args& a) {
         double delta = a.real("delta");
         if (delta <= 0.0) delta = diameter(f.space()) / 4.0;
         return sensitivity_at_point(f, a.real("x"), delta, a.list("radii"), a.integer("N"), a.sampling());
       }},
      {"orbit_density",
       [](const MapFamily& f, const Args& a) {
         return orbit_density(f, a.real("x"), a.real("eps"), a.integer("N"));
       }},
      {"transitivity_scan",
       [](const MapFamily& f, const Args& a) {
         return transitivity_scan(f, a.real("eps"), a.integer("N"), a.count("grid"), a.sampling());
       }},
      {"r_transitivity_check",
       [](const MapFamily& f, const Args& a) {
         return r_transitivity_check(f, a.integer("r"), a.real("eps"), a.integer("N"), a.count("grid"),
                                     a.sampling());
       }},
      {"minimality_certificate",
       [](const MapFamily& f, const Args& a) {
         return minimality_certificate(f, a.real("eps"), a.small("order_cap"), a.small("depth"),
                                       a.real("grid_spacing"), a.integer("invariance_horizon"));
       }},
      {"hull_periodicity_property",
       [](const MapFamily& f, const Args& a) {
         return hull_periodicity_property(f, a.real("x"), a.integer("r"), a.small("order_k"), a.small("depth"),
                                          a.integer("horizon"), a.real("tol"));
       }},
      {"ap_propagation_check",
       [](const MapFamily& f, const Args& a) {
         return ap_propagation_check(f, a.real("x"), a.real("eps"), a.integer("N"), a.small("order_k"),
                                     a.small("depth"));
       }},
      {"hull_closure_equality",
       [](const MapFamily& f, const Args& a) {
         return hull_closure_equality(f, a.real("x"), a.real("eps"), a.integer("N"), a.small("order_k"),
                                      a.small("depth"), a.list("extra_points"));
       }},
      {"dichotomy_scan",
       [](const MapFamily& f, const Args& a) {
         return dichotomy_scan(f, a.real("eps"), a.real("delta"), a.count("grid"), a.small("order_k"),
                               a.small("depth"), a.integer("N"));
       }},
  };
  return table;
}

std::string json_value_text(const std::string& key, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_array() || v[i].is_object()) throw UsageError("'" + key + "': nested lists are not allowed");
      if (i) out += ",";
      out += json_value_text(key, v[i]);
    }
    return out;
  }
  throw UsageError("'" + key + "': unsupported value " + v.dump());
}

// ---- inline family specifications ----

Homeomorphism map_from_json(const json& j, SpaceKind space);

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view where) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw UsageError(std::string(where) + ": unknown key '" + k + "'");
  }
}

const json& field(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) throw UsageError(std::string(where) + ": missing '" + key + "'");
  return j.at(key);
}

Homeomorphism map_from_json(const json& j, SpaceKind space) {
  if (!j.is_object()) throw UsageError("map: expected an object");
  const std::string type = json_value_text("type", field(j, "type", "map"));
  if (type == "rotation") {
    check_keys(j, {"type", "angle"}, "rotation");
    if (space != SpaceKind::Circle) throw UsageError("rotation maps need a circle family");
    const json& a = field(j, "angle", "rotation");
    if (a.is_string()) {
      try {
        return Homeomorphism::rotation(exact::RationalAngle::parse(a.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("rotation angle: ") + e.what());
      }
    }
    if (!a.is_number()) throw UsageError("rotation angle must be a number or a \"p/q\" string");
    return Homeomorphism::rotation(a.get<double>());
  }
  if (type == "power") {
    check_keys(j, {"type", "exponent"}, "power");
    if (space != SpaceKind::UnitInterval) throw UsageError("power maps need an interval family");
    const std::string text = json_value_text("exponent", field(j, "exponent", "power"));
    mpq_class q;
    try {
      q = exact::parse_rational(text);
    } catch (const std::invalid_argument&) {
      throw UsageError("power exponent: not a rational: '" + text + "'");
    }
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p() || sgn(q) <= 0) {
      throw UsageError("power exponent must be a positive rational with small parts");
    }
    return Homeomorphism::power(q.get_num().get_si(), q.get_den().get_si());
  }
  if (type == "piecewise_linear") {
    check_keys(j, {"type", "breakpoints"}, "piecewise_linear");
    const json& bp = field(j, "breakpoints", "piecewise_linear");
    if (!bp.is_array()) throw UsageError("breakpoints must be a list of [x, y] pairs");
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : bp) {
      if (!p.is_array() || p.size() != 2) throw UsageError("breakpoints must be a list of [x, y] pairs");
      pts.emplace_back(parse_real("breakpoint", json_value_text("breakpoint", p[0])),
                       parse_real("breakpoint", json_value_text("breakpoint", p[1])));
    }
    return Homeomorphism::piecewise_linear(std::move(pts));
  }
  if (type == "reflection") {
    check_keys(j, {"type"}, "reflection");
    return Homeomorphism::reflection(space);
  }
  if (type == "identity") {
    check_keys(j, {"type"}, "identity");
    return Homeomorphism::identity(space);
  }
  if (type == "composite") {
    check_keys(j, {"type", "parts"}, "composite");
    const json& parts = field(j, "parts", "composite");
    if (!parts.is_array() || parts.empty()) throw UsageError("composite parts must be a non-empty list");
    std::vector<Homeomorphism> hs;
    for (const auto& p : parts) hs.push_back(map_from_json(p, space));
    return Homeomorphism::composite(std::move(hs));
  }
  throw UsageError("unknown map type '" + type + "'");
}

MapFamily family_from_json(const json& j) {
  if (j.is_string()) return corpus(j.get<std::string>()).family;
  if (!j.is_object()) throw UsageError("family: expected a corpus name or an object");
  check_keys(j, {"name", "space", "commutative", "isometric", "maps"}, "family");
  SpaceKind space;
  try {
    space = parse_space(json_value_text("space", field(j, "space", "family")));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("family space: ") + e.what());
  }
  const std::string name = j.contains("name") ? json_value_text("name", j.at("name")) : "inline";
  FamilyTraits traits;
  auto flag = [&](const char* key) {
    if (!j.contains(key)) return false;
    if (!j.at(key).is_boolean()) throw UsageError(std::string("family '") + key + "' must be true or false");
    return j.at(key).get<bool>();
  };
  traits.commutative = flag("commutative");
  traits.isometric = flag("isometric");
  const json& maps = field(j, "maps", "family");
  if (!maps.is_array() || maps.empty()) throw UsageError("family maps must be a non-empty list");
  std::vector<Homeomorphism> hs;
  for (const auto& m : maps) hs.push_back(map_from_json(m, space));
  try {
    return cyclic_family(name, space, std::move(hs), traits);
  } catch (const ConstructionError& e) {
    throw UsageError(std::string("family: ") + e.what());
  }
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::string lookup(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r) {
    if (k == key) return v;
  }
  return {};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Output value taken from the output entry, then the task parameters.
std::string output_value(const OutputSpec& out, const Record& params, const std::string& key,
                         const std::string& fallback) {
  std::string v = lookup(out.options, key);
  if (v.empty()) v = lookup(params, key);
  if (v.empty()) v = fallback;
  if (v.empty()) throw UsageError("output '" + out.kind + "' needs '" + key + "'");
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << content;
}

}  // namespace

const std::vector<TaskSpec>& task_specs() {
  static const std::vector<TaskSpec> specs = build_specs();
  return specs;
}

const TaskSpec& task_spec(std::string_view task) {
  for (const auto& s : task_specs()) {
    if (s.name == task) return s;
  }
  throw UsageError("unknown task '" + std::string(task) + "'");
}

Record resolve_params(std::string_view task, const Record& params) {
  const TaskSpec& spec = task_spec(task);
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const auto& p : spec.params) known = known || p.name == k;
    if (!known) throw UsageError("task '" + spec.name + "' has no parameter '" + k + "'");
  }
  Record out;
  for (const auto& p : spec.params) {
    std::optional<std::string> value;
    for (const auto& [k, v] : params) {
      if (k == p.name) value = v;
    }
    if (!value) value = p.fallback;
    if (!value) throw UsageError("task '" + spec.name + "' requires parameter '" + p.name + "'");
    validate(p, *value);
    out.emplace_back(p.name, *value);
  }
  return out;
}

PropertyReport run_task(const MapFamily& family, std::string_view task, const Record& params,
                        const RunOptions& opts) {
  Record with_opts = params;
  const TaskSpec& spec = task_spec(task);
  auto has = [&](std::string_view key) {
    for (const auto& [k, v] : params) {
      if (k == key) return true;
    }
    return false;
  };
  auto accepts = [&](std::string_view key) {
    for (const auto& p : spec.params) {
      if (p.name == key) return true;
    }
    return false;
  };
  if (accepts("seed") && opts.seed && !has("seed")) with_opts.emplace_back("seed", std::to_string(*opts.seed));
  if (accepts("sampling") && opts.random_sampling && !has("sampling")) with_opts.emplace_back("sampling", "random");
  const Record resolved = resolve_params(task, with_opts);
  return runners().find(task)->second(family, Args(resolved));
}

MapFamily family_from_json_text(std::string_view json_text) {
  return family_from_json(parse_json(json_text, "family"));
}

Scenario parse_scenario(std::string_view json_text) {
  const json j = parse_json(json_text, "scenario");
  if (!j.is_object()) throw UsageError("scenario: expected a JSON object");
  check_keys(j, {"schema", "family", "task", "params", "expect", "outputs"}, "scenario");
  const json& schema = field(j, "schema", "scenario");
  if (!schema.is_string() || schema.get<std::string>() != kScenarioSchema) {
    throw UsageError("scenario: schema must be \"" + std::string(kScenarioSchema) + "\"");
  }
  Scenario s;
  const json& fam = field(j, "family", "scenario");
  s.family_json = fam.dump();
  s.family_label = fam.is_string() ? fam.get<std::string>()
                                   : (fam.is_object() && fam.contains("name") ? json_value_text("name", fam["name"])
                                                                              : "inline");
  const json& task = field(j, "task", "scenario");
  if (!task.is_string()) throw UsageError("scenario: task must be a string");
  s.task = task.get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw UsageError("scenario: params must be an object");
    for (const auto& [k, v] : j["params"].items()) s.params.emplace_back(k, json_value_text(k, v));
  }
  if (j.contains("expect")) {
    try {
      s.expect = parse_verdict(json_value_text("expect", j["expect"]));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("scenario expect: ") + e.what());
    }
  }
  if (j.contains("outputs")) {
    if (!j["outputs"].is_array()) throw UsageError("scenario: outputs must be a list");
    for (const auto& o : j["outputs"]) {
      if (!o.is_object()) throw UsageError("scenario: each output must be an object");
      check_keys(o, {"kind", "path", "x", "eps", "N", "windows", "pair_grid"}, "output");
      OutputSpec out;
      out.kind = json_value_text("kind", field(o, "kind", "output"));
      out.path = json_value_text("path", field(o, "path", "output"));
      if (out.kind != "report" && out.kind != "orbit_csv" && out.kind != "return_raster" &&
          out.kind != "modulus_curve") {
        throw UsageError("output: unknown kind '" + out.kind + "'");
      }
      if (out.path.empty()) throw UsageError("output: empty path");
      for (const auto& [k, v] : o.items()) {
        if (k != "kind" && k != "path") out.options.emplace_back(k, json_value_text(k, v));
      }
      s.outputs.push_back(std::move(out));
    }
  }
  task_spec(s.task);
  resolve_params(s.task, s.params);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

std::string render_report(const ReportHeader& header, const PropertyReport& report) {
  std::ostringstream out;
  out << "schema_version: " << kReportSchemaVersion << "\n";
  if (header.timestamp) out << "timestamp: " << utc_timestamp() << "\n";
  out << "family: " << header.family << "\n";
  out << "space: " << to_string(header.space) << "\n";
  out << "task: " << header.task << "\n";
  out << "property: " << to_string(report.property) << "\n";
  out << "verdict: " << to_string(report.verdict) << "\n";
  if (header.expect) out << "expect: " << to_string(*header.expect) << "\n";
  out << "parameters:\n";
  for (const auto& [k, v] : report.parameters) out << "  " << k << ": " << v << "\n";
  out << "details:\n";
  for (const auto& [k, v] : report.details) out << "  " << k << ": " << v << "\n";
  out << "witnesses:\n";
  for (const auto& w : report.witnesses) {
    out << "  - kind: " << to_string(w.kind) << "\n";
    std::string pts;
    for (std::size_t i = 0; i < w.points.size(); ++i) pts += (i ? "," : "") + format_double(w.points[i]);
    out << "    points: " << pts << "\n";
    out << "    time: " << w.time << "\n";
    out << "    distance: " << format_double(w.distance) << "\n";
    if (!w.note.empty()) out << "    note: " << w.note << "\n";
  }
  return out.str();
}

std::string orbit_csv(const MapFamily& family, double x, std::int64_t N) {
  std::string out = "n,x\n";
  for (const auto& [n, y] : orbit_window(family, x, N)) out += format_int(n) + "," + format_double(y) + "\n";
  return out;
}

std::string return_raster_csv(const MapFamily& family, double x, double eps, std::int64_t N) {
  const ReturnTimeSet set = return_time_set(family, x, eps, N);
  std::string out = "n,is_return\n";
  std::size_t next = 0;
  for (std::int64_t n = -N; n <= N; ++n) {
    const bool hit = next < set.times.size() && set.times[next] == n;
    if (hit) ++next;
    out += format_int(n) + "," + (hit ? "1" : "0") + "\n";
  }
  return out;
}

std::string modulus_curve_csv(const MapFamily& family, double eps, const std::vector<std::int64_t>& windows,
                              std::size_t pair_grid) {
  std::string out = "N,delta\n";
  for (std::int64_t N : windows) {
    out += format_int(N) + "," + format_double(equicontinuity_delta(family, eps, N, pair_grid)) + "\n";
  }
  return out;
}

int exit_status(Verdict v, const std::optional<Verdict>& expect) {
  if (v == Verdict::InconclusiveBudget) return kExitBudget;
  if (expect) return v == *expect ? 0 : kExitMismatch;
  return is_positive(v) ? 0 : kExitMismatch;
}

int run_scenario(const Scenario& scenario, const ScenarioRunSettings& settings, std::ostream& log) {
  const MapFamily family = family_from_json_text(scenario.family_json);
  const Record resolved = resolve_params(scenario.task, scenario.params);

  // Validate every output's inputs before computing anything.
  struct Planned {
    const OutputSpec* spec;
    std::function<std::string()> produce;
  };
  std::vector<Planned> plans;
  std::optional<PropertyReport> report;
  for (const auto& out : scenario.outputs) {
    if (out.kind == "report") {
      plans.push_back({&out, nullptr});
    } else if (out.kind == "orbit_csv") {
      const double x = parse_real("x", output_value(out, resolved, "x", ""));
      const auto N = parse_integer("N", output_value(out, resolved, "N", "20"));
      plans.push_back({&out, [&family, x, N] { return orbit_csv(family, x, N); }});
    } else if (out.kind == "return_raster") {
      const double x = parse_real("x", output_value(out, resolved, "x", ""));
      const double eps = parse_real("eps", output_value(out, resolved, "eps", ""));
      const auto N = parse_integer("N", output_value(out, resolved, "N", "20"));
      plans.push_back({&out, [&family, x, eps, N] { return return_raster_csv(family, x, eps, N); }});
    } else {
      const double eps = parse_real("eps", output_value(out, resolved, "eps", ""));
      const auto grid = parse_integer("pair_grid", output_value(out, resolved, "pair_grid", "16"));
      std::vector<std::int64_t> windows;
      const std::string w = lookup(out.options, "windows");
      if (w.empty()) {
        const auto N = parse_integer("N", output_value(out, resolved, "N", "100"));
        windows = {N, 2 * N, 4 * N};
      } else {
        for (auto part : split(w, ',')) windows.push_back(parse_integer("windows", part));
      }
      plans.push_back({&out, [&family, eps, windows, grid] {
                         return modulus_curve_csv(family, eps, windows, static_cast<std::size_t>(grid));
                       }});
    }
  }

  const PropertyReport rep = run_task(family, scenario.task, scenario.params, settings.run);
  const ReportHeader header{scenario.family_label, family.space(), scenario.task, scenario.expect,
                            settings.timestamp};
  const std::string text = render_report(header, rep);
  for (const auto& p : plans) {
    const std::filesystem::path path = settings.out_dir.empty() ? std::filesystem::path(p.spec->path)
                                                                : settings.out_dir / p.spec->path;
    write_file(path, p.produce ? p.produce() : text);
  }
  log << "verdict: " << to_string(rep.verdict);
  if (scenario.expect) log << " (expected " << to_string(*scenario.expect) << ")";
  log << "\n";
  return exit_status(rep.verdict, scenario.expect);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetError*>(&e)) return kExitBudget;
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const LookupError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const std::domain_error*>(&e)) {
    return kExitUsage;
  }
  return 70;
}

}  // namespace naads
