#include "galcensus/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "galcensus/curve.hpp"
#include "galcensus/errors.hpp"
#include "galcensus/galois.hpp"
#include "galcensus/resolvent.hpp"

namespace galcensus {

using nlohmann::json;

json RunConfig::to_json() const {
  return {{"command", command},   {"poly", poly},
          {"group", group},       {"n", n},
          {"r", r},               {"heights", heights},
          {"budget", budget},     {"ceiling", ceiling},
          {"shards", shards},     {"jobs", jobs},
          {"curve", curve},       {"p1", p1},
          {"p2", p2},             {"eps", eps},
          {"prefixes", prefixes}, {"prefix_count", prefix_count},
          {"prefix_bound", prefix_bound}, {"seed", seed},
          {"sample_budget", sample_budget}, {"points", points},
          {"tolerance", tolerance}, {"out_dir", out_dir},
          {"version", version}};
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("command", c.command);
  get("poly", c.poly);
  get("group", c.group);
  get("n", c.n);
  get("r", c.r);
  get("heights", c.heights);
  get("budget", c.budget);
  get("ceiling", c.ceiling);
  get("shards", c.shards);
  get("jobs", c.jobs);
  get("curve", c.curve);
  get("p1", c.p1);
  get("p2", c.p2);
  get("eps", c.eps);
  get("prefixes", c.prefixes);
  get("prefix_count", c.prefix_count);
  get("prefix_bound", c.prefix_bound);
  get("seed", c.seed);
  get("sample_budget", c.sample_budget);
  get("points", c.points);
  get("tolerance", c.tolerance);
  get("out_dir", c.out_dir);
  get("version", c.version);
  return c;
}

void RunConfig::validate() const {
  static const std::vector<std::string> commands{"galois",          "resolvent",   "census-full", "census-trinomial",
                                                 "curve-count",     "curve-experiment", "fit",     "subgroups"};
  if (std::find(commands.begin(), commands.end(), command) == commands.end())
    throw InvalidInput("unknown command '" + command + "'");
  if (n < 1 || n > 10) throw InvalidInput("n must be in 1..10");
  if (budget < 1) throw InvalidInput("budget must be >= 1");
  if (shards < 1 || jobs < 1) throw InvalidInput("shards and jobs must be >= 1");
  if (ceiling < 1) throw InvalidInput("ceiling must be >= 1");
  for (long long h : heights)
    if (h < 0) throw InvalidInput("heights must be nonnegative");
  if ((command == "galois" || command == "resolvent") && poly.empty()) throw InvalidInput("--poly is required");
  if (command == "resolvent" && group.empty()) throw InvalidInput("--group is required");
  if ((command == "census-full" || command == "census-trinomial" || command == "curve-experiment") && heights.empty())
    throw InvalidInput("--h is required");
  if (command == "curve-count") {
    if (curve.empty()) throw InvalidInput("--curve is required");
    if (p1 < 1 || p2 < 1) throw InvalidInput("P1 and P2 must be >= 1");
    if (!(eps >= 0)) throw InvalidInput("eps must be >= 0");
  }
  if (command == "curve-experiment" && (prefix_count < 1 || prefix_bound < 0 || sample_budget < 1))
    throw InvalidInput("prefix_count, sample_budget must be >= 1 and prefix_bound >= 0");
  if (!(tolerance >= 0)) throw InvalidInput("tolerance must be >= 0");
}

namespace {

std::filesystem::path output_dir(const RunConfig& c, bool required) {
  std::string dir = c.out_dir;
  if (dir.empty())
    if (const char* env = std::getenv(kOutEnv)) dir = env;
  if (dir.empty()) {
    if (!required) return {};
    dir = ".";
  }
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << content;
}

json sidecar(const RunConfig& c, double seconds) {
  return {{"config", c.to_json()}, {"version", kVersion}, {"duration_seconds", seconds}};
}

std::vector<CompareInput> fits_for(const std::vector<CensusRecord>& recs, const std::vector<std::string>& labels,
                                   json& fit_json, std::ostream& err) {
  std::vector<CompareInput> out;
  for (const auto& label : labels) {
    try {
      out.push_back({label, fit_exponent(series(recs, label))});
      fit_json[label] = to_json(out.back().fit);
    } catch (const InsufficientData& e) {
      err << "fit skipped for " << label << ": " << e.what() << '\n';
    }
  }
  return out;
}

int run_census_full(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusOptions opt{c.budget, c.ceiling, c.shards, c.jobs};
  const auto recs = census_full(c.n, c.heights, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto dir = output_dir(c, true);
  const std::string stem = "census_full_n" + std::to_string(c.n);
  const std::string csv = census_csv(recs);
  write_file(dir / (stem + ".csv"), csv);

  std::vector<std::string> labels;
  for (const auto& r : recs)
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) labels.push_back(r.label);
  json fit_json = json::object();
  auto inputs = fits_for(recs, labels, fit_json, err);
  const std::string sn = "S" + std::to_string(c.n);
  try {
    std::vector<std::string> excl{sn, "certified_Sn"};
    inputs.push_back({"non_Sn", fit_exponent(complement_series(recs, excl))});
    fit_json["non_Sn"] = to_json(inputs.back().fit);
    if (c.n >= 9) {
      excl.push_back("contained_in_An");
      inputs.push_back({"non_Sn_An", fit_exponent(complement_series(recs, excl))});
      fit_json["non_Sn_An"] = to_json(inputs.back().fit);
    }
  } catch (const InsufficientData& e) {
    err << "aggregate fit skipped: " << e.what() << '\n';
  }
  const auto rows = compare_report(inputs, c.n, c.tolerance);
  json side = sidecar(c, secs);
  json rj = json::array();
  for (const auto& r : rows) rj.push_back(to_json(r));
  side["fits"] = fit_json;
  side["compare"] = rj;
  write_file(dir / (stem + ".json"), side.dump(2) + "\n");
  const std::string summary = csv + "\n" + compare_text(rows);
  write_file(dir / (stem + "_summary.txt"), summary);
  out << summary;
  return 0;
}

int run_census_trinomial(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusOptions opt{c.budget, c.ceiling, c.shards, c.jobs};
  const auto recs = census_trinomial(c.n, c.r, c.heights, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto dir = output_dir(c, true);
  const std::string stem = "census_trinomial_n" + std::to_string(c.n) + "_r" + std::to_string(c.r);
  const std::string csv = census_csv(recs);
  write_file(dir / (stem + ".csv"), csv);
  json fit_json = json::object();
  std::vector<CompareInput> inputs = fits_for(recs, {trinomial_label::integer_zero}, fit_json, err);
  try {
    inputs.push_back({"not_certified_Sn", fit_exponent(complement_series(recs, {trinomial_label::certified_Sn}))});
    fit_json["not_certified_Sn"] = to_json(inputs.back().fit);
  } catch (const InsufficientData& e) {
    err << "fit skipped for not_certified_Sn: " << e.what() << '\n';
  }
  const auto rows = compare_report_trinomial(inputs, c.n, c.tolerance);
  json side = sidecar(c, secs);
  json rj = json::array();
  for (const auto& r : rows) rj.push_back(to_json(r));
  side["fits"] = fit_json;
  side["compare"] = rj;
  side["caveat"] =
      "not_certified_Sn counts everything outside certified_Sn; indeterminate rows are listed separately";
  write_file(dir / (stem + ".json"), side.dump(2) + "\n");
  const std::string summary = csv + "\n" + compare_text(rows);
  write_file(dir / (stem + "_summary.txt"), summary);
  out << summary;
  return 0;
}

int run_curve_experiment(const RunConfig& c, std::ostream& out, std::ostream&) {
  const auto t0 = std::chrono::steady_clock::now();
  const PermGroup g = parse_group(c.group.empty() ? "A" + std::to_string(c.n) : c.group, c.n);
  auto prefixes = c.prefixes;
  ExperimentOptions opt;
  opt.sample_budget = c.sample_budget;
  opt.jobs = c.jobs;
  if (prefixes.empty()) {
    // oversample so that skipped prefixes can be replaced
    prefixes = sample_prefixes(c.n, static_cast<std::size_t>(c.prefix_count) * 2, c.prefix_bound, c.seed);
    opt.max_prefixes = static_cast<std::size_t>(c.prefix_count);
  }
  const auto ex = resolvent_curve_experiment(c.n, g, prefixes, c.heights, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto dir = output_dir(c, true);
  const std::string stem = "curve_experiment_n" + std::to_string(c.n);
  const std::string csv = experiment_csv(ex);
  write_file(dir / (stem + ".csv"), csv);
  json side = sidecar(c, secs);
  side["experiment"] = to_json(ex);
  write_file(dir / (stem + ".json"), side.dump(2) + "\n");
  out << csv;
  for (const auto& s : ex.notices) out << "# " << s << '\n';
  out << "# alpha " << ex.alpha << ", 1/m = " << 1.0 / static_cast<double>(ex.m) << '\n';
  return 0;
}

void emit_json(const RunConfig& c, const std::string& name, const json& body, std::ostream& out) {
  out << body.dump(2) << '\n';
  const auto dir = output_dir(c, false);
  if (!dir.empty()) {
    json j = body;
    j["config"] = c.to_json();
    write_file(dir / (name + ".json"), j.dump(2) + "\n");
  }
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "galois") {
    const IntPolynomial f = IntPolynomial::parse(c.poly);
    json j = to_json(identify(f, c.budget));
    j["poly"] = f.to_string();
    if (f.degree() >= 2) j["sn_certificate"] = to_json(certify_Sn(f, c.budget));
    emit_json(c, "galois", j, out);
    return 0;
  }
  if (c.command == "resolvent") {
    const IntPolynomial f = IntPolynomial::parse(c.poly);
    const PermGroup g = parse_group(c.group, f.degree());
    const Resolvent phi = galois_resolvent(f, g);
    json j = to_json(phi);
    std::vector<std::string> roots;
    for (const auto& z : integer_root_test(phi)) roots.push_back(to_string(z));
    j["integer_roots"] = roots;
    emit_json(c, "resolvent", j, out);
    return 0;
  }
  if (c.command == "census-full") return run_census_full(c, out, err);
  if (c.command == "census-trinomial") return run_census_trinomial(c, out, err);
  if (c.command == "curve-experiment") return run_curve_experiment(c, out, err);
  if (c.command == "curve-count") {
    const PlaneCurve f = PlaneCurve::parse(c.curve);
    json j;
    const PointCount pc = count_integer_points(f, c.p1, c.p2, c.ceiling, c.jobs);
    j["N"] = pc.count;
    j["zero_rows"] = pc.zero_rows;
    j["T"] = to_string(monomial_T(f, c.p1, c.p2));
    try {
      const BoundRatio br = bound_ratio(f, c.p1, c.p2, c.eps);
      j["rhs"] = br.rhs;
      j["ratio"] = br.ratio;
    } catch (const UndefinedBound& e) {
      j["rhs"] = nullptr;
      j["note"] = e.what();
    }
    emit_json(c, "curve_count", j, out);
    return 0;
  }
  if (c.command == "fit") {
    const ExponentFit fit = fit_exponent(c.points);
    emit_json(c, "fit", to_json(fit), out);
    return 0;
  }
  if (c.command == "subgroups") {
    const auto rep = min_transitive_index_report(c.n);
    json classes = json::array();
    for (const auto& t : rep.transitive_classes)
      classes.push_back({{"name", t.name}, {"order", t.order}, {"index", t.index}, {"conjugates", t.conjugates}});
    json j{{"n", rep.n}, {"subgroup_count", rep.subgroup_count}, {"transitive_classes", classes}};
    j["min_index"] = rep.min_index ? json(*rep.min_index) : json(nullptr);
    emit_json(c, "subgroups", j, out);
    return 0;
  }
  throw InvalidInput("unknown command '" + c.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    return dispatch(config, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const CeilingExceeded& e) {
    err << "ceiling: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace galcensus
