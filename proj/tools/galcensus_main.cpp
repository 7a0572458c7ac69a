#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galcensus/cli.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::vector<long long>> parse_prefixes(const std::string& s) {
  std::vector<std::vector<long long>> out;
  for (const auto& block : split(s, ';')) {
    std::vector<long long> p;
    for (const auto& x : split(block, ',')) p.push_back(std::stoll(x));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::pair<double, double>> parse_points(const std::string& s) {
  std::vector<std::pair<double, double>> out;
  for (const auto& block : split(s, ';')) {
    const auto xy = split(block, ',');
    if (xy.size() != 2) throw CLI::ValidationError("--points", "expected \"H,N;H,N;...\"");
    out.emplace_back(std::stod(xy[0]), std::stod(xy[1]));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  galcensus::RunConfig cfg;
  std::string prefixes, points, config_file;
  bool dump_config = false;

  CLI::App app{"Galois group censuses of monic integer polynomials"};
  app.set_help_flag("--help", "print help");  // --h is the height grid
  app.set_version_flag("--version", std::string(galcensus::kVersion));
  app.require_subcommand(0, 1);  // none only with --config
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_dir, "output directory (default $GALCENSUS_OUT, then .)");
  app.add_option("--config", config_file, "run a serialized RunConfig (JSON)")->check(CLI::ExistingFile);
  app.add_flag("--dump-config", dump_config, "print the resolved config as JSON and exit");

  auto* galois = app.add_subcommand("galois", "identify the Galois group of one polynomial");
  galois->add_option("--poly", cfg.poly, "coefficients, leading first")->required();
  galois->add_option("--budget", cfg.budget, "prime budget");

  auto* resolvent = app.add_subcommand("resolvent", "compute a certified Galois resolvent");
  resolvent->add_option("--poly", cfg.poly, "coefficients, leading first")->required();
  resolvent->add_option("--group", cfg.group, "Sn, An, catalog name or cycles \"(1 2);(3 4)\"")->required();

  auto* census = app.add_subcommand("census", "exhaustive census over height boxes");
  census->require_subcommand(1);
  auto* full = census->add_subcommand("full", "all monic polynomials of degree n");
  auto* tri = census->add_subcommand("trinomial", "trinomials X^n + aX^r + b");
  for (auto* sub : {full, tri}) {
    sub->add_option("--n", cfg.n, "degree")->required();
    sub->add_option("--h", cfg.heights, "height grid")->delimiter(',')->required();
    sub->add_option("--budget", cfg.budget, "prime budget");
    sub->add_option("--ceiling", cfg.ceiling, "work ceiling");
    sub->add_option("--shards", cfg.shards, "number of shards");
    sub->add_option("--tolerance", cfg.tolerance, "slope tolerance");
    sub->add_option("--out", cfg.out_dir, "output directory");
  }
  tri->add_option("--r", cfg.r, "middle exponent")->required();

  auto* curve = app.add_subcommand("curve", "integer points on plane curves");
  curve->require_subcommand(1);
  auto* count = curve->add_subcommand("count", "count integer points in a box");
  count->add_option("--curve", cfg.curve, "monomials \"e1,e2,c;...\"")->required();
  count->add_option("--p1", cfg.p1, "box half-width in x1")->required();
  count->add_option("--p2", cfg.p2, "box half-width in x2")->required();
  count->add_option("--eps", cfg.eps, "exponent slack");
  count->add_option("--ceiling", cfg.ceiling, "row ceiling");
  auto* experiment = curve->add_subcommand("experiment", "resolvent curve experiment");
  experiment->add_option("--n", cfg.n, "degree")->required();
  experiment->add_option("--group", cfg.group, "subgroup (default An)");
  experiment->add_option("--h", cfg.heights, "height grid")->delimiter(',')->required();
  experiment->add_option("--prefixes", prefixes, "explicit prefixes \"a1,...;...\"");
  experiment->add_option("--count", cfg.prefix_count, "sampled prefix count");
  experiment->add_option("--bound", cfg.prefix_bound, "sampled prefix coefficient bound");
  experiment->add_option("--seed", cfg.seed, "sampling seed");
  experiment->add_option("--samples", cfg.sample_budget, "specialization budget per prefix");
  experiment->add_option("--out", cfg.out_dir, "output directory");

  auto* fit = app.add_subcommand("fit", "log-log exponent fit");
  fit->add_option("--points", points, "\"H,N;H,N;...\"")->required();

  auto* subgroups = app.add_subcommand("subgroups", "transitive subgroup report for S_n");
  subgroups->add_option("--n", cfg.n, "degree, at most 5")->required();

  CLI11_PARSE(app, argc, argv);

  if (!config_file.empty()) {
    std::ifstream in(config_file);
    cfg = galcensus::RunConfig::from_json(nlohmann::json::parse(in));
  } else {
    if (galois->parsed()) cfg.command = "galois";
    if (resolvent->parsed()) cfg.command = "resolvent";
    if (full->parsed()) cfg.command = "census-full";
    if (tri->parsed()) cfg.command = "census-trinomial";
    if (count->parsed()) cfg.command = "curve-count";
    if (experiment->parsed()) cfg.command = "curve-experiment";
    if (fit->parsed()) cfg.command = "fit";
    if (subgroups->parsed()) cfg.command = "subgroups";
    try {
      if (!prefixes.empty()) cfg.prefixes = parse_prefixes(prefixes);
      if (!points.empty()) cfg.points = parse_points(points);
    } catch (const std::exception& e) {
      std::cerr << "invalid input: " << e.what() << '\n';
      return 2;
    }
  }
  if (cfg.command.empty()) {
    std::cerr << "a command or --config is required; run with --help\n";
    return 2;
  }
  if (dump_config) {
    std::cout << cfg.to_json().dump(2) << '\n';
    return 0;
  }
  return galcensus::run(cfg, std::cout, std::cerr);
}
