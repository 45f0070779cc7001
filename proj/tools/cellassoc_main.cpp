// cellassoc: optimal and equilibrium cell partitions for base-station
// association, driven by scenario files.
//
// Exit codes: 0 on success with a converged result, 2 when outputs were
// written but something did not converge (or the oracle disagrees), 1 on any
// error.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellassoc/cellassoc.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(',', start);
    if (pos == std::string::npos) {
      if (start < s.size()) out.push_back(s.substr(start));
      return out;
    }
    if (pos > start) out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string preset_blurb(const char* source) {
  std::string line;
  for (const char* p = source; *p && *p != '\n'; ++p) line += *p;
  std::size_t b = line.find_first_not_of("# ");
  return b == std::string::npos ? "" : line.substr(b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal and equilibrium cell partitions for station association"};
  app.require_subcommand(1);

  std::string scenario_arg;
  std::string out_dir = ".";
  int station = 1;
  double from = 0.0, to = 0.0;
  int steps = 0;
  std::string policies_arg;

  auto* run = app.add_subcommand("run", "solve a scenario, write partition CSV + report JSON");
  run->add_option("scenario", scenario_arg, "preset name or scenario file")->required();
  run->add_option("--out-dir", out_dir, "directory for output files")->capture_default_str();

  auto* sweep =
      app.add_subcommand("sweep", "move one station across a range and tabulate the results");
  sweep->add_option("scenario", scenario_arg, "preset name or scenario file")->required();
  sweep->add_option("--station", station, "station to move (1-based, as in station.N keys)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--from", from, "first x position")->required();
  sweep->add_option("--to", to, "last x position")->required();
  sweep->add_option("--steps", steps, "number of positions (one CSV row each)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out-dir", out_dir, "directory for output files")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "run several policies on one scenario");
  compare->add_option("scenario", scenario_arg, "preset name or scenario file")->required();
  compare->add_option("--policies", policies_arg, "comma-separated policy list")->required();
  compare->add_option("--out-dir", out_dir, "directory for output files")->capture_default_str();

  auto* presets = app.add_subcommand("presets", "built-in scenarios");
  auto* presets_list = presets->add_subcommand("list", "list the built-in scenarios");
  presets->require_subcommand(1);

  auto* oracle = app.add_subcommand("oracle", "cross-check the solver against brute force");
  oracle->add_option("scenario", scenario_arg, "preset name or scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (out_dir != ".") std::filesystem::create_directories(out_dir);
    if (run->parsed()) {
      const cellassoc::Scenario sc = cellassoc::load_scenario(scenario_arg);
      const cellassoc::RunRecord rec = cellassoc::run_scenario(sc, out_dir);
      std::fputs(rec.summary.c_str(), stdout);
      std::printf("elapsed %.3f s\n", rec.duration_seconds);
      return rec.converged ? 0 : 2;
    }
    if (sweep->parsed()) {
      const cellassoc::Scenario sc = cellassoc::load_scenario(scenario_arg);
      const cellassoc::SweepResult result =
          cellassoc::sweep_station_position(sc, station - 1, from, to, steps, out_dir);
      std::fputs(result.summary.c_str(), stdout);
      return result.all_converged ? 0 : 2;
    }
    if (compare->parsed()) {
      const cellassoc::Scenario sc = cellassoc::load_scenario(scenario_arg);
      const cellassoc::CompareResult result =
          cellassoc::compare_policies(sc, split_csv(policies_arg), out_dir);
      std::fputs(result.summary.c_str(), stdout);
      return 0;
    }
    if (presets_list->parsed()) {
      for (const auto& name : cellassoc::preset_names())
        std::printf("%-28s %s\n", name.c_str(),
                    preset_blurb(cellassoc::preset_source(name)).c_str());
      return 0;
    }
    if (oracle->parsed()) {
      const cellassoc::Scenario sc = cellassoc::load_scenario(scenario_arg);
      const cellassoc::OracleCheck check = cellassoc::oracle_check(sc);
      std::fputs(check.summary.c_str(), stdout);
      return check.match ? 0 : 2;
    }
  } catch (const cellassoc::ScenarioValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
