#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic Neumann-Poincare spectra, polariton resonance and CALR design"};
  std::string command, config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  app.add_option("command", command, "np-spectrum | resonance-sweep | calr-design | field-grid | validate")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("--config", config_path, "INI config, or a JSON summary of a previous run")
      ->required();
  app.add_option("--out", out_dir, "output directory (overrides [output] dir)");
  app.add_option("--seed", seed, "seed for randomized suites (overrides [run] seed)");
  app.add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  cli::Resolved cfg;
  try {
    cfg = cli::resolve(command, cli::load_config(config_path));
    if (seed) cfg.set("run", "seed", std::to_string(*seed));
    if (threads) cfg.set("run", "threads", std::to_string(*threads));
    if (!out_dir.empty()) cfg.set("output", "dir", out_dir);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  const std::filesystem::path dir = cfg.str("output", "dir");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "config error: cannot create output directory " << dir << ": " << ec.message()
              << "\n";
    return kExitConfig;
  }
  if (enp_set_threads(static_cast<unsigned>(cfg.integer("run", "threads"))) != ENP_OK) {
    std::cerr << "config error: " << enp_last_error() << "\n";
    return kExitConfig;
  }

  nlohmann::ordered_json summary;
  summary["tool"] = "elasto-np";
  summary["version"] = enp_version();
  summary["command"] = command;
  summary["config"] = cfg.to_json();

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitPass;
  cli::RunOutput out;
  try {
    out = cli::run_command(command, cfg);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    summary["error"] = e.what();
    code = kExitAssertion;
  }
  summary["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  summary["results"] = out.results;

  auto assertions = nlohmann::ordered_json::array();
  for (const auto& a : out.assertions) {
    assertions.push_back({{"name", a.name},
                          {"value", a.value},
                          {"relation", a.relation},
                          {"threshold", a.threshold},
                          {"passed", a.passed}});
    std::cout << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << cli::num(a.value) << " "
              << a.relation << " " << cli::num(a.threshold) << "\n";
    if (!a.passed) code = kExitAssertion;
  }
  summary["assertions"] = assertions;
  summary["status"] = code == kExitPass ? "pass" : "fail";

  try {
    if (!out.table.header.empty())
      cli::write_atomic(dir / (command + ".csv"), out.table.to_csv());
    cli::write_atomic(dir / (command + ".summary.json"), summary.dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
  std::cout << command << ": " << summary["status"].get<std::string>() << " (" << dir.string()
            << ")\n";
  return code;
}
