// atomforce: evaluate two-atom dispersion and entanglement forces from a config file.
//
//   atomforce force      --config run.ini [--section.key value ...]
//   atomforce verify     [--target-cos 18,-8,1] [--target-sin -9,16,-3]
//   atomforce ratio      --config run.ini
//   atomforce crossover  --config run.ini | --crossover.prefactor 0.1
//   atomforce trajectory --config run.ini

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "atomforce/cli/commands.hpp"

namespace {

using namespace atomforce;
using namespace atomforce::cli;

struct ConfigOptions {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

void add_config_options(CLI::App* sub, ConfigOptions& opts) {
  sub->add_option("--config", opts.config_path, "sectioned key = value file");
  for (const auto& k : known_keys()) {
    opts.options[k.key] = sub->add_option(std::string("--") + k.key, opts.values[k.key], k.help);
  }
}

RawConfig effective_config(const ConfigOptions& opts) {
  RawConfig raw;
  if (!opts.config_path.empty()) raw = read_config_file(opts.config_path);
  for (const auto& [key, opt] : opts.options) {
    if (opt->count() > 0) raw[key] = opts.values.at(key);
  }
  return raw;
}

int emit(const CommandResult& r, const RawConfig& raw) {
  const auto out = output_from(Fields(raw));
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (out.path != "-") {
    file.open(out.path);
    if (!file) throw ConfigError("output.path: cannot open '" + out.path + "' for writing");
    os = &file;
  }
  if (out.format == "json") {
    write_json(*os, r.data);
  } else {
    write_csv(*os, r.data);
  }
  for (const auto& msg : r.diagnostics) std::cerr << "atomforce: " << msg << '\n';
  return r.exit_code;
}

std::array<ladder::Rational, 3> parse_triple(const std::string& s, const char* flag) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::array<ladder::Rational, 3> out;
  for (auto& c : out) {
    std::string tok;
    if (!(in >> tok)) throw ConfigError(std::string(flag) + " needs three rational coefficients");
    try {
      c = ladder::Rational(tok);
    } catch (const std::exception&) {
      throw ConfigError(std::string(flag) + ": not a rational number: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom dispersion, Casimir-Polder, nonequilibrium and entanglement forces"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1);

  ConfigOptions force_opts, ratio_opts, cross_opts, traj_opts;
  auto* force = app.add_subcommand("force", "force components over a separation sweep");
  add_config_options(force, force_opts);
  auto* ratio = app.add_subcommand("ratio", "detection ratios over a separation sweep");
  add_config_options(ratio, ratio_opts);
  auto* crossover = app.add_subcommand("crossover", "separation where a ratio equals one");
  add_config_options(crossover, cross_opts);
  auto* trajectory = app.add_subcommand("trajectory", "quasi-static separation dynamics");
  add_config_options(trajectory, traj_opts);

  auto* verify = app.add_subcommand("verify", "re-derive the frequency integrand and entanglement kernel");
  std::string target_cos, target_sin;
  verify->add_option("--target-cos", target_cos, "override the cos-part target coefficients");
  verify->add_option("--target-sin", target_sin, "override the sin-part target coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_validation;
  }

  try {
    if (verify->parsed()) {
      ladder::FcTargetCoefficients target;
      if (!target_cos.empty()) target.cos_part = parse_triple(target_cos, "--target-cos");
      if (!target_sin.empty()) target.sin_part = parse_triple(target_sin, "--target-sin");
      const auto report = run_verify(target);
      std::cout << report.text;
      return report.passed ? exit_ok : exit_verification;
    }
    if (force->parsed()) {
      const auto raw = effective_config(force_opts);
      return emit(run_force(raw), raw);
    }
    if (ratio->parsed()) {
      const auto raw = effective_config(ratio_opts);
      return emit(run_ratio(raw), raw);
    }
    if (crossover->parsed()) {
      const auto raw = effective_config(cross_opts);
      return emit(run_crossover(raw), raw);
    }
    if (trajectory->parsed()) {
      const auto raw = effective_config(traj_opts);
      return emit(run_trajectory(raw), raw);
    }
  } catch (const Error& e) {
    std::cerr << "atomforce: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return exit_validation;
}
