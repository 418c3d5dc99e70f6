// Copyright 2026 The choimaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choimaps/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "choimaps/detection.hpp"
#include "choimaps/report.hpp"
#include "choimaps/states.hpp"

namespace choimaps::cli {

namespace {

struct Options {
  std::string map;
  std::string family;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> b;
  std::string beta_range;
  std::string gamma_range;
  std::string b_range;
  long long samples = 10000;
  std::uint64_t seed = 0;
  bool orbit = false;
  std::string format = "json";
  std::string out_path;
  std::optional<double> tol;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Tolerance tolerance(const Options& o) {
  Tolerance t;
  if (o.tol) {
    if (!(*o.tol > 0.0) || !std::isfinite(*o.tol)) throw UsageError("--tol must be a positive number");
    t.psd_tol = *o.tol;
  }
  return t;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// Builds the single state named by --family plus its parameter flags.
BipartiteState state_from_flags(const Options& o) {
  const Family f = family_from_string(o.family);
  if (f == Family::RhoBetaGamma) {
    require(o.beta && o.gamma, "rho-beta-gamma needs --beta and --gamma");
    require(!o.b, "--b does not apply to rho-beta-gamma");
    const RhoFamilyParams p{*o.beta, *o.gamma};
    p.validate();
    return build_rho_beta_gamma(p);
  }
  require(o.b.has_value(), to_string(f) + " needs --b");
  require(!o.beta && !o.gamma, "--beta/--gamma do not apply to " + to_string(f));
  const HorodeckiParams p{*o.b};
  p.validate();
  return f == Family::SigmaB ? build_sigma_b(p) : build_varrho_b(p);
}

GridRange range_from_flags(const std::string& range, const std::optional<double>& single, const std::string& name) {
  require(range.empty() || !single, "give either --" + name + " or --" + name + "-range, not both");
  if (!range.empty()) return GridRange::parse(range);
  require(single.has_value(), "scan needs --" + name + "-range (or a fixed --" + name + ")");
  return GridRange::single(*single);
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file_atomically(o.out_path, text);
  }
}

int cmd_verify_map(const Options& o, std::ostream& out) {
  const MapParams p = MapParams::parse(o.map);
  const Tolerance tol = tolerance(o);
  require(o.samples >= 1, "--samples must be >= 1");
  require(o.format == "json", "verify-map only supports --format json");
  const auto verdict = verify_map_positivity(p, static_cast<std::size_t>(o.samples), o.seed, tol);
  write_output(o, nlohmann::json(verdict).dump(2) + "\n", out);
  return verdict.counterexample ? kExitFinding : kExitOk;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const MapParams p = MapParams::parse(o.map);
  const Tolerance tol = tolerance(o);
  const auto format = output_format_from_string(o.format);
  require(format != OutputFormat::Gnuplot, "detect supports --format json or csv");
  const auto state = state_from_flags(o);
  const auto report = detect(state, p, tol);
  write_output(o, format == OutputFormat::Json ? nlohmann::json(report).dump(2) + "\n" : format_reports({report}, format),
               out);
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const MapParams p = MapParams::parse(o.map);
  const Tolerance tol = tolerance(o);
  const auto format = output_format_from_string(o.format);
  ScanSpec spec;
  spec.family = family_from_string(o.family);
  if (spec.family == Family::RhoBetaGamma) {
    require(o.b_range.empty() && !o.b, "--b/--b-range do not apply to rho-beta-gamma");
    spec.beta = range_from_flags(o.beta_range, o.beta, "beta");
    spec.gamma = range_from_flags(o.gamma_range, o.gamma, "gamma");
  } else {
    require(o.beta_range.empty() && o.gamma_range.empty() && !o.beta && !o.gamma,
            "--beta/--gamma ranges do not apply to " + o.family);
    spec.b = range_from_flags(o.b_range, o.b, "b");
  }
  const auto result = scan_grid(spec, p, tol, 1);
  std::optional<std::filesystem::path> path;
  if (!o.out_path.empty()) path = o.out_path;
  emit_scan(result, format, path, out);
  return kExitOk;
}

int cmd_ppt_check(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance(o);
  const auto format = output_format_from_string(o.format);
  require(format != OutputFormat::Gnuplot, "ppt-check supports --format json or csv");
  const auto state = state_from_flags(o);
  const double min_pt = min_eigenvalue(partial_transpose(state, Subsystem::B), tol);
  const bool ppt = min_pt >= -tol.psd_tol;
  if (format == OutputFormat::Json) {
    nlohmann::json j{{"state", state}, {"ppt", ppt}, {"min_pt_eig", std::stod(format_number(min_pt))}};
    write_output(o, j.dump(2) + "\n", out);
  } else {
    write_output(o,
                 "state,ppt,min_pt_eig\n\"" + state.label() + "\"," + (ppt ? "true" : "false") + "," +
                     format_number(min_pt) + "\n",
                 out);
  }
  return kExitOk;
}

int cmd_horodecki(const Options& o, std::ostream& out) {
  const MapParams p = MapParams::parse(o.map);
  const Tolerance tol = tolerance(o);
  const auto format = output_format_from_string(o.format);
  require(format != OutputFormat::Gnuplot, "horodecki supports --format json or csv");
  const Family f = o.family.empty() ? Family::SigmaB : family_from_string(o.family);
  require(f != Family::RhoBetaGamma, "horodecki works on sigma-b or varrho-b");
  require(o.b.has_value(), "horodecki needs --b");
  const HorodeckiParams hp{*o.b};
  hp.validate();
  const auto state = f == Family::SigmaB ? build_sigma_b(hp) : build_varrho_b(hp);

  std::vector<DetectionReport> reports;
  if (o.orbit) {
    for (const auto& member : local_unitary_orbit(state, pauli_local_unitaries())) reports.push_back(detect(member, p, tol));
  } else {
    reports.push_back(detect(state, p, tol));
  }
  write_output(o, format_reports(reports, format), out);
  const bool any = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.map_detects; });
  return any ? kExitFinding : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Four-parameter Choi-type maps on M_4: positivity checks and entanglement detection", "choimaps"};
  app.require_subcommand(1, 1);

  const auto add_map = [&](CLI::App* sub) {
    sub->add_option("--map", o.map, "Map parameters w,x,y,z")->required();
  };
  const auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "PSD tolerance (default 1e-10)"); };
  const auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out_path, "Write to this file instead of standard output");
  };
  const auto add_state = [&](CLI::App* sub, bool with_family_default) {
    auto* fam = sub->add_option("--family", o.family, "rho-beta-gamma, sigma-b or varrho-b");
    if (!with_family_default) fam->required();
    sub->add_option("--beta", o.beta, "beta in [0, 10]");
    sub->add_option("--gamma", o.gamma, "gamma >= 0");
    sub->add_option("--b", o.b, "b in (0, 1)");
  };

  auto* verify = app.add_subcommand("verify-map", "Randomized search for a positivity counterexample");
  add_map(verify);
  verify->add_option("--samples", o.samples, "Number of random density matrices");
  verify->add_option("--seed", o.seed, "RNG seed");
  add_tol(verify);
  add_output(verify, {"json"});

  auto* detect_cmd = app.add_subcommand("detect", "Apply (I (x) Phi) to one state and classify it");
  add_map(detect_cmd);
  add_state(detect_cmd, false);
  add_tol(detect_cmd);
  add_output(detect_cmd, {"json", "csv"});

  auto* scan = app.add_subcommand("scan", "Detection reports over a parameter grid");
  add_map(scan);
  add_state(scan, false);
  scan->add_option("--beta-range", o.beta_range, "LO:HI:STEP");
  scan->add_option("--gamma-range", o.gamma_range, "LO:HI:STEP");
  scan->add_option("--b-range", o.b_range, "LO:HI:STEP");
  add_tol(scan);
  add_output(scan, {"json", "csv", "gnuplot"});

  auto* ppt = app.add_subcommand("ppt-check", "Partial-transpose test of one state");
  add_state(ppt, false);
  add_tol(ppt);
  add_output(ppt, {"json", "csv"});

  auto* horodecki = app.add_subcommand("horodecki", "Non-detection check on the 2x4 Horodecki states");
  add_map(horodecki);
  horodecki->add_option("--family", o.family, "sigma-b (default) or varrho-b");
  horodecki->add_option("--b", o.b, "b in (0, 1)")->required();
  horodecki->add_flag("--orbit", o.orbit, "Sweep all 64 Pauli local unitaries");
  add_tol(horodecki);
  add_output(horodecki, {"json", "csv"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_map(o, out);
    if (detect_cmd->parsed()) return cmd_detect(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    if (ppt->parsed()) return cmd_ppt_check(o, out);
    if (horodecki->parsed()) return cmd_horodecki(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace choimaps::cli
