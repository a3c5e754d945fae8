// skewctl: compute skew information and uncertainty-bound reports from JSON
// files or catalog shorthand, emit figure CSV datasets, and run the
// verification suites.
//
// Exit codes: 0 success, 1 property violation, 2 input/parse error,
// 3 bound-validity violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewinfo/catalog.hpp"
#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/figures.hpp"
#include "skewinfo/json_io.hpp"
#include "skewinfo/observable_bounds.hpp"
#include "skewinfo/verify.hpp"

namespace {

using namespace skewinfo;

constexpr const char* kSpecHelp = R"(Object specs (catalog shorthand or a JSON file path):
  states:       bloch:x,y,z        qubit from a Bloch vector
                spin1:theta,phi    pure spin-1 state
                qutrit:a,alpha,beta
                mixed:d            maximally mixed state I/d
                <file.json>        {"rho": <matrix>} or a bare matrix
  observables:  pauli | pauli.x|y|z | spin1 | spin1.x|y|z | <file.json>
                (pauli/spin1 expand to the full triple in --targets)
  channels:     pd:q | ad:q | bf:q | id:d | <file.json> ({"kraus": [...]})
Matrix JSON: {"dim": d, "entries": [[[re,im], ...], ...]}, row-major.
Figure grids: fig1 samples left endpoints of res uniform steps (phi periodic,
fixed radius via --t); fig2/fig3/fig5 include both endpoints; fig4's alpha
axis uses midpoints of (0, pi). --slice selects the phi=pi/4 (fig3) or
beta=pi/2 (fig4) line cut.
SKEWCTL_TOL_EQ overrides the equality tolerance used by validity checks.)";

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot parse number '" + text + "' in " + what);
  }
  if (used != text.size()) {
    throw ParseError("trailing characters in number '" + text + "' in " + what);
  }
  return v;
}

std::vector<double> parse_params(const std::string& spec, std::size_t expected) {
  const std::size_t colon = spec.find(':');
  std::vector<double> out;
  std::stringstream body(colon == std::string::npos ? "" : spec.substr(colon + 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    out.push_back(parse_double(item, spec));
  }
  if (out.size() != expected) {
    throw ParseError("spec '" + spec + "' needs " + std::to_string(expected) +
                     " parameter(s)");
  }
  return out;
}

bool looks_like_file(const std::string& spec) {
  return spec.find('/') != std::string::npos || spec.ends_with(".json") ||
         std::filesystem::exists(spec);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

DensityState parse_state(const std::string& spec, const Tolerances& tol) {
  if (spec.starts_with("bloch:")) {
    const auto p = parse_params(spec, 3);
    return bloch_qubit({p[0], p[1], p[2]}, tol);
  }
  if (spec.starts_with("spin1:")) {
    const auto p = parse_params(spec, 2);
    return spin1_pure_state(p[0], p[1], tol);
  }
  if (spec.starts_with("qutrit:")) {
    const auto p = parse_params(spec, 3);
    return qutrit_family(p[0], p[1], p[2], tol);
  }
  if (spec.starts_with("mixed:")) {
    const auto p = parse_params(spec, 1);
    const auto d = static_cast<Eigen::Index>(p[0]);
    if (d < 2 || p[0] != static_cast<double>(d)) {
      throw ParseError("mixed:d needs an integer dimension >= 2");
    }
    return DensityState(ComplexMatrix::Identity(d, d) / static_cast<double>(d), tol);
  }
  if (looks_like_file(spec)) {
    return DensityState(state_matrix_from_json(read_json_file(spec)), tol);
  }
  throw ParseError("unrecognized state spec: " + spec);
}

std::vector<Observable> pick_axis(std::vector<Observable> trio, const std::string& axis,
                                  const std::string& spec) {
  if (axis == "x") return {trio[0]};
  if (axis == "y") return {trio[1]};
  if (axis == "z") return {trio[2]};
  throw ParseError("unknown axis '" + axis + "' in " + spec);
}

std::vector<Observable> parse_observable_group(const std::string& spec,
                                               const Tolerances& tol) {
  if (spec == "pauli") {
    return pauli_observables();
  }
  if (spec == "spin1") {
    return spin1_observables();
  }
  if (spec.starts_with("pauli.")) {
    return pick_axis(pauli_observables(), spec.substr(6), spec);
  }
  if (spec.starts_with("spin1.")) {
    return pick_axis(spin1_observables(), spec.substr(6), spec);
  }
  if (looks_like_file(spec)) {
    return {Observable(observable_matrix_from_json(read_json_file(spec)), tol)};
  }
  throw ParseError("unrecognized observable spec: " + spec);
}

KrausChannel parse_channel(const std::string& spec, const Tolerances& tol) {
  if (spec.starts_with("pd:")) {
    return phase_damping(parse_params(spec, 1)[0], tol);
  }
  if (spec.starts_with("ad:")) {
    return amplitude_damping(parse_params(spec, 1)[0], tol);
  }
  if (spec.starts_with("bf:")) {
    return bit_flip(parse_params(spec, 1)[0], tol);
  }
  if (spec.starts_with("id:")) {
    const double d = parse_params(spec, 1)[0];
    const auto dim = static_cast<Eigen::Index>(d);
    if (dim < 1 || d != static_cast<double>(dim)) {
      throw ParseError("id:d needs an integer dimension >= 1");
    }
    return identity_channel(dim, tol);
  }
  if (looks_like_file(spec)) {
    return KrausChannel(kraus_list_from_json(read_json_file(spec)), tol);
  }
  throw ParseError("unrecognized channel spec: " + spec);
}

std::vector<std::string> split_targets(const std::string& targets) {
  std::vector<std::string> out;
  std::stringstream body(targets);
  std::string item;
  while (std::getline(body, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  if (out.empty()) {
    throw ParseError("--targets is empty");
  }
  return out;
}

Tolerances tolerances_from_env() {
  Tolerances tol;
  if (const char* raw = std::getenv("SKEWCTL_TOL_EQ")) {
    tol.eq_tol = parse_double(raw, "SKEWCTL_TOL_EQ");
    tol.validate();
  }
  return tol;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot open output file: " + out_path);
  }
  out << text << "\n";
}

struct CliOptions {
  std::string state;
  std::string observable;
  std::string channel;
  std::string targets;
  std::string out;
  std::string figure_id;
  std::string suite = "all";
  bool as_json = false;
  bool slice = false;
  bool identity_only = false;
  int res = 0;
  double fig_t = 0.75;
  double fig_q = 0.1;
  std::uint64_t trials = 200;
  std::uint64_t seed = 7;
  std::vector<int> dims = {2, 3};
};

int run_skew(const CliOptions& opt) {
  const Tolerances tol = tolerances_from_env();
  const DensityState rho = parse_state(opt.state, tol);
  double value = 0.0;
  if (!opt.observable.empty()) {
    const std::vector<Observable> group = parse_observable_group(opt.observable, tol);
    if (group.size() != 1) {
      throw ParseError("skew needs a single observable (e.g. pauli.z, not pauli)");
    }
    value = skew_observable(rho, group.front());
  } else {
    value = skew_channel(rho, parse_channel(opt.channel, tol));
  }
  if (opt.as_json) {
    emit(nlohmann::ordered_json{{"value", value}}.dump(2), opt.out);
  } else {
    emit(format_sig12(value), opt.out);
  }
  return 0;
}

int run_bounds_obs(const CliOptions& opt) {
  const Tolerances tol = tolerances_from_env();
  const DensityState rho = parse_state(opt.state, tol);
  std::vector<Observable> obs;
  for (const std::string& spec : split_targets(opt.targets)) {
    for (Observable& M : parse_observable_group(spec, tol)) {
      obs.push_back(std::move(M));
    }
  }
  const ObservableBoundReport rep = report(rho, obs, tol);
  emit(report_to_json(rep).dump(2), opt.out);
  if (!validity_ok(rep, tol.eq_tol)) {
    std::cerr << "bound validity violated: some bound exceeds the skew sum by more than "
              << tol.eq_tol << "\n";
    return 3;
  }
  return 0;
}

int run_bounds_chan(const CliOptions& opt) {
  const Tolerances tol = tolerances_from_env();
  const DensityState rho = parse_state(opt.state, tol);
  std::vector<KrausChannel> channels;
  for (const std::string& spec : split_targets(opt.targets)) {
    channels.push_back(parse_channel(spec, tol));
  }
  PermSearchOptions search;
  search.identity_only = opt.identity_only;
  const ChannelBoundReport rep = channel_report(rho, channels, search, tol);
  emit(report_to_json(rep).dump(2), opt.out);
  if (!validity_ok(rep, tol.eq_tol)) {
    std::cerr << "bound validity violated: some bound exceeds the skew sum by more than "
              << tol.eq_tol << "\n";
    return 3;
  }
  return 0;
}

int run_figure(const CliOptions& opt) {
  FigureSpec spec;
  spec.id = opt.figure_id;
  spec.res = opt.res;
  spec.slice = opt.slice;
  spec.t = opt.fig_t;
  spec.q = opt.fig_q;
  std::string out = opt.out;
  if (out.empty()) {
    out = spec.id + (spec.slice ? "_slice.csv" : ".csv");
  }
  write_figure(spec, out);
  return 0;
}

int run_verify(const CliOptions& opt) {
  const Tolerances tol = tolerances_from_env();
  const SuiteReport rep = run_suite(opt.suite, opt.trials, opt.seed, opt.dims, tol);
  emit(suite_to_json(rep).dump(2), opt.out);
  return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner-Yanase skew information and sum-uncertainty bounds"};
  app.footer(kSpecHelp);
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* skew = app.add_subcommand("skew", "skew information of one observable or channel");
  skew->add_option("--state", opt.state, "state spec or JSON file")->required();
  CLI::Option* obs_opt = skew->add_option("--observable", opt.observable, "observable spec");
  CLI::Option* chan_opt = skew->add_option("--channel", opt.channel, "channel spec");
  obs_opt->excludes(chan_opt);
  skew->add_flag("--json", opt.as_json, "emit {\"value\": ...} instead of a bare scalar");
  skew->add_option("--out", opt.out, "write to file instead of stdout");

  CLI::App* bounds = app.add_subcommand("bounds", "sum-uncertainty bound report");
  bounds->require_subcommand(1);
  CLI::App* bounds_obs = bounds->add_subcommand("obs", "observable bounds (lb0/lb0bar/lb1)");
  bounds_obs->add_option("--state", opt.state, "state spec or JSON file")->required();
  bounds_obs->add_option("--targets", opt.targets, "comma-separated observable specs")
      ->required();
  bounds_obs->add_option("--out", opt.out, "write JSON to file");
  CLI::App* bounds_chan = bounds->add_subcommand("chan", "channel bounds (fu_two/thm3/thm4)");
  bounds_chan->add_option("--state", opt.state, "state spec or JSON file")->required();
  bounds_chan->add_option("--targets", opt.targets, "comma-separated channel specs")
      ->required();
  bounds_chan->add_option("--out", opt.out, "write JSON to file");
  bounds_chan->add_flag("--identity-only", opt.identity_only,
                        "skip the permutation search (bounds stay valid, max weakens)");

  CLI::App* figure = app.add_subcommand("figure", "emit a reproducible CSV dataset");
  figure->add_option("id", opt.figure_id, "fig1|fig2|fig3|fig4|fig5")->required();
  figure->add_option("--out", opt.out, "output path (default <id>.csv)");
  figure->add_option("--res", opt.res, "points per axis (0 = figure default)");
  figure->add_flag("--slice", opt.slice, "fig3/fig4 line-cut variant");
  figure->add_option("--t", opt.fig_t, "fig1 squared Bloch radius, default 0.75");
  figure->add_option("--q", opt.fig_q, "fig5 damping parameter, default 0.1");

  CLI::App* verify = app.add_subcommand("verify", "run a property-verification suite");
  verify->add_option("--suite", opt.suite, "lemmas|equalities|validity|corollary|all")
      ->required();
  verify->add_option("--trials", opt.trials, "random trials per property (default 200)");
  verify->add_option("--seed", opt.seed, "base RNG seed (default 7)");
  verify->add_option("--dims", opt.dims, "comma-separated dimensions (default 2,3)")
      ->delimiter(',');
  verify->add_option("--out", opt.out, "write JSON summary to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (skew->parsed()) {
      if (opt.observable.empty() == opt.channel.empty()) {
        throw ParseError("skew needs exactly one of --observable or --channel");
      }
      return run_skew(opt);
    }
    if (bounds_obs->parsed()) {
      return run_bounds_obs(opt);
    }
    if (bounds_chan->parsed()) {
      return run_bounds_chan(opt);
    }
    if (figure->parsed()) {
      return run_figure(opt);
    }
    if (verify->parsed()) {
      return run_verify(opt);
    }
    return 2;
  } catch (const SkewError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
