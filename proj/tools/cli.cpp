// Copyright 2026 The qubitkit Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "qubitkit/dump.hpp"
#include "qubitkit/grover.hpp"
#include "qubitkit/hamsim.hpp"
#include "qubitkit/qecc5.hpp"
#include "qubitkit/qft.hpp"
#include "qubitkit/shor.hpp"

namespace qubitkit::cli {
namespace {

using nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One `key: value` line per leaf, nested keys joined with '.'.
void render_human(std::ostream& out, const ordered_json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_human(out, value, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_human(out, j[i], prefix + "[" + std::to_string(i) + "]");
    }
  } else if (j.is_number_float()) {
    out << prefix << ": " << fmt12(j.get<double>()) << '\n';
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

void emit(std::ostream& out, const RunConfig& config, ordered_json payload,
          std::chrono::steady_clock::time_point start) {
  ordered_json report;
  report["subcommand"] = config.subcommand;
  report["version"] = kVersion;
  report["seed"] = config.seed;
  for (auto& [key, value] : payload.items()) report[key] = value;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  if (config.format == OutputFormat::Json) {
    out << report.dump(2) << '\n';
  } else {
    render_human(out, report, "");
  }
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json dump_json(const StateVector& s) {
  ordered_json arr = ordered_json::array();
  const auto amps = s.amplitudes();
  for (std::size_t n = 0; n < amps.size(); ++n) {
    if (amps[n] != Complex{}) arr.push_back({n, amps[n].real(), amps[n].imag()});
  }
  return arr;
}

// --- shor -------------------------------------------------------------------

int run_shor(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  shor::FactorOptions opts;
  opts.max_attempts = config.shor.attempts;
  opts.premeasure = config.shor.premeasure;
  opts.base = config.shor.a;
  const shor::FactorReport rep = shor::factor(config.shor.n, rng, opts);

  ordered_json payload;
  payload["n"] = rep.n;
  payload["success"] = rep.success;
  payload["factors"] = rep.success ? ordered_json::array({rep.p, rep.q}) : ordered_json::array();
  payload["method"] = rep.method;
  ordered_json attempts = ordered_json::array();
  for (const shor::Attempt& a : rep.attempts) {
    ordered_json rec;
    rec["a"] = a.a;
    rec["measured"] = a.measured;
    rec["period"] = a.period ? ordered_json(*a.period) : ordered_json(nullptr);
    rec["outcome"] = a.outcome;
    attempts.push_back(rec);
  }
  payload["attempts"] = attempts;
  emit(out, config, payload, start);
  return rep.success ? 0 : 1;
}

// --- grover -----------------------------------------------------------------

int run_grover(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  grover::SearchOracle oracle(config.grover.qubits, config.grover.marked);
  const grover::SearchResult res = grover::grover_search(oracle, rng, config.grover.iterations);
  const std::uint64_t search_queries = oracle.queries();
  const bool hit = oracle.query(res.found);

  ordered_json payload;
  payload["qubits"] = config.grover.qubits;
  payload["found"] = res.found;
  payload["found_is_marked"] = hit;
  payload["iterations"] = res.iterations;
  payload["queries"] = search_queries;
  payload["verification_queries"] = oracle.queries() - search_queries;
  payload["success_prob_analytic"] = res.success_prob_analytic;
  emit(out, config, payload, start);
  return 0;
}

// --- evolve -----------------------------------------------------------------

std::vector<double> parse_gaussian_args(const std::string& spec) {
  static const std::regex re(R"(^\s*gaussian\s*\(([^,]+),([^,]+),([^,]+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) return {};
  std::vector<double> args;
  for (int i = 1; i <= 3; ++i) {
    try {
      std::size_t used = 0;
      const std::string s = m[i].str();
      args.push_back(std::stod(s, &used));
      if (s.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("bad number");
    } catch (const std::exception&) {
      throw UsageError("cannot parse gaussian parameters in `" + spec + "`");
    }
  }
  return args;
}

std::vector<std::vector<double>> read_columns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open `" + path + "`");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> row;
    double v;
    while (fields >> v) row.push_back(v);
    if (row.empty() || row.size() > 2 || !fields.eof()) {
      throw UsageError("`" + path + "`: expected one or two numbers per line");
    }
    rows.push_back(row);
  }
  return rows;
}

hamsim::SplitHamiltonian make_potential(const std::string& spec, const hamsim::Grid1D& grid,
                                        double mass) {
  std::vector<double> v(grid.points(), 0.0);
  if (spec == "harmonic") {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double x = grid.position(j) - grid.length / 2.0;
      v[j] = 0.5 * x * x;
    }
  } else if (spec == "free") {
  } else if (const auto g = parse_gaussian_args(spec); !g.empty()) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double d = grid.position(j) - g[0];
      v[j] = g[2] * std::exp(-d * d / (2.0 * g[1] * g[1]));
    }
  } else {
    const auto rows = read_columns(spec);
    if (rows.size() != grid.points()) {
      throw UsageError("potential file has " + std::to_string(rows.size()) + " values, grid has " +
                       std::to_string(grid.points()));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (rows[j].size() != 1) throw UsageError("potential file must hold one real per line");
      v[j] = rows[j][0];
    }
  }
  return hamsim::SplitHamiltonian::with_quadratic_kinetic(grid, std::move(v), mass);
}

std::vector<Complex> make_psi0(const std::string& spec, const hamsim::Grid1D& grid) {
  if (spec == "harmonic") return hamsim::gaussian_samples(grid, grid.length / 2.0, 1.0, 0.0);
  if (spec == "free") return std::vector<Complex>(grid.points(), 1.0);
  if (const auto g = parse_gaussian_args(spec); !g.empty()) {
    if (!(g[1] > 0.0)) throw UsageError("gaussian sigma must be positive");
    return hamsim::gaussian_samples(grid, g[0], g[1], g[2]);
  }
  const auto rows = read_columns(spec);
  if (rows.size() != grid.points()) {
    throw UsageError("psi0 file has " + std::to_string(rows.size()) + " values, grid has " +
                     std::to_string(grid.points()));
  }
  std::vector<Complex> psi(grid.points());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    psi[j] = rows[j].size() == 2 ? Complex(rows[j][0], rows[j][1]) : Complex(rows[j][0], 0.0);
  }
  return psi;
}

int run_evolve(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const EvolveParams& p = config.evolve;
  const hamsim::Grid1D grid(p.qubits, p.length, p.dt);
  const hamsim::SplitHamiltonian h = make_potential(p.potential, grid, p.mass);
  StateVector state = hamsim::init_wavefunction(grid, make_psi0(p.psi0, grid));
  const hamsim::SplitOrder order = p.strang ? hamsim::SplitOrder::Strang : hamsim::SplitOrder::Lie;

  std::ostringstream trace;
  trace << "step,time,norm,mean_x,mean_p,energy\n";
  const auto record = [&](std::size_t step) {
    const auto o = hamsim::observables(state, h, grid);
    trace << step << ',' << fmt17(double(step) * grid.dt) << ',' << fmt17(o.norm) << ','
          << fmt17(o.mean_x) << ',' << fmt17(o.mean_p) << ',' << fmt17(o.energy) << '\n';
    return o;
  };

  const auto initial = record(0);
  for (std::size_t step = 1; step <= p.steps; ++step) {
    hamsim::evolve(state, h, grid, 1, order);
    if (step % p.every == 0 || step == p.steps) record(step);
  }
  const auto final_obs = hamsim::observables(state, h, grid);

  if (p.trace_path) {
    std::ofstream f(*p.trace_path);
    if (!f) throw UsageError("cannot write `" + *p.trace_path + "`");
    f << trace.str();
  }
  if (p.dump_final) {
    std::ofstream f(*p.dump_final);
    if (!f) throw UsageError("cannot write `" + *p.dump_final + "`");
    write_dump(f, state);
  }
  if (config.format == OutputFormat::Csv) {
    out << trace.str();
    return 0;
  }

  ordered_json payload;
  payload["qubits"] = p.qubits;
  payload["length"] = p.length;
  payload["dt"] = p.dt;
  payload["steps"] = p.steps;
  payload["order"] = p.strang ? "strang" : "lie";
  payload["initial"] = {{"norm", initial.norm}, {"mean_x", initial.mean_x},
                        {"mean_p", initial.mean_p}, {"energy", initial.energy}};
  payload["final"] = {{"time", double(p.steps) * p.dt}, {"norm", final_obs.norm},
                      {"mean_x", final_obs.mean_x}, {"mean_p", final_obs.mean_p},
                      {"energy", final_obs.energy}};
  emit(out, config, payload, start);
  return 0;
}

// --- qecc -------------------------------------------------------------------

int run_qecc(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const QeccParams& p = config.qecc;

  if (p.print_code) {
    if (config.format == OutputFormat::Json) {
      ordered_json payload;
      payload["logical_zero"] = dump_json(qecc5::logical_zero());
      payload["logical_one"] = dump_json(qecc5::logical_one());
      emit(out, config, payload, start);
    } else {
      out << "# |0_L>\n";
      write_dump(out, qecc5::logical_zero());
      out << "# |1_L>\n";
      write_dump(out, qecc5::logical_one());
    }
    return 0;
  }

  ordered_json payload;
  payload["mode"] = p.mode;
  if (p.mode == "montecarlo") {
    qecc5::NoiseModel model;
    model.p = p.p;
    const auto est = qecc5::logical_error_rate(model, p.trials, config.seed);
    payload["p"] = est.p;
    payload["trials"] = est.trials;
    payload["failures"] = est.failures;
    payload["logical_rate"] = est.rate;
    payload["stderr"] = est.standard_error;
    emit(out, config, payload, start);
    return 0;
  }

  ordered_json table = ordered_json::array();
  for (const auto& e : qecc5::all_errors()) {
    table.push_back({{"error", e.name()}, {"syndrome", qecc5::syndrome_of(e).value}});
  }
  payload["syndrome_table"] = table;

  Rng rng(config.seed);
  const qecc5::LogicalQubit q = qecc5::random_logical(rng);
  payload["logical"] = {{"alpha", complex_json(q.alpha)}, {"beta", complex_json(q.beta)}};

  std::vector<qecc5::PauliError> errors;
  if (p.error) {
    errors.push_back(qecc5::PauliError::parse(*p.error));
  } else {
    const auto all = qecc5::all_errors();
    errors.assign(all.begin(), all.end());
  }
  ordered_json results = ordered_json::array();
  double worst = 1.0;
  for (const auto& e : errors) {
    StateVector state = qecc5::encode(q);
    qecc5::apply_error(state, e);
    const auto m = qecc5::syndrome_extract(state, rng);
    const auto out_q = qecc5::decode(qecc5::recover(m.collapsed, m.syndrome));
    const double f = qecc5::logical_fidelity(q, out_q);
    worst = std::min(worst, f);
    results.push_back({{"error", e.name()}, {"syndrome", m.syndrome.value}, {"fidelity", f}});
  }
  payload["results"] = results;
  if (p.error) payload["fidelity"] = worst;
  payload["min_fidelity"] = worst;
  emit(out, config, payload, start);
  return worst >= 1.0 - 1e-10 ? 0 : 1;
}

// --- qft --------------------------------------------------------------------

int run_qft(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const QftParams& p = config.qft;
  std::ifstream in(p.input);
  if (!in) throw UsageError("cannot open `" + p.input + "`");
  StateVector state = read_dump(in, p.qubits);
  apply_qft(state, QftSpec{QubitSpan{0, p.qubits},
                           p.inverse ? QftDirection::Inverse : QftDirection::Forward});
  if (p.output) {
    std::ofstream f(*p.output);
    if (!f) throw UsageError("cannot write `" + *p.output + "`");
    write_dump(f, state);
  }
  if (config.format == OutputFormat::Json) {
    ordered_json payload;
    payload["qubits"] = p.qubits;
    payload["direction"] = p.inverse ? "inverse" : "forward";
    payload["amplitudes"] = dump_json(state);
    emit(out, config, payload, start);
  } else if (!p.output) {
    write_dump(out, state);
  }
  return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  RunConfig config;
  CLI::App app{"qubitkit: state-vector quantum algorithms"};
  app.name(argv.empty() ? "qubitkit" : argv[0]);
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string format;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (default: $QUBITKIT_SEED or random)")
        ->envname("QUBITKIT_SEED");
    sub->add_flag("--json", json, "Emit a JSON report");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
  };

  auto* shor_cmd = app.add_subcommand("shor", "Factor N by quantum period finding");
  shor_cmd->add_option("--n", config.shor.n, "Number to factor")->required()
      ->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1} << 20));
  shor_cmd->add_option("--a", config.shor.a, "Fixed base instead of random draws");
  shor_cmd->add_option("--premeasure", config.shor.premeasure,
                       "Measure the function register before the QFT (true|false)");
  shor_cmd->add_option("--attempts", config.shor.attempts, "Attempt budget")
      ->check(CLI::PositiveNumber);
  common(shor_cmd);

  auto* grover_cmd = app.add_subcommand("grover", "Search one marked item among 2^n");
  grover_cmd->add_option("--qubits", config.grover.qubits, "Register size n")->required()
      ->check(CLI::Range(std::size_t{2}, kMaxQubits));
  grover_cmd->add_option("--marked", config.grover.marked, "Marked index")->required();
  grover_cmd->add_option("--iterations", config.grover.iterations,
                         "Iterations (default floor(pi/4 sqrt(2^n)))");
  common(grover_cmd);

  auto* evolve_cmd = app.add_subcommand("evolve", "Split-operator evolution of a 1-D wavefunction");
  evolve_cmd->add_option("--qubits", config.evolve.qubits, "Grid qubits m (2^m points)")
      ->required()->check(CLI::Range(std::size_t{3}, std::size_t{24}));
  evolve_cmd->add_option("--length", config.evolve.length, "Spatial extent L")->required()
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--dt", config.evolve.dt, "Time step")->required()
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--steps", config.evolve.steps, "Number of steps")->required()
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--potential", config.evolve.potential,
                         "harmonic | free | gaussian(x0,sigma,height) | file")->required();
  evolve_cmd->add_option("--psi0", config.evolve.psi0,
                         "gaussian(x0,sigma,p0) | harmonic | free | file")->required();
  std::string order = "lie";
  evolve_cmd->add_option("--order", order, "lie | strang")->check(CLI::IsMember({"lie", "strang"}));
  evolve_cmd->add_option("--mass", config.evolve.mass, "Particle mass")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--every", config.evolve.every, "Trace sampling interval")
      ->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--out", config.evolve.trace_path, "Trace CSV path");
  evolve_cmd->add_option("--dump-final", config.evolve.dump_final, "Final amplitude dump path");
  common(evolve_cmd);

  auto* qecc_cmd = app.add_subcommand("qecc", "Five-qubit perfect code");
  qecc_cmd->add_option("--mode", config.qecc.mode, "roundtrip | montecarlo")
      ->check(CLI::IsMember({"roundtrip", "montecarlo"}));
  qecc_cmd->add_option("--error", config.qecc.error, "I, X0..X4, Z0..Z4, Y0..Y4");
  qecc_cmd->add_option("--p", config.qecc.p, "Per-qubit error probability")
      ->check(CLI::Range(0.0, 1.0));
  qecc_cmd->add_option("--trials", config.qecc.trials, "Monte-Carlo trials")
      ->check(CLI::PositiveNumber);
  qecc_cmd->add_flag("--print-code", config.qecc.print_code, "Dump the logical codewords");
  common(qecc_cmd);

  auto* qft_cmd = app.add_subcommand("qft", "Quantum Fourier transform of an amplitude dump");
  qft_cmd->add_option("--qubits", config.qft.qubits, "Register size")->required()
      ->check(CLI::Range(std::size_t{1}, kMaxQubits));
  qft_cmd->add_option("--input", config.qft.input, "Input dump")->required();
  qft_cmd->add_flag("--inverse", config.qft.inverse, "Apply the inverse transform");
  qft_cmd->add_option("--output", config.qft.output, "Write the dump here instead of stdout");
  common(qft_cmd);

  std::vector<const char*> cargv;
  cargv.reserve(argv.size() + 1);
  if (argv.empty()) cargv.push_back("qubitkit");
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (json && !format.empty() && format != "json") {
    throw UsageError("--json conflicts with --format " + format);
  }
  if (json || format == "json") {
    config.format = OutputFormat::Json;
  } else if (format == "csv") {
    if (config.subcommand != "evolve") throw UsageError("--format csv is only valid for evolve");
    config.format = OutputFormat::Csv;
  }
  config.seed = seed ? *seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
  config.evolve.strang = order == "strang";

  if (config.subcommand == "grover" &&
      config.grover.marked >= (std::uint64_t{1} << config.grover.qubits)) {
    throw UsageError("--marked must be below 2^qubits");
  }
  if (config.subcommand == "qecc") {
    if (!config.qecc.print_code && config.qecc.mode.empty()) {
      throw UsageError("qecc needs --mode or --print-code");
    }
    if (config.qecc.error) {
      try {
        qecc5::PauliError::parse(*config.qecc.error);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "shor") return run_shor(config, out);
    if (config.subcommand == "grover") return run_grover(config, out);
    if (config.subcommand == "evolve") return run_evolve(config, out);
    if (config.subcommand == "qecc") return run_qecc(config, out);
    if (config.subcommand == "qft") return run_qft(config, out);
    err << "unknown subcommand `" << config.subcommand << "`\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "capacity: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace qubitkit::cli
