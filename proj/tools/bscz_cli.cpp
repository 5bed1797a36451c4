// Copyright 2026 The bscz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bscz: tables, sweeps and oracle self-checks as CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "bscz/bscz.hpp"

namespace {

using namespace bscz;

constexpr const char* kVersion = "0.1.0";
constexpr int kExitConvergence = 2;
constexpr int kExitOracle = 3;
constexpr int kExitBadArgs = 4;

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

struct RunConfig {
  std::string command;
  std::string format = "csv";
  std::string out;
  int truncation = 128;
  double tail_tol = SeriesConfig{}.tail_tolerance;
  int max_terms = SeriesConfig{}.max_terms;
  int jobs = 1;
  // Resolved per-command parameters, echoed into the header.
  std::vector<std::pair<std::string, std::string>> params;

  SeriesConfig series() const {
    SeriesConfig c;
    c.tail_tolerance = tail_tol;
    c.max_terms = max_terms;
    c.validate();
    return c;
  }
};

const char* kConventions[] = {
    "S_dB = -10 log10(exp(-2 s)); y = tanh(s)/2; y1 = y/(1+B); B = r^2/t^2",
    "beam splitter a1^dag -> t a1^dag - r a2^dag, a2^dag -> r a1^dag + t a2^dag",
    "b_k > 0; heralded state shown after a pi phase on the photonic |1> for k != 0",
    "quadratures X=(a+a^dag)/2, P=(a-a^dag)/(2i), vacuum variance 1/4",
    "numbers printed with 12 significant digits",
};

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return num(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t) {
  os << "# bscz " << kVersion << "\n# command: " << cfg.command << "\n# config: format=" << cfg.format
     << " truncation=" << cfg.truncation << " tail_tolerance=" << num(cfg.tail_tol) << " max_terms=" << cfg.max_terms
     << " jobs=" << cfg.jobs << "\n";
  if (!cfg.params.empty()) {
    os << "# params:";
    for (const auto& [k, v] : cfg.params) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const char* c : kConventions) os << "# convention: " << c << "\n";
  for (const std::string& n : t.notes) os << "# note: " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
}

void write_json(std::ostream& os, const RunConfig& cfg, const Table& t) {
  using nlohmann::ordered_json;
  ordered_json header;
  header["artifact"] = "bscz";
  header["version"] = kVersion;
  header["command"] = cfg.command;
  ordered_json config;
  config["format"] = cfg.format;
  config["truncation"] = cfg.truncation;
  config["tail_tolerance"] = std::stod(num(cfg.tail_tol));
  config["max_terms"] = cfg.max_terms;
  config["jobs"] = cfg.jobs;
  for (const auto& [k, v] : cfg.params) config[k] = v;
  header["config"] = config;
  header["conventions"] = std::vector<std::string>(std::begin(kConventions), std::end(kConventions));
  header["notes"] = t.notes;
  ordered_json columns = ordered_json::object();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    ordered_json col = ordered_json::array();
    for (const auto& row : t.rows) {
      const Cell& v = row[c];
      if (const double* d = std::get_if<double>(&v)) {
        if (std::isfinite(*d)) {
          col.push_back(std::stod(num(*d)));
        } else {
          col.push_back(nullptr);
        }
      } else if (const long long* i = std::get_if<long long>(&v)) {
        col.push_back(*i);
      } else {
        col.push_back(std::get<std::string>(v));
      }
    }
    columns[t.columns[c]] = col;
  }
  ordered_json doc;
  doc["header"] = header;
  doc["columns"] = columns;
  os << doc.dump(2) << "\n";
}

void emit(const RunConfig& cfg, const Table& t) {
  std::ostringstream buf;
  if (cfg.format == "json") {
    write_json(buf, cfg, t);
  } else {
    write_csv(buf, cfg, t);
  }
  if (cfg.out.empty()) {
    std::cout << buf.str();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw BadArgs("cannot open output file " + cfg.out);
  f << buf.str();
}

struct Range {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

Range parse_range(const std::string& text, bool with_step, const char* flag) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ':')) {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    }
  } catch (const std::exception&) {
    throw BadArgs(std::string(flag) + ": cannot parse '" + text + "'");
  }
  const std::size_t want = with_step ? 3 : 2;
  if (parts.size() != want) throw BadArgs(std::string(flag) + (with_step ? " expects LO:HI:STEP" : " expects LO:HI"));
  Range r{parts[0], parts[1], with_step ? parts[2] : 0.0};
  if (!(r.hi >= r.lo) || (with_step && !(r.step > 0.0))) throw BadArgs(std::string(flag) + ": empty or reversed range");
  return r;
}

std::vector<double> sweep(const Range& r) {
  const int n = static_cast<int>(std::floor((r.hi - r.lo) / r.step + 1e-9)) + 1;
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = r.lo + i * r.step;
  return v;
}

std::vector<int> parse_ints(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    }
  } catch (const std::exception&) {
    throw BadArgs(std::string(flag) + ": expected comma-separated nonnegative integers, got '" + text + "'");
  }
  if (out.empty()) throw BadArgs(std::string(flag) + ": empty list");
  return out;
}

ProbabilityMode parse_mode(const std::string& m) {
  if (m == "gate") return ProbabilityMode::kUnbalancedGate;
  if (m == "balanced") return ProbabilityMode::kBalanced;
  throw BadArgs("--mode must be gate or balanced");
}

double b_of(double s_db, double B, int k, const SeriesConfig& cfg) {
  const double y1 = ReducedSqueezing::from(SqueezingSpec::from_db(s_db), BeamSplitterSpec::from_B(B)).y1;
  return distortion_b(y1, B, k, cfg);
}

// Builds a state at the requested truncation, escalating to the automatic
// rule when the fixed one discards too much.
template <class F>
FockVector with_escalation(int truncation, F make, Table& t) {
  try {
    return make(Truncation::fixed(truncation));
  } catch (const TruncationError&) {
    FockVector s = make(Truncation::automatic());
    t.notes.push_back("truncation escalated from " + std::to_string(truncation) + " to " +
                      std::to_string(s.truncation()) + " levels");
    return s;
  }
}

Table cmd_table1(const RunConfig& cfg) {
  const SeriesConfig sc = cfg.series();
  Table t;
  t.columns = {"k", "S_dB", "B", "b_k", "P_k"};
  const double B = 8380.3;
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(B);
  double total = 0.0;
  for (int k : {0, 2, 4, 6}) {
    const double s_db = k == 0 ? 0.0002 : 9.99995;
    const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
    const double p = success_probability(sq, bs, k, ProbabilityMode::kBalanced, sc);
    if (k > 0) total += p;
    t.rows.push_back({std::to_string(k), s_db, B, b_of(s_db, B, k, sc), p});
  }
  t.rows.push_back({std::string("total_2_4_6"), 9.99995, B, std::nan(""), total});
  t.notes.push_back("balanced qubit a0 = a1; P_k = c0^2 Z^(k) N_k / (2 cosh s)");
  return t;
}

Table cmd_table2(const RunConfig& cfg, const Range& b_range) {
  const SeriesConfig sc = cfg.series();
  Table t;
  t.columns = {"k", "S_dB", "B_opt", "P_max", "b_k", "at_boundary"};
  const double s[] = {0.00017, 24.535, 9.981, 29.996, 12.464};
  const auto rows = parallel_map(5, cfg.jobs, [&](int k) {
    const OptimizeResult o = optimize_B(s[k], k, ProbabilityMode::kUnbalancedGate, {b_range.lo, b_range.hi}, {}, sc);
    return std::vector<Cell>{static_cast<long long>(k), s[k], o.B_opt, o.P_max, b_of(s[k], o.B_opt, k, sc),
                             static_cast<long long>(o.at_boundary)};
  });
  t.rows = rows;
  t.notes.push_back("unbalanced-gate probabilities; B searched on [" + num(b_range.lo) + ", " + num(b_range.hi) + "]");
  for (const auto& r : rows)
    if (std::get<long long>(r[5])) t.notes.push_back("k=" + cell_text(r[0]) + ": maximum on the range boundary");
  return t;
}

Table cmd_levels(const RunConfig& cfg, const std::vector<int>& ks, const Range& s_range, const Range& b_range,
                 double a_ratio) {
  const SeriesConfig sc = cfg.series();
  const std::vector<double> ss = sweep(s_range);
  const DVQubit qubit = DVQubit::from_ratio(a_ratio);
  Table t;
  t.columns = {"S_dB", "k", "root_index", "B"};
  const int n = static_cast<int>(ss.size() * ks.size());
  const auto lines = parallel_map(n, cfg.jobs, [&](int i) {
    return find_level_lines(ss[i / ks.size()], ks[i % ks.size()], {b_range.lo, b_range.hi}, qubit, {}, sc);
  });
  for (const LevelLine& l : lines) {
    if (l.roots.empty()) t.notes.push_back("no roots for k=" + std::to_string(l.k) + " at S=" + num(l.s_db));
    for (std::size_t r = 0; r < l.roots.size(); ++r)
      t.rows.push_back({l.s_db, static_cast<long long>(l.k), static_cast<long long>(r), l.roots[r]});
  }
  return t;
}

Table cmd_optimize(const RunConfig& cfg, const std::vector<int>& ks, const Range& s_range, const Range& b_range,
                   ProbabilityMode mode) {
  const SeriesConfig sc = cfg.series();
  const std::vector<double> ss = sweep(s_range);
  Table t;
  t.columns = {"S_dB", "k", "B_opt", "P_max", "b_k", "at_boundary"};
  const int n = static_cast<int>(ss.size() * ks.size());
  t.rows = parallel_map(n, cfg.jobs, [&](int i) {
    const double s_db = ss[i / ks.size()];
    const int k = ks[i % ks.size()];
    const OptimizeResult o = optimize_B(s_db, k, mode, {b_range.lo, b_range.hi}, {}, sc);
    return std::vector<Cell>{s_db, static_cast<long long>(k), o.B_opt, o.P_max, b_of(s_db, o.B_opt, k, sc),
                             static_cast<long long>(o.at_boundary)};
  });
  return t;
}

Table cmd_scenario(const RunConfig& cfg, double s_db, double B, const std::vector<int>& ks, ProbabilityMode mode,
                   bool strict) {
  ScenarioOptions opts;
  opts.mode = mode;
  opts.require_common_b = strict;
  const GateScenario g = gate_scenario(s_db, B, ks, opts, cfg.series());
  Table t;
  t.columns = {"k", "b_k", "P_k"};
  for (std::size_t i = 0; i < ks.size(); ++i) t.rows.push_back({std::to_string(ks[i]), g.b_values[i], g.probabilities[i]});
  t.rows.push_back({std::string("P_CZ"), g.common_b, g.P_CZ});
  t.notes.push_back("P_CZ row carries the mean b_k; b_k spread " + num(g.b_spread));
  t.notes.push_back("qubit a0=" + num(g.qubit.a0) + " a1=" + num(g.qubit.a1));
  if (g.b_spread > opts.common_b_tolerance) t.notes.push_back("warning: b_k disagree beyond " + num(opts.common_b_tolerance));
  return t;
}

Table cmd_dist(const RunConfig& cfg, const std::string& state, double s_db, double B, int k) {
  const SeriesConfig sc = cfg.series();
  const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
  const ReducedSqueezing y1 = ReducedSqueezing::from(sq, BeamSplitterSpec::from_B(B));
  Table t;
  FockVector f;
  if (state == "smsv") {
    f = with_escalation(cfg.truncation, [&](Truncation tr) { return smsv_state(sq, tr); }, t);
  } else if (state == "sub") {
    f = with_escalation(cfg.truncation, [&](Truncation tr) { return cv_state_subtract(y1, k, tr, sc); }, t);
  } else if (state == "addsub") {
    f = with_escalation(cfg.truncation, [&](Truncation tr) { return cv_state_add_subtract(y1, B, k, tr, sc); }, t);
  } else {
    throw BadArgs("--state must be smsv, sub or addsub");
  }
  const QuadratureVariance q = quadrature_variance(f);
  t.notes.push_back("parity " + std::string(to_string(f.parity())) + "; mean photons " + num(mean_photon_number(f)));
  t.notes.push_back("var_x " + num(q.var_x) + " var_p " + num(q.var_p) + " squeezed " + num(q.squeezed()));
  t.columns = {"n", "amplitude", "probability"};
  for (int n = 0; n < f.truncation(); ++n) t.rows.push_back({static_cast<long long>(n), f[n], f[n] * f[n]});
  return t;
}

Table cmd_fidelity(const RunConfig& cfg, double eta, const std::vector<int>& ks, const Range& s_range, double B) {
  const SeriesConfig sc = cfg.series();
  const DetectorSpec det{eta};
  det.validate();
  const std::vector<double> ss = sweep(s_range);
  const BeamSplitterSpec bs = BeamSplitterSpec::from_B(B);
  Table t;
  t.columns = {"S_dB", "k", "fidelity", "P_k", "P_k_eta", "w0", "w1", "w2"};
  if (det.low_efficiency()) t.notes.push_back("warning: eta below " + num(det.low_eta_threshold) + ", second-order mixture unreliable");
  t.notes.push_back("qubit tuned per (S, k) so that b'_k = 1");
  const int n = static_cast<int>(ss.size() * ks.size());
  t.rows = parallel_map(n, cfg.jobs, [&](int i) {
    const double s_db = ss[i / ks.size()];
    const int k = ks[i % ks.size()];
    const SqueezingSpec sq = SqueezingSpec::from_db(s_db);
    const DVQubit q = DVQubit::for_unit_distortion(b_of(s_db, B, k, sc));
    const std::vector<double> r = mixture_ratios(sq, bs, q, k, det, sc);
    const double g = r[0] + r[1] + r[2];
    return std::vector<Cell>{s_db,
                             static_cast<long long>(k),
                             fidelity(sq, bs, q, k, det, Truncation::automatic(), sc),
                             success_probability(sq, bs, q, k, sc),
                             detected_probability(sq, bs, q, k, det, sc),
                             r[0] / g,
                             r[1] / g,
                             r[2] / g};
  });
  return t;
}

Table cmd_oracle(const RunConfig& cfg, int samples, unsigned long long seed, bool escalate, bool& passed) {
  oracle::SuiteOptions opts;
  opts.samples = samples;
  opts.truncation = cfg.truncation;
  opts.seed = seed;
  opts.jobs = cfg.jobs;
  opts.auto_escalate = escalate;
  const auto checks = oracle::run_equivalence_suite(opts);
  Table t;
  t.columns = {"check", "max_deviation", "tolerance", "passed", "worst_sample"};
  passed = true;
  for (const auto& c : checks) {
    passed = passed && c.passed;
    t.rows.push_back({c.name, c.max_deviation, c.tolerance, static_cast<long long>(c.passed), c.worst});
  }
  if (!passed) t.notes.push_back("oracle mismatch above tolerance");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid CV-DV entanglement and beam-splitter CZ toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Output file (stdout if absent)");
  app.add_option("--truncation", cfg.truncation, "Fock truncation")->check(CLI::Range(4, 4096));
  app.add_option("--tail-tol", cfg.tail_tol, "Series tail tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", cfg.max_terms, "Series term budget")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::string ks = "2", s_range, b_range, outcomes = "1,2,4", mode = "gate", state = "sub";
  double s = 10.0, B = 99.0, eta = 0.6, a_ratio = 1.0;
  int k = 2, samples = 50;
  unsigned long long seed = oracle::SuiteOptions{}.seed;
  bool strict = false, no_escalate = false;

  auto* table1 = app.add_subcommand("table1", "Balanced operating points with b_k near 1");
  auto* table2 = app.add_subcommand("table2", "Maximal unbalanced-gate probabilities");
  table2->add_option("--b-range", b_range, "B window LO:HI")->default_str("0.01:99");
  bool allow_boundary = false;
  table2->add_flag("--allow-boundary", allow_boundary, "Exit 0 even when an optimum sits on the B window edge");

  auto* levels = app.add_subcommand("levels", "Roots of b'_k(S, B) = 1");
  levels->add_option("--k", ks, "Outcomes, comma separated")->default_str("0,2,4,6");
  levels->add_option("--s-range", s_range, "S sweep LO:HI:STEP in dB")->default_str("0:10:0.5");
  levels->add_option("--b-range", b_range, "B window LO:HI")->default_str("0.01:10000");
  levels->add_option("--a-ratio", a_ratio, "a1/a0 of the DV qubit")->check(CLI::PositiveNumber);

  auto* optimize = app.add_subcommand("optimize", "B_opt and P_max against S");
  optimize->add_option("--k", ks, "Outcomes, comma separated")->default_str("0,1,2,3,4");
  optimize->add_option("--s-range", s_range, "S sweep LO:HI:STEP in dB")->default_str("1:30:1");
  optimize->add_option("--b-range", b_range, "B window LO:HI")->default_str("0.01:99");
  optimize->add_option("--mode", mode, "gate or balanced");

  auto* scenario = app.add_subcommand("scenario", "Summed CZ probability for an outcome set");
  scenario->add_option("--s", s, "Squeezing in dB")->required();
  scenario->add_option("--b", B, "Beam-splitter parameter B")->required();
  scenario->add_option("--outcomes", outcomes, "Outcomes, comma separated");
  scenario->add_option("--mode", mode, "gate or balanced");
  scenario->add_flag("--strict", strict, "Fail when the b_k disagree");

  auto* dist = app.add_subcommand("dist", "Photon-number distribution of a CV state");
  dist->add_option("--state", state, "smsv, sub or addsub");
  dist->add_option("--s", s, "Squeezing in dB");
  dist->add_option("--b", B, "Beam-splitter parameter B");
  dist->add_option("--k", k, "Subtracted photons")->check(CLI::NonNegativeNumber);

  auto* fid = app.add_subcommand("fidelity", "Fidelity and detected probability with an inefficient detector");
  fid->add_option("--eta", eta, "Detector efficiency");
  fid->add_option("--k", ks, "Outcomes, comma separated")->default_str("2,4");
  fid->add_option("--s-range", s_range, "S sweep LO:HI:STEP in dB")->default_str("4:12:0.5");
  fid->add_option("--b", B, "Beam-splitter parameter B");

  auto* orc = app.add_subcommand("oracle", "Closed forms against brute-force evolution");
  orc->add_option("--samples", samples, "Number of sampled parameter tuples")->check(CLI::PositiveNumber);
  orc->add_option("--seed", seed, "Sampling seed");
  orc->add_flag("--no-escalate", no_escalate, "Keep the truncation fixed for every sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  auto range_or = [](const std::string& v, CLI::App* sub, const char* flag, bool step) {
    return parse_range(v.empty() ? sub->get_option(flag)->get_default_str() : v, step, flag);
  };
  auto ints_or = [](const std::string& v, CLI::App* sub) {
    return parse_ints(sub->get_option("--k")->count() ? v : sub->get_option("--k")->get_default_str(), "--k");
  };

  try {
    Table t;
    bool oracle_ok = true;
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub == table1) {
      t = cmd_table1(cfg);
    } else if (sub == table2) {
      const Range br = range_or(b_range, table2, "--b-range", false);
      cfg.params = {{"b_range", num(br.lo) + ":" + num(br.hi)}};
      t = cmd_table2(cfg, br);
    } else if (sub == levels) {
      const std::vector<int> kv = ints_or(ks, levels);
      const Range sr = range_or(s_range, levels, "--s-range", true);
      const Range br = range_or(b_range, levels, "--b-range", false);
      cfg.params = {{"k", levels->get_option("--k")->count() ? ks : levels->get_option("--k")->get_default_str()},
                    {"s_range", num(sr.lo) + ":" + num(sr.hi) + ":" + num(sr.step)},
                    {"b_range", num(br.lo) + ":" + num(br.hi)},
                    {"a_ratio", num(a_ratio)}};
      t = cmd_levels(cfg, kv, sr, br, a_ratio);
    } else if (sub == optimize) {
      const std::vector<int> kv = ints_or(ks, optimize);
      const Range sr = range_or(s_range, optimize, "--s-range", true);
      const Range br = range_or(b_range, optimize, "--b-range", false);
      cfg.params = {{"k", optimize->get_option("--k")->count() ? ks : optimize->get_option("--k")->get_default_str()},
                    {"s_range", num(sr.lo) + ":" + num(sr.hi) + ":" + num(sr.step)},
                    {"b_range", num(br.lo) + ":" + num(br.hi)},
                    {"mode", mode}};
      t = cmd_optimize(cfg, kv, sr, br, parse_mode(mode));
    } else if (sub == scenario) {
      cfg.params = {{"s", num(s)}, {"b", num(B)}, {"outcomes", outcomes}, {"mode", mode}, {"strict", strict ? "1" : "0"}};
      t = cmd_scenario(cfg, s, B, parse_ints(outcomes, "--outcomes"), parse_mode(mode), strict);
    } else if (sub == dist) {
      cfg.params = {{"state", state}, {"s", num(s)}, {"b", num(B)}, {"k", std::to_string(k)}};
      t = cmd_dist(cfg, state, s, B, k);
    } else if (sub == fid) {
      const std::vector<int> kv = ints_or(ks, fid);
      const Range sr = range_or(s_range, fid, "--s-range", true);
      cfg.params = {{"eta", num(eta)},
                    {"k", fid->get_option("--k")->count() ? ks : fid->get_option("--k")->get_default_str()},
                    {"s_range", num(sr.lo) + ":" + num(sr.hi) + ":" + num(sr.step)},
                    {"b", num(B)}};
      t = cmd_fidelity(cfg, eta, kv, sr, B);
    } else if (sub == orc) {
      cfg.params = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)},
                    {"escalate", no_escalate ? "0" : "1"}};
      t = cmd_oracle(cfg, samples, seed, !no_escalate, oracle_ok);
    }
    emit(cfg, t);
    if (!oracle_ok) {
      std::cerr << "error: oracle mismatch, see report\n";
      return kExitOracle;
    }
    if (sub == table2 && !allow_boundary) {
      for (const auto& row : t.rows) {
        if (std::get<long long>(row[5])) {
          std::cerr << "warning: optimum on the B window boundary (pass --allow-boundary to accept)\n";
          return kExitConvergence;
        }
      }
    }
    return 0;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const InconsistentDistortionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
}
