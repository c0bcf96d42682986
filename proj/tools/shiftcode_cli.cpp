// Command-line front end. Scalar results go to stdout as JSON, series go to a
// CSV file named by --out. Exit codes: 0 success, 1 user error, 2 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "shiftcode/capacity.h"
#include "shiftcode/decoder_mc.h"
#include "shiftcode/lattice.h"
#include "shiftcode/qudit_codes.h"
#include "shiftcode/squeezing.h"

using json = nlohmann::ordered_json;
using namespace shiftcode;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kUnits =
    "hbar = 1; lattice rows and displacement labels in units of sqrt(2 pi); shifts in "
    "physical units";

// Bad input from the command line or an input file.
struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json header(const std::string& command, std::optional<std::uint64_t> seed, int workers) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["units"] = kUnits;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["workers"] = workers;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  return rows;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  return rows;
}

json rate_json(const RateEstimate& r) { return {{"estimate", r.estimate}, {"stderr", r.stderr_}}; }

// ---------------------------------------------------------------------------

struct ThresholdArgs {
  std::string lattice = "square";
  std::optional<double> target_pe;
  double tolerance = 1e-4;
};

std::string cmd_threshold(const ThresholdArgs& a) {
  const ThresholdKind kind =
      a.lattice == "square" ? ThresholdKind::square_css : ThresholdKind::hex_stabilizer;
  ThresholdOptions opts;
  opts.target_pe = a.target_pe;
  opts.tolerance = a.tolerance;
  if (a.target_pe && !(*a.target_pe > 0.0 && *a.target_pe < 1.0)) {
    throw UserError("--target-pe must lie in (0, 1)");
  }
  const ThresholdResult r = threshold_sigma(kind, opts);
  json j = header("threshold", std::nullopt, 1);
  j["parameters"] = {{"lattice", a.lattice}, {"tolerance", a.tolerance}};
  j["kind"] = to_string(r.kind);
  j["sigma_star"] = r.sigma_star;
  j["target_pe"] = r.target_pe;
  j["iterations"] = r.iterations;
  j["note"] = "bound on the certified region from the upper bound on pe, not a capacity";
  return j.dump(2);
}

struct McArgs {
  std::string code = "square";
  int n = 2;
  double alpha = std::sqrt(std::numbers::pi);
  std::string lattice_file;
  double sigma = 0.0;
  long long trials = 100000;
  std::uint64_t seed = 1;
  double ancilla_sigma = 0.0;
  double squeezing_delta = 0.0;
  int workers = 0;
  bool timing = true;
};

std::string cmd_mc(const McArgs& a) {
  McConfig cfg;
  if (!a.lattice_file.empty()) {
    try {
      cfg.code = lattice_from_json(read_file(a.lattice_file));
    } catch (const UserError&) {
      throw;
    } catch (const std::exception& e) {
      throw UserError(std::string("lattice file: ") + e.what());
    }
  } else if (a.code == "square") {
    cfg.code = build_square(a.n, a.alpha);
  } else {
    cfg.code = build_hexagonal(a.n);
  }
  if (!(a.sigma >= 0.0)) throw UserError("--sigma must be non-negative");
  cfg.sigma = a.sigma;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.ancilla_sigma = a.ancilla_sigma;
  cfg.squeezing_delta = a.squeezing_delta;
  cfg.workers = a.workers > 0 ? a.workers : default_worker_count();
  const McResult r = run_mc(cfg);

  json j = header("mc", r.seed, r.workers);
  j["parameters"] = {{"code", cfg.code.descriptor},
                     {"sigma", a.sigma},
                     {"trials", a.trials},
                     {"ancilla_sigma", a.ancilla_sigma},
                     {"squeezing_delta", a.squeezing_delta}};
  j["code_descriptor"] = cfg.code.descriptor;
  j["sigma"] = a.sigma;
  j["sigma_eff"] = r.sigma_eff;
  j["finite_squeezing"] = r.finite_squeezing;
  j["schedule"] = r.schedule;
  // damping and diffusion both enter only through this Gaussian shift channel
  j["noise_model"] = "independent Gaussian shifts (diffusion surrogate for damping)";
  j["trials"] = r.trials;
  json rates = json::object();
  for (const auto& [coset, count] : r.coset_counts) {
    std::string key;
    for (std::size_t i = 0; i < coset.size(); ++i) key += (i ? "," : "") + std::to_string(coset[i]);
    rates[key] = rate_json(binomial_rate(count, r.trials));
    rates[key]["count"] = count;
  }
  j["rates"] = rates;
  j["x_rate"] = rate_json(r.x_rate);
  j["z_rate"] = rate_json(r.z_rate);
  j["total_rate"] = rate_json(r.total_rate);
  if (a.timing) j["wall_time_s"] = r.wall_time_s;
  return j.dump(2);
}

struct PlotArgs {
  std::string kind;
  std::string out;
  double delta = 0.25;
  std::optional<double> kappa;
  int n = 2;
  int j = 0;
  int window = 1;
  double sigma_min = 0.2;
  double sigma_max = 0.7;
  int points = 51;
};

std::string cmd_plotdata(const PlotArgs& a) {
  std::ostringstream csv;
  csv.precision(12);
  json params;
  long rows = 0;
  const double alpha = std::sqrt(std::numbers::pi);
  if (a.kind == "codeword-density") {
    const double kappa = a.kappa.value_or(a.delta);
    const CombState st = as_state(make_codeword(a.n, alpha, a.delta, kappa, a.j));
    const Grid g = default_position_grid(st);
    const auto rho = position_density(st, g);
    const auto env = position_envelope(st, g);
    csv << "q,density,envelope\n";
    for (int i = 0; i < g.count; ++i, ++rows) csv << g.at(i) << ',' << rho[i] << ',' << env[i] << '\n';
    params = {{"n", a.n}, {"alpha", alpha}, {"delta", a.delta}, {"kappa", kappa}, {"j", a.j}};
  } else if (a.kind == "wigner-sites") {
    if (a.window < 1) throw UserError("--window must be >= 1");
    const auto sites = wigner_sites(a.n, alpha, a.j, -a.window, a.window, -a.window, a.window);
    csv << "q,p,sign,s,t\n";
    for (const auto& s : sites) {
      csv << s.q << ',' << s.p << ',' << s.sign << ',' << s.s << ',' << s.t << '\n';
      ++rows;
    }
    params = {{"n", a.n}, {"alpha", alpha}, {"j", a.j}, {"window", a.window}};
  } else {
    if (a.points < 2 || !(a.sigma_min > 0.0) || !(a.sigma_max > a.sigma_min)) {
      throw UserError("sweep needs 0 < sigma-min < sigma-max and points >= 2");
    }
    csv << "sigma,pe_square,pe_hex,css_rate,holevo,coherent\n";
    for (int i = 0; i < a.points; ++i, ++rows) {
      const double s = a.sigma_min + (a.sigma_max - a.sigma_min) * i / (a.points - 1);
      const double pe = analytic_pe_square(s, alpha);
      const CapacityBounds b = capacity_bounds(s);
      const double rate = pe <= 0.5 ? css_rate(pe) : 0.0;
      csv << s << ',' << pe << ',' << analytic_pe_hex(s) << ',' << rate << ',' << b.holevo_upper
          << ',' << b.coherent_info << '\n';
    }
    params = {{"sigma_min", a.sigma_min}, {"sigma_max", a.sigma_max}, {"points", a.points}};
  }
  std::ofstream out(a.out);
  if (!out) throw UserError("cannot write " + a.out);
  out << "# " << kUnits << '\n' << csv.str();
  if (!out) throw UserError("write failed for " + a.out);

  json j = header("plotdata", std::nullopt, 1);
  j["parameters"] = params;
  j["kind"] = a.kind;
  j["out"] = a.out;
  j["rows"] = rows;
  return j.dump(2);
}

struct QuditArgs {
  int n = 2;
  int r1 = 3;
  int r2 = 3;
};

std::string cmd_qudit_demo(const QuditArgs& a) {
  if (a.n < 1 || a.r1 < 1 || a.r2 < 1) throw UserError("--n, --r1, --r2 must be >= 1");
  if (static_cast<long long>(a.n) * a.r1 * a.r2 > kDenseOracleMaxDim) {
    throw UserError("dimension n r1 r2 exceeds " + std::to_string(kDenseOracleMaxDim));
  }
  const QuditCode code = make_code(a.n, a.r1, a.r2);
  json j = header("qudit-demo", std::nullopt, 1);
  j["parameters"] = {{"n", a.n}, {"r1", a.r1}, {"r2", a.r2}};
  j["d"] = code.d;
  j["logical_x_power"] = code.logical_x_power();
  j["logical_z_power"] = code.logical_z_power();

  json words = json::array();
  for (int k = 0; k < code.n; ++k) words.push_back({{"j", k}, {"support", codeword_support(code, k)}});
  j["codewords"] = words;

  // guaranteed set |a| < r1/2, |b| < r2/2
  json table = json::array();
  std::set<std::pair<int, int>> seen;
  bool injective = true;
  for (long x = -(a.r1 - 1) / 2; x <= (a.r1 - 1) / 2; ++x)
    for (long z = -(a.r2 - 1) / 2; z <= (a.r2 - 1) / 2; ++z) {
      const DecodeOutcome o = decode(code, make_label(code, x, z));
      injective &= seen.insert({o.syndrome.s_amp, o.syndrome.s_phase}).second;
      table.push_back({{"a", x}, {"b", z}, {"syndrome", {o.syndrome.s_amp, o.syndrome.s_phase}},
                       {"correctable", o.correctable}});
    }
  j["syndrome_table"] = table;
  j["correctable_set_size"] = table.size();
  j["syndrome_map_injective"] = injective;
  j["perfect"] = injective && static_cast<long long>(table.size()) == static_cast<long long>(a.r1) * a.r2;

  // rows a, columns b, both centered in (-d/2, d/2]
  json matrix = json::array();
  long agree = 0, total = 0, correctable = 0;
  const long lo = -(code.d - 1) / 2, hi = code.d / 2;
  for (long x = lo; x <= hi; ++x) {
    json row = json::array();
    for (long z = lo; z <= hi; ++z) {
      const PauliLabel e = make_label(code, x, z);
      const OracleResult o = dense_oracle_roundtrip(code, e);
      const bool ok = o.fidelity >= 1.0 - 1e-12;
      row.push_back(ok ? 1 : 0);
      correctable += ok;
      agree += ok == decode(code, e).correctable;
      ++total;
    }
    matrix.push_back(row);
  }
  j["correctability_rows_a_from"] = lo;
  j["correctability_matrix"] = matrix;
  j["correctable_errors"] = correctable;
  j["oracle_agrees_with_decode"] = agree == total;
  return j.dump(2);
}

std::string cmd_lattice_info(const std::string& path) {
  LatticeCode code;
  try {
    code = lattice_from_json(read_file(path));
  } catch (const UserError&) {
    throw;
  } catch (const std::exception& e) {
    throw UserError(std::string("lattice file: ") + e.what());
  }
  json j = header("lattice-info", std::nullopt, 1);
  j["parameters"] = {{"file", path}};
  j["N"] = code.N;
  j["A"] = matrix_json(code.A);
  j["R"] = matrix_json(code.standard.R);
  std::vector<long long> D(code.standard.D.data(), code.standard.D.data() + code.standard.D.size());
  j["D"] = D;
  j["n"] = code.dimension();
  j["dual"] = matrix_json(code.M_perp);
  if (code.N <= 4) {
    j["shortest_stabilizer"] = shortest_nonzero(code, Which::stabilizer);
    j["shortest_dual"] = shortest_nonzero(code, Which::dual);
  } else {
    j["shortest_stabilizer"] = nullptr;
    j["shortest_dual"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift-resistant code toolkit"};
  app.require_subcommand(1);

  ThresholdArgs th;
  auto* c_th = app.add_subcommand("threshold", "Noise threshold sigma* by bisection");
  c_th->add_option("--lattice", th.lattice, "square or hex")
      ->check(CLI::IsMember({"square", "hex"}))
      ->required();
  c_th->add_option("--target-pe", th.target_pe, "Target error probability");
  c_th->add_option("--tolerance", th.tolerance, "Bracket width on sigma")
      ->check(CLI::PositiveNumber);

  McArgs mc;
  auto* c_mc = app.add_subcommand("mc", "Monte Carlo logical error rates");
  c_mc->add_option("--code", mc.code, "square or hex")->check(CLI::IsMember({"square", "hex"}));
  c_mc->add_option("--n", mc.n, "Code dimension")->check(CLI::Range(1, 1 << 20));
  c_mc->add_option("--alpha", mc.alpha, "Square lattice spacing")->check(CLI::PositiveNumber);
  c_mc->add_option("--lattice-file", mc.lattice_file, "Lattice JSON file (overrides --code)")
      ->check(CLI::ExistingFile);
  c_mc->add_option("--sigma", mc.sigma, "Shift standard deviation")->required();
  c_mc->add_option("--trials", mc.trials, "Number of trials")->check(CLI::Range(1LL, 1LL << 40));
  c_mc->add_option("--seed", mc.seed, "Master seed");
  c_mc->add_option("--ancilla-sigma", mc.ancilla_sigma, "Ancilla shift sigma")
      ->check(CLI::NonNegativeNumber);
  c_mc->add_option("--squeezing-delta", mc.squeezing_delta, "Finite-squeezing width")
      ->check(CLI::NonNegativeNumber);
  c_mc->add_option("--workers", mc.workers, "Worker threads (default SHIFTCODE_WORKERS)")
      ->check(CLI::Range(1, 1024));
  c_mc->add_flag("!--no-timing", mc.timing, "Omit wall time from the output");

  PlotArgs pl;
  auto* c_pl = app.add_subcommand("plotdata", "Write plot series as CSV");
  c_pl->add_option("--kind", pl.kind, "codeword-density, wigner-sites or sweep")
      ->check(CLI::IsMember({"codeword-density", "wigner-sites", "sweep"}))
      ->required();
  c_pl->add_option("--out", pl.out, "Output CSV path")->required();
  c_pl->add_option("--delta", pl.delta, "Peak width")->check(CLI::PositiveNumber);
  c_pl->add_option("--kappa", pl.kappa, "Envelope inverse width (default delta)")
      ->check(CLI::PositiveNumber);
  c_pl->add_option("--n", pl.n, "Code dimension")->check(CLI::Range(1, 64));
  c_pl->add_option("--j", pl.j, "Logical index")->check(CLI::NonNegativeNumber);
  c_pl->add_option("--window", pl.window, "Wigner window half width");
  c_pl->add_option("--sigma-min", pl.sigma_min, "Sweep start");
  c_pl->add_option("--sigma-max", pl.sigma_max, "Sweep end");
  c_pl->add_option("--points", pl.points, "Sweep points");

  QuditArgs qd;
  auto* c_qd = app.add_subcommand("qudit-demo", "Finite-dimensional shift code report");
  c_qd->add_option("--n", qd.n, "Logical dimension");
  c_qd->add_option("--r1", qd.r1, "Amplitude-shift range");
  c_qd->add_option("--r2", qd.r2, "Phase-shift range");

  std::string lattice_path;
  auto* c_li = app.add_subcommand("lattice-info", "Standard form, dual and shortest vectors");
  c_li->add_option("file", lattice_path, "Lattice JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    std::string out;
    if (c_th->parsed()) out = cmd_threshold(th);
    else if (c_mc->parsed()) out = cmd_mc(mc);
    else if (c_pl->parsed()) out = cmd_plotdata(pl);
    else if (c_qd->parsed()) out = cmd_qudit_demo(qd);
    else out = cmd_lattice_info(lattice_path);
    std::cout << out << '\n';
    return 0;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
