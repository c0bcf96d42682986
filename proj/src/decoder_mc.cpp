#include "shiftcode/decoder_mc.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "shiftcode/rng.h"

namespace shiftcode {

int default_worker_count() {
  if (const char* env = std::getenv("SHIFTCODE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

RateEstimate binomial_rate(long long hits, long long trials) {
  if (trials < 1) throw std::invalid_argument("binomial_rate: trials must be >= 1");
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

double centered_remainder(double x, double m) {
  return x - m * std::ceil(x / m - 0.5);
}

SyndromeExtraction simulate_syndrome_extraction(const Vector& data_shift,
                                                const Vector& ancilla_shift, SyndromeRound which,
                                                double q_spacing, double p_spacing) {
  if (data_shift.size() != 2 || ancilla_shift.size() != 2) {
    throw std::invalid_argument("simulate_syndrome_extraction: single-oscillator shifts expected");
  }
  const double ud = data_shift(0), vd = data_shift(1);
  const double ua = ancilla_shift(0), va = ancilla_shift(1);
  SyndromeExtraction out;
  out.residual.resize(2);
  if (which == SyndromeRound::q) {
    // SUM data -> ancilla: q_a -> q_d + q_a, p_d -> p_d - p_a
    out.syndrome = centered_remainder(ud + ua, q_spacing);
    out.residual(0) = ud - out.syndrome;
    out.residual(1) = vd - va;
  } else {
    // SUM ancilla -> data: q_d -> q_a + q_d, p_a -> p_a - p_d
    out.syndrome = centered_remainder(va - vd, p_spacing);
    out.residual(0) = ud + ua;
    out.residual(1) = vd + out.syndrome;
  }
  return out;
}

namespace {

struct WorkerTally {
  std::map<std::vector<long long>, long long> counts;
  long long x = 0, z = 0, any = 0;
};

}  // namespace

McResult run_mc(const McConfig& cfg) {
  const LatticeCode& code = cfg.code;
  if (cfg.trials < 1) throw std::invalid_argument("run_mc: trials must be >= 1");
  if (code.N < 1 || code.N > 4) {
    throw std::invalid_argument("run_mc: unsupported lattice dimension N = " +
                                std::to_string(code.N) + " (decoder supports N <= 4)");
  }
  if (!(cfg.sigma >= 0.0) || !(cfg.ancilla_sigma >= 0.0) || !(cfg.squeezing_delta >= 0.0)) {
    throw std::invalid_argument("run_mc: noise parameters must be non-negative");
  }
  const bool noisy_ancilla = cfg.ancilla_sigma > 0.0;
  double q_spacing = 0.0, p_spacing = 0.0;
  if (noisy_ancilla) {
    const bool rectangular = code.N == 1 && std::abs(code.M(0, 1)) < 1e-12 &&
                             std::abs(code.M(1, 0)) < 1e-12;
    if (!rectangular) {
      throw std::invalid_argument(
          "run_mc: ancilla noise is simulated only for single-oscillator square codes");
    }
    const double s2pi = std::sqrt(2.0 * std::numbers::pi);
    const double n = static_cast<double>(code.dimension());
    q_spacing = std::abs(code.M(0, 0)) * s2pi / n;
    p_spacing = std::abs(code.M(1, 1)) * s2pi / n;
  }

  McResult res;
  res.trials = cfg.trials;
  res.seed = cfg.seed;
  res.finite_squeezing = cfg.squeezing_delta > 0.0;
  res.sigma_eff = std::sqrt(cfg.sigma * cfg.sigma + cfg.squeezing_delta * cfg.squeezing_delta);
  res.schedule = noisy_ancilla ? "q-round then p-round" : "ideal";
  int workers = cfg.workers > 0 ? cfg.workers : default_worker_count();
  if (workers > cfg.trials) workers = static_cast<int>(cfg.trials);
  res.workers = workers;

  const int dim = 2 * code.N;
  const double sigma_eff = res.sigma_eff;
  const double sa = cfg.ancilla_sigma;

  auto work = [&](int w, long long begin, long long end, WorkerTally& tally) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(w));
    Vector shift(dim), anc(2);
    for (long long t = begin; t < end; ++t) {
      for (int i = 0; i < dim; ++i) shift(i) = sigma_eff * rng.normal();
      if (noisy_ancilla) {
        anc << sa * rng.normal(), sa * rng.normal();
        shift = simulate_syndrome_extraction(shift, anc, SyndromeRound::q, q_spacing, p_spacing)
                    .residual;
        anc << sa * rng.normal(), sa * rng.normal();
        shift = simulate_syndrome_extraction(shift, anc, SyndromeRound::p, q_spacing, p_spacing)
                    .residual;
      }
      const ShiftDecode dec = decode_shift(code, shift);
      const LogicalPowers pw = logical_powers(code, dec.logical);
      bool hx = false, hz = false;
      for (std::size_t i = 0; i < pw.x.size(); ++i) {
        hx = hx || pw.x[i] != 0;
        hz = hz || pw.z[i] != 0;
      }
      tally.x += hx;
      tally.z += hz;
      tally.any += !dec.logical.is_identity();
      std::vector<long long> key(dec.logical.c.data(), dec.logical.c.data() + dec.logical.c.size());
      ++tally.counts[key];
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<WorkerTally> tallies(workers);
  std::vector<std::thread> threads;
  const long long chunk = cfg.trials / workers, extra = cfg.trials % workers;
  long long begin = 0;
  for (int w = 0; w < workers; ++w) {
    const long long end = begin + chunk + (w < extra ? 1 : 0);
    if (workers == 1) {
      work(w, begin, end, tallies[w]);
    } else {
      threads.emplace_back(work, w, begin, end, std::ref(tallies[w]));
    }
    begin = end;
  }
  for (auto& th : threads) th.join();

  long long x = 0, z = 0, any = 0;
  for (const auto& t : tallies) {
    for (const auto& [k, v] : t.counts) res.coset_counts[k] += v;
    x += t.x;
    z += t.z;
    any += t.any;
  }
  res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.x_rate = binomial_rate(x, cfg.trials);
  res.z_rate = binomial_rate(z, cfg.trials);
  res.total_rate = binomial_rate(any, cfg.trials);
  return res;
}

double analytic_pe_square(double sigma, double spacing_alpha) {
  if (!(sigma > 0.0) || !(spacing_alpha > 0.0)) {
    throw std::invalid_argument("analytic_pe_square: sigma and alpha must be positive");
  }
  return std::erfc(spacing_alpha / (2.0 * std::numbers::sqrt2 * sigma));
}

double hex_inradius() { return std::sqrt(std::numbers::pi / (2.0 * std::sqrt(3.0))); }

HexIntegral analytic_pe_hex_detail(double sigma, double tolerance) {
  if (!(sigma > 0.0)) throw std::invalid_argument("analytic_pe_hex: sigma must be positive");
  using boost::math::quadrature::gauss_kronrod;
  const double r = hex_inradius();
  const double s2 = 2.0 * sigma * sigma;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double norm = 12.0 / (2.0 * std::numbers::pi * sigma * sigma);
  // The cell contains the disc of radius r, so pe <= exp(-r^2 / 2 sigma^2).
  const double disc_bound = std::exp(-r * r / s2);
  if (disc_bound < 1e-3 * tolerance) return {0.0, disc_bound};
  // integrand tolerance scaled so that the assembled probability meets `tolerance`
  const double inner_tol = 1e-12;
  double inner_err_max = 0.0;
  auto outer = [&](double x) {
    auto inner = [&](double y) { return std::exp(-(x * x + y * y) / s2); };
    double err = 0.0;
    const double v = gauss_kronrod<double, 15>::integrate(inner, 0.0, x * inv_sqrt3, 15,
                                                          inner_tol, &err);
    inner_err_max = std::max(inner_err_max, err);
    return v;
  };
  double outer_err = 0.0;
  const double I = gauss_kronrod<double, 15>::integrate(outer, 0.0, r, 15, 1e-12, &outer_err);
  HexIntegral out;
  out.pe = 1.0 - norm * I;
  out.error_estimate = norm * (outer_err + r * inner_err_max);
  if (!(out.error_estimate <= tolerance)) {
    throw std::runtime_error("analytic_pe_hex: quadrature did not converge (error estimate " +
                             std::to_string(out.error_estimate) + ")");
  }
  if (out.pe < 0.0) out.pe = 0.0;
  return out;
}

double analytic_pe_hex(double sigma) { return analytic_pe_hex_detail(sigma).pe; }

}  // namespace shiftcode
