#include "shiftcode/capacity.h"

#include <bit>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "shiftcode/decoder_mc.h"
#include "shiftcode/lattice.h"
#include "shiftcode/rng.h"

namespace shiftcode {

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0, 1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double css_rate(double pe) {
  if (!(pe >= 0.0 && pe <= 0.5)) throw std::invalid_argument("css_rate: pe must lie in [0, 1/2]");
  return 1.0 - 2.0 * binary_entropy(pe);
}

std::string to_string(ThresholdKind kind) {
  return kind == ThresholdKind::square_css ? "square_css" : "hex_stabilizer";
}

ThresholdResult threshold_sigma(ThresholdKind kind, const ThresholdOptions& opts) {
  ThresholdResult out;
  out.kind = kind;
  out.target_pe = opts.target_pe.value_or(kind == ThresholdKind::square_css ? kSquareCssTarget
                                                                            : kHexStabilizerTarget);
  if (!(out.target_pe > 0.0 && out.target_pe < 1.0)) {
    throw std::invalid_argument("threshold_sigma: target pe must lie in (0, 1)");
  }
  const double alpha = std::sqrt(std::numbers::pi);
  auto f = [&](double s) {
    const double pe = kind == ThresholdKind::square_css
                          ? analytic_pe_square(s, alpha)
                          : analytic_pe_hex_detail(s, opts.quadrature_tolerance).pe;
    return pe - out.target_pe;
  };
  if (f(opts.lo) * f(opts.hi) > 0.0) {
    throw std::runtime_error("threshold_sigma: target not bracketed by sigma in [" +
                             std::to_string(opts.lo) + ", " + std::to_string(opts.hi) + "]");
  }
  const double tol = opts.tolerance;
  auto done = [tol](double a, double b) { return std::abs(b - a) < tol; };
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::bisect(f, opts.lo, opts.hi, done, iters);
  out.sigma_star = 0.5 * (a + b);
  out.iterations = static_cast<int>(iters);
  return out;
}

CapacityBounds capacity_bounds(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("capacity_bounds: sigma must be positive");
  const double s2 = sigma * sigma;
  CapacityBounds b;
  b.holevo_upper = std::max(0.0, std::log2(1.0 / s2));
  const double ci = std::log2(1.0 / (std::numbers::e * s2));
  b.coherent_positive = s2 < 1.0 / std::numbers::e;
  b.coherent_info = b.coherent_positive ? ci : 0.0;
  return b;
}

SteaneCode steane_code() {
  SteaneCode c;
  for (int k = 0; k < 7; ++k) c.check_columns[k] = static_cast<std::uint8_t>(k + 1);
  return c;
}

int SteaneCode::syndrome(std::uint8_t pattern) const {
  int s = 0;
  for (int k = 0; k < 7; ++k)
    if (pattern >> k & 1) s ^= check_columns[k];
  return s;
}

int SteaneCode::correction(int syndrome) const {
  if (syndrome < 0 || syndrome > 7) throw std::invalid_argument("steane: syndrome is 3 bits");
  for (int k = 0; k < 7; ++k)
    if (check_columns[k] == syndrome) return k;
  return -1;
}

bool SteaneCode::is_logical(std::uint8_t residual) const {
  return std::popcount(static_cast<unsigned>(residual & 0x7F)) % 2 == 1;
}

SteaneCorrection steane_decode(int syndrome_x, int syndrome_z) {
  static const SteaneCode code = steane_code();
  return {code.correction(syndrome_x), code.correction(syndrome_z)};
}

namespace {

struct ConcatTally {
  long long x = 0, z = 0, any = 0;
};

bool sector_fails(const SteaneCode& code, std::uint8_t pattern) {
  const int pos = code.correction(code.syndrome(pattern));
  const std::uint8_t residual = pos < 0 ? pattern : pattern ^ static_cast<std::uint8_t>(1u << pos);
  return code.is_logical(residual);
}

}  // namespace

ConcatResult concat_mc(const ConcatConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("concat_mc: trials must be >= 1");
  ConcatResult out;
  out.trials = cfg.trials;
  if (cfg.pe) {
    out.pe = *cfg.pe;
  } else if (cfg.monte_carlo_input) {
    McConfig mc;
    mc.code = build_square(2, std::sqrt(std::numbers::pi));
    mc.sigma = cfg.sigma;
    mc.trials = cfg.input_trials;
    mc.seed = cfg.seed ^ 0xC0FFEEull;
    mc.workers = cfg.workers;
    out.pe = run_mc(mc).x_rate.estimate;
  } else {
    out.pe = cfg.sigma > 0.0 ? analytic_pe_square(cfg.sigma, std::sqrt(std::numbers::pi)) : 0.0;
  }
  if (!(out.pe >= 0.0 && out.pe <= 1.0)) throw std::invalid_argument("concat_mc: pe outside [0, 1]");
  out.unencoded_total = 1.0 - (1.0 - out.pe) * (1.0 - out.pe);

  const SteaneCode code = steane_code();
  int workers = cfg.workers > 0 ? cfg.workers : default_worker_count();
  if (workers > cfg.trials) workers = static_cast<int>(cfg.trials);
  std::vector<ConcatTally> tallies(workers);
  auto work = [&](int w, long long begin, long long end) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(w));
    ConcatTally& t = tallies[w];
    for (long long i = begin; i < end; ++i) {
      std::uint8_t xs = 0, zs = 0;
      for (int k = 0; k < 7; ++k) {
        if (rng.uniform() < out.pe) xs |= static_cast<std::uint8_t>(1u << k);
        if (rng.uniform() < out.pe) zs |= static_cast<std::uint8_t>(1u << k);
      }
      const bool fx = sector_fails(code, xs), fz = sector_fails(code, zs);
      t.x += fx;
      t.z += fz;
      t.any += fx || fz;
    }
  };
  std::vector<std::thread> threads;
  const long long chunk = cfg.trials / workers, extra = cfg.trials % workers;
  long long begin = 0;
  for (int w = 0; w < workers; ++w) {
    const long long end = begin + chunk + (w < extra ? 1 : 0);
    if (workers == 1) work(w, begin, end);
    else threads.emplace_back(work, w, begin, end);
    begin = end;
  }
  for (auto& th : threads) th.join();

  ConcatTally sum;
  for (const auto& t : tallies) {
    sum.x += t.x;
    sum.z += t.z;
    sum.any += t.any;
  }
  out.block_x = binomial_rate(sum.x, cfg.trials).estimate;
  out.block_z = binomial_rate(sum.z, cfg.trials).estimate;
  const RateEstimate tot = binomial_rate(sum.any, cfg.trials);
  out.block_total = tot.estimate;
  out.block_total_stderr = tot.stderr_;
  return out;
}

}  // namespace shiftcode
