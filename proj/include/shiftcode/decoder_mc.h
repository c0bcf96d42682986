#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shiftcode/lattice.h"

namespace shiftcode {

struct McConfig {
  LatticeCode code;
  double sigma = 0.0;
  long long trials = 1;
  std::uint64_t seed = 0;
  double ancilla_sigma = 0.0;  // 0 means ideal syndrome extraction
  double squeezing_delta = 0.0;  // finite-squeezing width added in quadrature, 0 = ideal words
  int workers = 0;  // 0 picks SHIFTCODE_WORKERS or the hardware thread count
};

struct RateEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

struct McResult {
  std::map<std::vector<long long>, long long> coset_counts;
  long long trials = 0;
  RateEstimate x_rate;      // any logical X component
  RateEstimate z_rate;      // any logical Z component
  RateEstimate total_rate;  // any non-identity coset
  // metadata
  std::uint64_t seed = 0;
  int workers = 0;
  double wall_time_s = 0.0;
  double sigma_eff = 0.0;
  bool finite_squeezing = false;
  std::string schedule;  // "ideal" or "q-round then p-round"
};

int default_worker_count();

RateEstimate binomial_rate(long long hits, long long trials);

McResult run_mc(const McConfig& config);

enum class SyndromeRound { q, p };

struct SyndromeExtraction {
  double syndrome = 0.0;
  Vector residual;  // data shift after recovery, (u, v)
};

// One ancilla-assisted round on a single oscillator. The q round uses a SUM
// from data to ancilla and reads the ancilla position mod q_spacing; the p
// round uses a SUM from ancilla to data and reads the ancilla momentum mod
// p_spacing. Recovery subtracts the centered syndrome from the data.
SyndromeExtraction simulate_syndrome_extraction(const Vector& data_shift,
                                                const Vector& ancilla_shift, SyndromeRound which,
                                                double q_spacing, double p_spacing);

// Centered representative of x mod m in (-m/2, m/2].
double centered_remainder(double x, double m);

// 2 * Gaussian tail beyond spacing_alpha / 2.
double analytic_pe_square(double sigma, double spacing_alpha);

struct HexIntegral {
  double pe = 0.0;
  double error_estimate = 0.0;
};

// One minus the Gaussian mass of the hexagonal cell of area pi, integrated
// over 12 copies of the triangle 0 <= x <= r, 0 <= y <= x / sqrt(3).
HexIntegral analytic_pe_hex_detail(double sigma, double tolerance = 1e-8);
double analytic_pe_hex(double sigma);

// Inradius of the hexagonal cell, (pi / (2 sqrt 3))^{1/2}.
double hex_inradius();

}  // namespace shiftcode
