#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace shiftcode {

// 1 - 2 H2(pe), the CSS rate for independent X and Z errors.
double css_rate(double pe);
double binary_entropy(double p);

enum class ThresholdKind { square_css, hex_stabilizer };

inline constexpr double kSquareCssTarget = 0.1100;
inline constexpr double kHexStabilizerTarget = 0.1905;

struct ThresholdOptions {
  std::optional<double> target_pe;  // defaults to the kind's target
  double tolerance = 1e-4;          // bracket width on sigma
  double quadrature_tolerance = 1e-8;
  double lo = 0.01;
  double hi = 10.0;
};

struct ThresholdResult {
  ThresholdKind kind = ThresholdKind::square_css;
  double sigma_star = 0.0;
  double target_pe = 0.0;
  int iterations = 0;
};

ThresholdResult threshold_sigma(ThresholdKind kind, const ThresholdOptions& opts = {});
std::string to_string(ThresholdKind kind);

struct CapacityBounds {
  double holevo_upper = 0.0;   // max(0, log2(1 / sigma^2))
  double coherent_info = 0.0;  // log2(1 / (e sigma^2)) clamped at 0
  bool coherent_positive = false;
};

CapacityBounds capacity_bounds(double sigma);

// [[7,1,3]] Hamming-based CSS code. Column k of the parity check matrix is
// the binary expansion of k + 1.
struct SteaneCode {
  std::array<std::uint8_t, 7> check_columns{};
  // Syndrome of a 7-bit error pattern, as the integer sum of s_r 2^r.
  int syndrome(std::uint8_t pattern) const;
  // Position to flip for a syndrome, -1 for the zero syndrome.
  int correction(int syndrome) const;
  // A syndrome-free residual is a logical operator iff its weight is odd.
  bool is_logical(std::uint8_t residual) const;
};

SteaneCode steane_code();

struct SteaneCorrection {
  int x_position = -1;  // qubit to flip with X, -1 for none
  int z_position = -1;
};

// syndrome_x detects X errors, syndrome_z detects Z errors; bit r of each is
// parity check r.
SteaneCorrection steane_decode(int syndrome_x, int syndrome_z);

struct ConcatConfig {
  double sigma = 0.0;
  long long trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> pe;       // per-oscillator X and Z probability; overrides sigma
  bool monte_carlo_input = false;  // estimate pe from run_mc instead of the analytic bound
  long long input_trials = 200000;
  int workers = 0;
};

struct ConcatResult {
  double pe = 0.0;  // per-oscillator, per-sector probability used
  double block_x = 0.0;
  double block_z = 0.0;
  double block_total = 0.0;
  double block_total_stderr = 0.0;
  double unencoded_total = 0.0;  // 1 - (1 - pe)^2
  long long trials = 0;
};

ConcatResult concat_mc(const ConcatConfig& config);

}  // namespace shiftcode
