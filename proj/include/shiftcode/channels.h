#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "shiftcode/lattice.h"

namespace shiftcode {

using cplx = std::complex<double>;

struct GaussianShiftChannel {
  double sigma = 0.0;
};

// count shift vectors of length 2N, drawn from stream `stream` of `seed`.
std::vector<Vector> sample_shifts(const GaussianShiftChannel& channel, int N, std::uint64_t seed,
                                  int count, std::uint64_t stream = 0);

struct DiffusionModel {
  double diffusion_constant = 0.0;
  double t = 0.0;
};

double diffusion_sigma(const DiffusionModel& model);

struct DampingExpansion {
  double gamma_rate = 0.0;
  double dt = 0.0;
};

enum class Quadrature { q, p };

// exp(i sign * scale * quadrature) weighted by coefficient
struct DisplacementTerm {
  Quadrature quadrature = Quadrature::q;
  int sign = 1;
  cplx coefficient;
};

struct DampingTerms {
  double shift_scale = 0.0;  // sqrt(Gamma dt / 2)
  bool small_step = true;    // false when Gamma dt >= 0.1
  std::vector<DisplacementTerm> terms;
};

// sqrt(Gamma dt) a ~ sum of the four terms, to first order in the scale.
DampingTerms damping_displacement_terms(const DampingExpansion& e);

// Frobenius norm of sqrt(Gamma dt) a minus the four-term sum, restricted to
// the lowest `keep` number states of a `cutoff`-dimensional truncation.
double damping_residual(const DampingExpansion& e, int cutoff = 64, int keep = 16);

struct RotationError {
  double theta = 0.0;
};

// Operator ordering behind U(theta). number_ordered is exp(i theta a^dag a);
// antinormal is exp(i theta a a^dag), which carries an extra e^{i theta}.
enum class RotationOrdering { number_ordered, antinormal };

// Coefficient u_theta(gamma) of D(gamma) in the expansion of U(theta).
// Throws std::domain_error at theta = 0 mod 2 pi (delta-function limit).
cplx rotation_coefficient(const RotationError& err, cplx gamma,
                          RotationOrdering ordering = RotationOrdering::number_ordered);

struct TraceResult {
  cplx value;
  cplx half_cutoff_value;
  double difference = 0.0;
  bool converged = false;
};

inline constexpr int kDefaultTraceCutoff = 256;

// tr(U(theta) D(gamma)^dag) in a truncated number basis, D(gamma) = exp(gamma a - gamma* a^dag).
// The sum over number states does not converge absolutely, so each diagonal
// term is weighted by exp(-36 (k/cutoff)^6).
TraceResult number_basis_trace(double theta, cplx gamma, int cutoff = kDefaultTraceCutoff,
                               RotationOrdering ordering = RotationOrdering::number_ordered);

}  // namespace shiftcode
