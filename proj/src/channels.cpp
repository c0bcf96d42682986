#include "shiftcode/channels.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "shiftcode/rng.h"

namespace shiftcode {

namespace {

using CMatrix = Eigen::MatrixXcd;

// Truncated annihilation operator, a|k> = sqrt(k)|k-1>.
CMatrix annihilation(int cutoff) {
  CMatrix a = CMatrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

}  // namespace

std::vector<Vector> sample_shifts(const GaussianShiftChannel& channel, int N, std::uint64_t seed,
                                  int count, std::uint64_t stream) {
  if (count < 1) throw std::invalid_argument("sample_shifts: count must be >= 1");
  if (N < 1) throw std::invalid_argument("sample_shifts: N must be >= 1");
  if (!(channel.sigma >= 0.0) || !std::isfinite(channel.sigma)) {
    throw std::invalid_argument("sample_shifts: sigma must be finite and non-negative");
  }
  CounterRng rng(seed, stream);
  std::vector<Vector> out(count, Vector(2 * N));
  for (auto& v : out)
    for (int i = 0; i < 2 * N; ++i) v(i) = channel.sigma * rng.normal();
  return out;
}

double diffusion_sigma(const DiffusionModel& model) {
  if (model.t < 0.0 || model.diffusion_constant < 0.0) {
    throw std::invalid_argument("diffusion_sigma: D and t must be non-negative");
  }
  return std::sqrt(model.diffusion_constant * model.t);
}

DampingTerms damping_displacement_terms(const DampingExpansion& e) {
  const double gdt = e.gamma_rate * e.dt;
  if (!(gdt > 0.0)) throw std::invalid_argument("damping_displacement_terms: Gamma dt must be > 0");
  DampingTerms out;
  out.shift_scale = std::sqrt(gdt / 2.0);
  out.small_step = gdt < 0.1;
  const cplx i(0.0, 1.0);
  out.terms = {{Quadrature::q, +1, -i / 2.0},
               {Quadrature::q, -1, i / 2.0},
               {Quadrature::p, +1, cplx(0.5)},
               {Quadrature::p, -1, cplx(-0.5)}};
  return out;
}

double damping_residual(const DampingExpansion& e, int cutoff, int keep) {
  if (keep > cutoff) throw std::invalid_argument("damping_residual: keep exceeds cutoff");
  const DampingTerms t = damping_displacement_terms(e);
  const CMatrix a = annihilation(cutoff);
  const CMatrix ad = a.adjoint();
  const CMatrix q = (a + ad) / std::sqrt(2.0);
  const CMatrix p = (a - ad) / cplx(0.0, std::sqrt(2.0));
  CMatrix sum = CMatrix::Zero(cutoff, cutoff);
  for (const auto& term : t.terms) {
    const CMatrix& x = term.quadrature == Quadrature::q ? q : p;
    const CMatrix gen = cplx(0.0, term.sign * t.shift_scale) * x;
    sum += term.coefficient * CMatrix(gen.exp());
  }
  const CMatrix target = std::sqrt(e.gamma_rate * e.dt) * a;
  return (sum - target).topLeftCorner(keep, keep).norm();
}

cplx rotation_coefficient(const RotationError& err, cplx gamma, RotationOrdering ordering) {
  const double half = err.theta / 2.0;
  const double s = std::sin(half);
  // sin(theta/2) vanishes only at theta = 0 mod 2 pi
  const double turns = err.theta / (2.0 * std::numbers::pi);
  if (std::abs(turns - std::round(turns)) < 1e-12) {
    throw std::domain_error(
        "rotation_coefficient: theta is a multiple of 2 pi (delta-function limit, u -> pi delta^2(gamma))");
  }
  const double prefactor_phase = ordering == RotationOrdering::number_ordered ? -half : half;
  const cplx i(0.0, 1.0);
  return i * std::polar(1.0, prefactor_phase) / (2.0 * s) *
         std::exp(-0.5 * i * std::norm(gamma) * std::cos(half) / s);
}

namespace {

cplx filtered_trace(double theta, cplx gamma, int cutoff, RotationOrdering ordering) {
  const CMatrix a = annihilation(cutoff);
  const CMatrix gen = gamma * a - std::conj(gamma) * a.adjoint();
  // D^dag = exp(-gen)
  const CMatrix ddag = CMatrix(-gen).exp();
  const int offset = ordering == RotationOrdering::number_ordered ? 0 : 1;
  cplx sum = 0.0;
  for (int k = 0; k < cutoff; ++k) {
    const double x = static_cast<double>(k) / cutoff;
    const double w = std::exp(-36.0 * std::pow(x, 6));
    sum += w * std::polar(1.0, theta * (k + offset)) * ddag(k, k);
  }
  return sum;
}

}  // namespace

TraceResult number_basis_trace(double theta, cplx gamma, int cutoff, RotationOrdering ordering) {
  if (cutoff < 64) throw std::invalid_argument("number_basis_trace: cutoff must be >= 64");
  TraceResult r;
  r.value = filtered_trace(theta, gamma, cutoff, ordering);
  r.half_cutoff_value = filtered_trace(theta, gamma, cutoff / 2, ordering);
  r.difference = std::abs(r.value - r.half_cutoff_value);
  r.converged = r.difference <= 1e-3;
  return r;
}

}  // namespace shiftcode
