#pragma once

#include <complex>
#include <map>
#include <vector>

namespace shiftcode {

using cplx = std::complex<double>;

// Finitely squeezed word j: peaks of width delta at (n s + j) alpha under an
// envelope exp(-kappa^2 x^2 / 2).
struct GaussianCodeword {
  int n = 2;
  double alpha = 1.7724538509055159;  // sqrt(pi)
  double delta = 0.25;
  double kappa = 0.25;
  int j = 0;
};

GaussianCodeword make_codeword(int n, double alpha, double delta, double kappa, int j);

// kappa alpha < 0.5 and delta / alpha < 0.5; outside this the words overlap
// noticeably.
bool approximation_regime(const GaussianCodeword& w);

// Superposition sum_j amplitudes[j] |j~> of words sharing (n, alpha, delta, kappa).
struct CombState {
  int n = 2;
  double alpha = 1.7724538509055159;
  double delta = 0.25;
  double kappa = 0.25;
  std::vector<cplx> amplitudes;
};

CombState as_state(const GaussianCodeword& w);
CombState plus_state(int n, double alpha, double delta, double kappa);

// sum_k coef_k exp(-(x - center_k)^2 / (2 width^2)); used for exact interval masses.
struct GaussianSum {
  std::vector<cplx> coef;
  std::vector<double> center;
  double width = 1.0;

  cplx value(double x) const;
  double norm2() const;
  // Probability mass of |value|^2 on [lo, hi].
  double mass(double lo, double hi) const;
};

// Position amplitude, normalized, envelope cut at 6 / kappa.
GaussianSum position_peaks(const CombState& st, double* truncated_mass = nullptr);
// Exact momentum amplitude of the same (untruncated) comb after Poisson
// resummation; phi(p) = (2 pi)^{-1/2} int e^{-i p q} psi(q) dq.
GaussianSum momentum_peaks(const CombState& st);

struct Grid {
  double start = 0.0;
  double step = 1.0;
  int count = 0;
  double at(int i) const { return start + step * i; }
};

struct GridWavefunction {
  double start = 0.0;
  double step = 1.0;
  std::vector<cplx> samples;

  double at(int i) const { return start + step * i; }
  double norm2() const;  // trapezoidal
  void normalize();
};

// step alpha / 64, extent +-(8 / kappa)
Grid default_position_grid(const CombState& st);
// step 2 pi / (n alpha) / 64, extent +-(8 / delta)
Grid default_momentum_grid(const CombState& st);

GridWavefunction position_wavefunction(const CombState& st, const Grid& g);
GridWavefunction momentum_wavefunction(const CombState& st, const Grid& g);
std::vector<double> position_density(const CombState& st, const Grid& g);
std::vector<double> momentum_density(const CombState& st, const Grid& g);
// Peak-height envelope rho(0) exp(-kappa^2 q^2) of the position density.
std::vector<double> position_envelope(const CombState& st, const Grid& g);

// Direct quadrature of (2 pi)^{-1/2} sum_k psi(q_k) e^{-i p q_k} h on a p grid.
GridWavefunction fourier_transform(const GridWavefunction& psi, const Grid& pgrid);

struct DualityCheck {
  double density_l2 = 0.0;    // (int (rho_num - rho_poisson)^2 dp)^{1/2}
  double amplitude_l2 = 0.0;  // (int |phi_num - phi_poisson|^2 dp)^{1/2}
  bool agrees = false;        // density_l2 < 1e-6
};

DualityCheck check_fourier_duality(const CombState& st);

struct IntrinsicError {
  double position = 0.0;     // |0~>, q nearer an odd multiple of sqrt(pi)
  double momentum = 0.0;     // (|0~> + |1~>)/sqrt 2, p nearer an odd multiple of sqrt(pi)
  double union_bound = 0.0;  // position + momentum
};

// Symmetric qubit words, n = 2, alpha = sqrt(pi), kappa = delta.
IntrinsicError intrinsic_error_sectors(double delta);
double intrinsic_error_numeric(double delta);
double intrinsic_error_asymptotic(double delta);

// (1/2)(<q^2> + <p^2>) - 1/2 by quadrature on the default grids.
double mean_photon(const CombState& st);

struct OverlapResult {
  cplx lhs;                    // grid inner product over 2 pi / (n alpha)
  cplx rhs;                    // <xi1|xi2> <eta1|eta2>
  double truncated_mass = 0.0; // largest |eta|^2 mass cut off by the correctable box
};

// Words rebuilt from their Gaussian error wavefunctions truncated to
// |u| < alpha / 2, |v| < pi / (n alpha).
OverlapResult overlap_factorization(const GaussianCodeword& w1, const GaussianCodeword& w2);
// Closed-form overlap of two Gaussian error wavefunctions.
double gaussian_error_overlap(double delta1, double kappa1, double delta2, double kappa2);

struct WignerSite {
  int s = 0;
  int t = 0;
  double q = 0.0;
  double p = 0.0;
  int sign = 1;
};

// Sites p = (pi / (n alpha)) s, q = alpha j + (n alpha / 2) t for s in [s0, s1), t in [t0, t1).
std::vector<WignerSite> wigner_sites(int n, double alpha, int j, int s0, int s1, int t0, int t1);
// Signed weight per t index (integrating over p) or per s index (integrating over q).
std::map<int, int> wigner_marginal_over_p(const std::vector<WignerSite>& sites);
std::map<int, int> wigner_marginal_over_q(const std::vector<WignerSite>& sites);

struct CombResult {
  GridWavefunction psi;
  double translation_residual = 0.0;  // interior L2 change under q -> q - alpha
  bool truncation_warning = false;    // residual above 1e-3
};

// sum_{|s|,|t| <= window} of vacuum Gaussians displaced to (s alpha + q0, 2 pi t / alpha + p0),
// built as (sum_s e^{-i s p alpha}) (sum_t e^{2 pi i t q / alpha}) applied to the
// coherent state at (q0, p0).
CombResult coherent_comb(int window, double alpha, double q0 = 0.0, double p0 = 0.0);
// |<a|b>| / (|a| |b|) restricted to |q| <= limit.
double interior_fidelity(const GridWavefunction& a, const GridWavefunction& b, double limit);

struct PoissonCheck {
  double lhs = 0.0;
  cplx rhs;
};

// sum_m e^{-pi a (m - b)^2} against a^{-1/2} sum_s e^{-pi s^2 / a} e^{2 pi i s b}.
PoissonCheck poisson_check(double a, double b, int truncation);

}  // namespace shiftcode
