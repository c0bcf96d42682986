#pragma once

#include <complex>
#include <string>

#include "shiftcode/lattice.h"

namespace shiftcode {

// Heisenberg action U^dag x U = x S + c on the row vector x = (q_1..q_N, p_1..p_N).
// Displacement errors propagate as d -> d S, and "g1 then g2" composes to
// S1 S2 with shift c1 S2 + c2.
struct AffineSymplectic {
  int N = 1;
  Matrix S;
  Vector c;
  std::string kind = "identity";
};

enum class GateKind { sum, fourier, phase, squeeze };

struct GateSpec {
  GateKind kind = GateKind::fourier;
  int i = 0;       // target oscillator (control for sum)
  int j = 1;       // sum target
  int n = 2;       // code dimension for phase
  double r = 1.0;  // squeeze parameter
};

AffineSymplectic identity_gate(int N);
AffineSymplectic build_gate(const GateSpec& spec, int N);
AffineSymplectic sum_gate(int control, int target, int N);
AffineSymplectic fourier_gate(int i, int N);
AffineSymplectic phase_gate(int i, int n, int N);
AffineSymplectic squeeze_gate(int i, double r, int N);

// "first then second"
AffineSymplectic compose(const AffineSymplectic& first, const AffineSymplectic& second);
AffineSymplectic inverse(const AffineSymplectic& g);

bool is_valid_gate(const AffineSymplectic& g, double tol = 1e-12);

Vector propagate_shift(const AffineSymplectic& g, const Vector& shift);

// Label w = (beta_1..beta_N, alpha_1..alpha_N) names
// U_w = exp[i sqrt(2 pi) (sum alpha_i p_i + beta_i q_i)].
struct ConjugatedLabel {
  Vector label;
  double phase = 0.0;  // U U_w U^dag = e^{i phase} U_{label}
};

// Schroedinger conjugation U U_w U^dag.
ConjugatedLabel conjugate_displacement(const AffineSymplectic& g, const Vector& label);

// Physical displacement vector of U_w: sqrt(2 pi) (-alpha, beta).
Vector label_to_displacement(const Vector& label);

struct LatticePreservation {
  bool linear = false;  // M S = U M with U integral and unimodular
  bool phases = false;  // every stabilizer generator keeps eigenvalue +1
  bool preserved() const { return linear && phases; }
};

LatticePreservation check_code_lattice(const AffineSymplectic& g, const LatticeCode& code);
bool preserves_code_lattice(const AffineSymplectic& g, const LatticeCode& code);

enum class CubicCondition { satisfied, marginal, violated };

struct CubicAmplification {
  double v = 0.0;            // 3 pi L u / alpha^3
  double safe_radius = 0.0;  // pi / (2 n alpha)
  bool safe = false;
  CubicCondition condition = CubicCondition::satisfied;  // from |u| L
};

CubicAmplification cubic_amplification(double u, double L, double alpha, int n = 2);

double cubic_phase_coefficient(int n_photons);
// Photon-count resolution good enough for the cubic-phase preparation:
// dn < 0.1 n^{1/3}.
bool photon_count_precision_ok(double n_photons, double dn);
// Cubic exponent after conjugating e^{i gamma' q^3} by the squeeze gate.
double squeezed_cubic_exponent(double gamma_prime, double r);

int w_gate_exponent(long long x);

struct Lambda2ZReport {
  double distance = 0.0;           // full circuit vs diag((-1)^{abc})
  double lambda_p_distance = 0.0;  // expanded controlled-P vs diag(1,1,1,i)
  double shor_stabilizer[3] = {0, 0, 0};
  int s_count = 0;
  int s_inv_count = 0;
  int cnot_count = 0;
};

Lambda2ZReport verify_lambda2z_circuit();

std::string gate_to_json(const AffineSymplectic& g);

}  // namespace shiftcode
