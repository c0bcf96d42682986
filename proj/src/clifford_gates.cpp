#include "shiftcode/clifford_gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace shiftcode {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

void check_index(int i, int N, const char* who) {
  if (N < 1 || i < 0 || i >= N) {
    throw std::invalid_argument(std::string(who) + ": oscillator index " + std::to_string(i) +
                                " out of range for N = " + std::to_string(N));
  }
}

}  // namespace

AffineSymplectic identity_gate(int N) {
  if (N < 1) throw std::invalid_argument("identity_gate: N must be >= 1");
  return {N, Matrix::Identity(2 * N, 2 * N), Vector::Zero(2 * N), "identity"};
}

AffineSymplectic sum_gate(int control, int target, int N) {
  check_index(control, N, "sum_gate");
  check_index(target, N, "sum_gate");
  if (control == target) throw std::invalid_argument("sum_gate: control and target coincide");
  AffineSymplectic g = identity_gate(N);
  // q_t -> q_c + q_t, p_c -> p_c - p_t
  g.S(control, target) = 1.0;
  g.S(N + target, N + control) = -1.0;
  g.kind = "sum";
  return g;
}

AffineSymplectic fourier_gate(int i, int N) {
  check_index(i, N, "fourier_gate");
  AffineSymplectic g = identity_gate(N);
  // q -> p, p -> -q
  g.S(i, i) = 0.0;
  g.S(N + i, N + i) = 0.0;
  g.S(N + i, i) = 1.0;
  g.S(i, N + i) = -1.0;
  g.kind = "fourier";
  return g;
}

AffineSymplectic phase_gate(int i, int n, int N) {
  check_index(i, N, "phase_gate");
  if (n < 1) throw std::invalid_argument("phase_gate: n must be >= 1");
  AffineSymplectic g = identity_gate(N);
  // p -> p - q + c
  g.S(i, N + i) = -1.0;
  g.c(N + i) = (n % 2 == 0) ? 0.0 : std::sqrt(std::numbers::pi / (2.0 * n));
  g.kind = "phase";
  return g;
}

AffineSymplectic squeeze_gate(int i, double r, int N) {
  check_index(i, N, "squeeze_gate");
  if (!(r > 0.0)) throw std::invalid_argument("squeeze_gate: r must be positive");
  AffineSymplectic g = identity_gate(N);
  g.S(i, i) = std::cbrt(r);
  g.S(N + i, N + i) = 1.0 / std::cbrt(r);
  g.kind = "squeeze";
  return g;
}

AffineSymplectic build_gate(const GateSpec& spec, int N) {
  switch (spec.kind) {
    case GateKind::sum: return sum_gate(spec.i, spec.j, N);
    case GateKind::fourier: return fourier_gate(spec.i, N);
    case GateKind::phase: return phase_gate(spec.i, spec.n, N);
    case GateKind::squeeze: return squeeze_gate(spec.i, spec.r, N);
  }
  throw std::invalid_argument("build_gate: unknown gate kind");
}

AffineSymplectic compose(const AffineSymplectic& first, const AffineSymplectic& second) {
  if (first.N != second.N) throw std::invalid_argument("compose: gates act on different N");
  return {first.N, first.S * second.S, second.S.transpose() * first.c + second.c,
          first.kind + "*" + second.kind};
}

AffineSymplectic inverse(const AffineSymplectic& g) {
  const Matrix Si = g.S.inverse();
  return {g.N, Si, -(Si.transpose() * g.c), "inv(" + g.kind + ")"};
}

bool is_valid_gate(const AffineSymplectic& g, double tol) {
  return g.S.rows() == 2 * g.N && g.c.size() == 2 * g.N && is_symplectic(g.S, tol);
}

Vector propagate_shift(const AffineSymplectic& g, const Vector& shift) {
  if (shift.size() != 2 * g.N) throw std::invalid_argument("propagate_shift: dimension mismatch");
  return g.S.transpose() * shift;
}

ConjugatedLabel conjugate_displacement(const AffineSymplectic& g, const Vector& label) {
  if (label.size() != 2 * g.N) {
    throw std::invalid_argument("conjugate_displacement: dimension mismatch");
  }
  // U^dag (w.x) U = w.(x S + c), so U U_w U^dag = U_{w'} e^{-i sqrt(2 pi) w'.c}
  // with w' = w S^{-T}.
  ConjugatedLabel out;
  out.label = g.S.inverse() * label;
  out.phase = -kSqrt2Pi * out.label.dot(g.c);
  return out;
}

Vector label_to_displacement(const Vector& label) {
  const Eigen::Index N = label.size() / 2;
  Vector d(2 * N);
  d.head(N) = -kSqrt2Pi * label.tail(N);
  d.tail(N) = kSqrt2Pi * label.head(N);
  return d;
}

LatticePreservation check_code_lattice(const AffineSymplectic& g, const LatticeCode& code) {
  if (g.N != code.N) throw std::invalid_argument("check_code_lattice: dimension mismatch");
  LatticePreservation out;
  const Matrix U = code.M * g.S * code.M.inverse();
  const Matrix Ur = U.array().round().matrix();
  if ((U - Ur).cwiseAbs().maxCoeff() > 1e-9) return out;
  if (std::abs(std::abs(Ur.determinant()) - 1.0) > 1e-9) return out;
  out.linear = true;

  // U T(d) U^dag = T(d S) e^{i omega(d S, c)}, and T(sum_b k_b d_b) has
  // eigenvalue exp(i pi sum_{b<c} k_b k_c A_bc) on the code space.
  const Matrix w = symplectic_form(code.N);
  out.phases = true;
  for (Eigen::Index a = 0; a < code.M.rows(); ++a) {
    const Vector dS = kSqrt2Pi * (g.S.transpose() * code.M.row(a).transpose());
    double phase = dS.dot(w * g.c);
    const Eigen::Index dim = code.M.rows();
    for (Eigen::Index b = 0; b < dim; ++b)
      for (Eigen::Index cc = b + 1; cc < dim; ++cc)
        phase += std::numbers::pi * Ur(a, b) * Ur(a, cc) * static_cast<double>(code.A(b, cc));
    const double turns = phase / (2.0 * std::numbers::pi);
    if (std::abs(turns - std::round(turns)) > 1e-9) out.phases = false;
  }
  return out;
}

bool preserves_code_lattice(const AffineSymplectic& g, const LatticeCode& code) {
  return check_code_lattice(g, code).preserved();
}

CubicAmplification cubic_amplification(double u, double L, double alpha, int n) {
  if (!(L > 0.0) || !(alpha > 0.0) || n < 1) {
    throw std::invalid_argument("cubic_amplification: need L > 0, alpha > 0, n >= 1");
  }
  CubicAmplification out;
  out.v = 3.0 * std::numbers::pi * L * u / (alpha * alpha * alpha);
  out.safe_radius = std::numbers::pi / (2.0 * n * alpha);
  out.safe = std::abs(out.v) < out.safe_radius;
  const double uL = std::abs(u) * L;
  out.condition = uL < 0.1 ? CubicCondition::satisfied
                  : uL < 1.0 ? CubicCondition::marginal
                             : CubicCondition::violated;
  return out;
}

double cubic_phase_coefficient(int n_photons) {
  if (n_photons < 0) throw std::invalid_argument("cubic_phase_coefficient: n must be >= 0");
  return 1.0 / (6.0 * std::sqrt(2.0 * n_photons + 1.0));
}

bool photon_count_precision_ok(double n_photons, double dn) {
  return std::abs(dn) < 0.1 * std::cbrt(n_photons);
}

double squeezed_cubic_exponent(double gamma_prime, double r) {
  // S^dag e^{i g' q^3} S = e^{i g' (S_qq q)^3}
  const double s = squeeze_gate(0, r, 1).S(0, 0);
  return gamma_prime * s * s * s;
}

int w_gate_exponent(long long x) {
  const long long m = x % 8;  // the polynomial mod 8 only depends on x mod 8
  const long long v = (2 * m * m * m + m * m - 2 * m) % 8;
  return static_cast<int>(v < 0 ? v + 8 : v);
}

namespace {

using cplx = std::complex<double>;
using Op = Eigen::Matrix<cplx, 8, 8>;
using Op1 = Eigen::Matrix<cplx, 2, 2>;

// Qubit 0 is the most significant bit of the basis index.
Op on_qubit(const Op1& u, int k) {
  Op out = Op::Zero();
  const int shift = 2 - k;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if ((r & ~(1 << shift)) != (c & ~(1 << shift))) continue;
      out(r, c) = u((r >> shift) & 1, (c >> shift) & 1);
    }
  return out;
}

Op cnot(int control, int target) {
  Op out = Op::Zero();
  for (int c = 0; c < 8; ++c) {
    const int r = ((c >> (2 - control)) & 1) ? c ^ (1 << (2 - target)) : c;
    out(r, c) = 1.0;
  }
  return out;
}

struct Circuit {
  Op U = Op::Identity();
  int s = 0, s_inv = 0, cx = 0;

  void apply(const Op& g) { U = g * U; }
  void S(int k, bool inv) {
    const double ph = std::numbers::pi / 8.0 * (inv ? -1.0 : 1.0);
    Op1 m = Op1::Zero();
    m(0, 0) = std::polar(1.0, -ph);
    m(1, 1) = std::polar(1.0, ph);
    apply(on_qubit(m, k));
    (inv ? s_inv : s) += 1;
  }
  void CX(int c, int t) {
    apply(cnot(c, t));
    ++cx;
  }
  // controlled P^{+-1} expanded into S, S^{-1} and CNOT
  void controlled_phase(int c, int t, bool inv) {
    CX(c, t);
    S(t, !inv);
    CX(c, t);
    S(t, inv);
    S(c, inv);
  }
};

double phase_free_distance(const Op& U, const Op& target) {
  const cplx ph = U(0, 0) / target(0, 0);
  return (U / ph - target).norm();
}

}  // namespace

Lambda2ZReport verify_lambda2z_circuit() {
  Lambda2ZReport rep;

  Circuit lp;
  lp.controlled_phase(1, 2, false);
  Op lp_target = Op::Identity();
  for (int b = 0; b < 8; ++b)
    if ((b & 3) == 3) lp_target(b, b) = cplx(0.0, 1.0);
  rep.lambda_p_distance = phase_free_distance(lp.U, lp_target);

  Circuit c;
  c.CX(1, 2);
  c.controlled_phase(0, 2, true);
  c.CX(1, 2);
  c.controlled_phase(0, 2, false);
  c.controlled_phase(0, 1, false);
  Op target = Op::Identity();
  target(7, 7) = -1.0;
  rep.distance = phase_free_distance(c.U, target);
  rep.s_count = c.s;
  rep.s_inv_count = c.s_inv;
  rep.cnot_count = c.cx;

  // Shor state and its stabilizers Lambda(Z)_{ab} X_c
  Eigen::Matrix<cplx, 8, 1> psi = Eigen::Matrix<cplx, 8, 1>::Constant(1.0 / std::sqrt(8.0));
  psi = (c.U / (c.U(0, 0))) * psi;
  Op1 x;
  x << 0, 1, 1, 0;
  for (int k = 0; k < 3; ++k) {
    const int a = k, b = (k + 1) % 3, t = (k + 2) % 3;
    Op cz = Op::Identity();
    for (int s = 0; s < 8; ++s)
      if (((s >> (2 - a)) & 1) && ((s >> (2 - b)) & 1)) cz(s, s) = -1.0;
    const Op stab = cz * on_qubit(x, t);
    rep.shor_stabilizer[k] = (psi.adjoint() * stab * psi)(0, 0).real();
  }
  return rep;
}

std::string gate_to_json(const AffineSymplectic& g) {
  nlohmann::json j;
  j["kind"] = g.kind;
  j["N"] = g.N;
  std::vector<std::vector<double>> S(g.S.rows(), std::vector<double>(g.S.cols()));
  for (Eigen::Index r = 0; r < g.S.rows(); ++r)
    for (Eigen::Index k = 0; k < g.S.cols(); ++k) S[r][k] = g.S(r, k);
  j["S"] = S;
  j["c"] = std::vector<double>(g.c.data(), g.c.data() + g.c.size());
  return j.dump();
}

}  // namespace shiftcode
