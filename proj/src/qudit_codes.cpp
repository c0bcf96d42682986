#include "shiftcode/qudit_codes.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shiftcode {

using cplx = std::complex<double>;

QuditCode make_code(int n, int r1, int r2) {
  if (n < 1 || r1 < 1 || r2 < 1) {
    throw std::invalid_argument("make_code: n, r1, r2 must all be >= 1");
  }
  QuditCode c;
  c.n = n;
  c.r1 = r1;
  c.r2 = r2;
  c.d = n * r1 * r2;
  return c;
}

long positive_mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

long centered_mod(long x, long m) {
  long r = positive_mod(x, m);
  // r in [0, m); keep r when 2r <= m so that an exact half stays at +m/2
  if (2 * r > m) r -= m;
  return r;
}

PauliLabel make_label(const QuditCode& code, long a, long b) {
  return {centered_mod(a, code.d), centered_mod(b, code.d)};
}

std::vector<int> codeword_support(const QuditCode& code, int j) {
  if (j < 0 || j >= code.n) {
    throw std::invalid_argument("codeword_support: logical index " + std::to_string(j) +
                                " outside [0, " + std::to_string(code.n) + ")");
  }
  std::vector<int> out;
  out.reserve(code.r2);
  for (int k = 0; k < code.r2; ++k) out.push_back((k * code.n + j) * code.r1);
  return out;
}

QuditSyndrome syndrome_of(const QuditCode& code, const PauliLabel& e) {
  return {static_cast<int>(positive_mod(e.a, code.r1)),
          static_cast<int>(positive_mod(e.b, code.r2))};
}

DecodeOutcome decode(const QuditCode& code, const PauliLabel& error) {
  const PauliLabel e = make_label(code, error.a, error.b);
  DecodeOutcome out;
  out.syndrome = syndrome_of(code, e);
  out.correction = {centered_mod(out.syndrome.s_amp, code.r1),
                    centered_mod(out.syndrome.s_phase, code.r2)};
  out.logical.x = static_cast<int>(positive_mod((e.a - out.correction.a) / code.r1, code.n));
  out.logical.z = static_cast<int>(positive_mod((e.b - out.correction.b) / code.r2, code.n));
  out.correctable = out.logical.is_identity();
  return out;
}

Rational make_rational(long num, long den) {
  if (den <= 0) throw std::invalid_argument("make_rational: denominator must be positive");
  num = positive_mod(num, den);
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

CommutationPhase commutation_phase(const QuditCode& code, const PauliLabel& error) {
  // (X^a Z^b) X^{r1 n} = w^{r1 n b} X^{r1 n} (X^a Z^b), and w^{r1 n b} = e^{2 pi i b / r2}.
  // Likewise against Z^{r2 n} the phase is e^{-2 pi i a / r1}.
  return {make_rational(error.b, code.r2), make_rational(-error.a, code.r1)};
}

namespace {

// X^a Z^b |k> = w^{b k} |k + a>, with roots[m] = w^m
std::vector<cplx> apply_pauli(const std::vector<cplx>& psi, long a, long b,
                              const std::vector<cplx>& roots) {
  const int d = static_cast<int>(roots.size());
  std::vector<cplx> out(d);
  for (int k = 0; k < d; ++k) out[positive_mod(k + a, d)] += roots[positive_mod(b * k, d)] * psi[k];
  return out;
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// Integer k in [0, m) with e^{2 pi i k / m} closest to z.
int phase_index(cplx z, int m) {
  const double t = std::arg(z) / (2.0 * std::numbers::pi) * m;
  return static_cast<int>(positive_mod(std::lround(t), m));
}

}  // namespace

OracleResult dense_oracle_roundtrip(const QuditCode& code, const PauliLabel& error) {
  const int d = code.d;
  if (d > kDenseOracleMaxDim) {
    throw std::invalid_argument("dense_oracle_roundtrip: d = " + std::to_string(d) +
                                " exceeds the dense cap of " +
                                std::to_string(kDenseOracleMaxDim));
  }
  const int n = code.n;
  std::vector<cplx> roots(d);
  for (int m = 0; m < d; ++m) roots[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / d);
  std::vector<std::vector<cplx>> words(n, std::vector<cplx>(d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(code.r2));
  for (int j = 0; j < n; ++j)
    for (int s : codeword_support(code, j)) words[j][s] = amp;

  // Every E|j> is an eigenvector of both stabilizer generators, so the
  // eigenvalue is the expectation value on E|0>.
  const std::vector<cplx> e0 = apply_pauli(words[0], error.a, error.b, roots);
  const cplx lam_z = inner(e0, apply_pauli(e0, 0, code.stabilizer_z_power(), roots));
  const cplx lam_x = inner(e0, apply_pauli(e0, code.stabilizer_x_power(), 0, roots));

  OracleResult res;
  // Z^{r2 n} on support k gives e^{2 pi i k / r1}; X^{r1 n} gives e^{-2 pi i b / r2}.
  res.syndrome.s_amp = phase_index(lam_z, code.r1);
  res.syndrome.s_phase = static_cast<int>(positive_mod(-phase_index(lam_x, code.r2), code.r2));

  const long ca = centered_mod(res.syndrome.s_amp, code.r1);
  const long cb = centered_mod(res.syndrome.s_phase, code.r2);

  // G[k][j] = <k| (X^{ca} Z^{cb})^{-1} E |j>. The inverse of X^{ca} Z^{cb} is
  // Z^{-cb} X^{-ca}, applied as two separate steps.
  std::vector<std::vector<cplx>> g(n, std::vector<cplx>(n));
  std::vector<std::vector<cplx>> recovered(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> v = apply_pauli(words[j], error.a, error.b, roots);
    v = apply_pauli(v, -ca, 0, roots);
    v = apply_pauli(v, 0, -cb, roots);
    recovered[j] = std::move(v);
    for (int k = 0; k < n; ++k) g[k][j] = inner(words[k], recovered[j]);
  }

  // Worst overlap over the words and their pairwise equal superpositions. A
  // diagonal G with unequal phases (a logical Z) fails on some pair.
  res.fidelity = 1.0;
  for (int j = 0; j < n; ++j) {
    res.fidelity = std::min(res.fidelity, std::abs(g[j][j]));
    for (int k = j + 1; k < n; ++k) {
      const cplx pair = 0.5 * (g[j][j] + g[j][k] + g[k][j] + g[k][k]);
      res.fidelity = std::min(res.fidelity, std::abs(pair));
    }
  }

  // Logical X power: row on which column 0 is supported.
  int x = 0;
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(g[k][0]) > best) {
      best = std::abs(g[k][0]);
      x = k;
    }
  }
  res.logical.x = x;
  res.logical_fidelity = 1.0;
  for (int j = 0; j < n; ++j)
    res.logical_fidelity = std::min(res.logical_fidelity, std::abs(g[(j + x) % n][j]));
  // Logical Z power from the relative phase between columns 1 and 0.
  if (n > 1 && res.logical_fidelity > 0.5) {
    const cplx ratio = g[(1 + x) % n][1] / g[x][0];
    res.logical.z = phase_index(ratio, n);
  }
  return res;
}

double RotorCode::theta_radius() const { return std::numbers::pi / m; }
double RotorCode::l_radius() const { return static_cast<double>(m) / (2.0 * n); }

RotorCode make_rotor(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("make_rotor: m and n must be >= 1");
  return {m, n};
}

RotorOutcome rotor_decode(const RotorCode& code, double dtheta, double dl) {
  if (!std::isfinite(dtheta) || !std::isfinite(dl) || std::abs(dl - std::round(dl)) > 1e-9) {
    throw std::invalid_argument("rotor_decode: dL must be an integer (angular momentum is quantized)");
  }
  // nearest lattice index, an exact half rounding toward the lower index
  auto nearest = [](double x) { return static_cast<long>(std::ceil(x - 0.5)); };
  const long kt = nearest(dtheta / (2.0 * std::numbers::pi / code.m));
  const long kl = nearest(std::round(dl) / (static_cast<double>(code.m) / code.n));
  RotorOutcome out;
  out.theta_class = static_cast<int>(positive_mod(kt, code.n));
  out.l_class = static_cast<int>(positive_mod(kl, code.n));
  // A shift exactly on the boundary is ambiguous, so the radii are strict even
  // though the class is still reported from the lower representative.
  const double rt = std::abs(dtheta - kt * 2.0 * std::numbers::pi / code.m);
  const double rl = std::abs(std::round(dl) - kl * static_cast<double>(code.m) / code.n);
  out.correctable = out.theta_class == 0 && out.l_class == 0 && rt < code.theta_radius() &&
                    rl < code.l_radius();
  return out;
}

}  // namespace shiftcode
