#include "shiftcode/squeezing.h"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace shiftcode {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEnvelopeWidths = 6.0;

// Overlap factors below this are dropped from double sums.
constexpr double kNegligible = 1e-300;

// erf(b) - erf(a) without cancellation in the tails
double erf_diff(double a, double b) {
  if (a >= 0.0) return std::erfc(a) - std::erfc(b);
  if (b <= 0.0) return std::erfc(-b) - std::erfc(-a);
  return std::erf(b) - std::erf(a);
}

void check_state(const CombState& st) {
  if (st.n < 1 || !(st.alpha > 0.0) || !(st.delta > 0.0) || !(st.kappa > 0.0)) {
    throw std::invalid_argument("squeezing: need n >= 1 and alpha, delta, kappa > 0");
  }
  if (static_cast<int>(st.amplitudes.size()) != st.n) {
    throw std::invalid_argument("squeezing: amplitude vector must have n entries");
  }
}

}  // namespace

GaussianCodeword make_codeword(int n, double alpha, double delta, double kappa, int j) {
  if (n < 1 || !(alpha > 0.0) || !(delta > 0.0) || !(kappa > 0.0)) {
    throw std::invalid_argument("make_codeword: need n >= 1 and alpha, delta, kappa > 0");
  }
  if (j < 0 || j >= n) throw std::invalid_argument("make_codeword: j outside [0, n)");
  return {n, alpha, delta, kappa, j};
}

bool approximation_regime(const GaussianCodeword& w) {
  return w.kappa * w.alpha < 0.5 && w.delta / w.alpha < 0.5;
}

CombState as_state(const GaussianCodeword& w) {
  CombState st{w.n, w.alpha, w.delta, w.kappa, std::vector<cplx>(w.n, 0.0)};
  st.amplitudes[w.j] = 1.0;
  return st;
}

CombState plus_state(int n, double alpha, double delta, double kappa) {
  return {n, alpha, delta, kappa, std::vector<cplx>(n, 1.0 / std::sqrt(static_cast<double>(n)))};
}

cplx GaussianSum::value(double x) const {
  cplx v = 0.0;
  const double inv = 1.0 / (2.0 * width * width);
  for (std::size_t k = 0; k < coef.size(); ++k) {
    const double d = x - center[k];
    v += coef[k] * std::exp(-d * d * inv);
  }
  return v;
}

double GaussianSum::norm2() const {
  double s = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k)
    for (std::size_t l = 0; l < coef.size(); ++l) {
      const double d = center[k] - center[l];
      s += std::real(std::conj(coef[k]) * coef[l]) * std::exp(-d * d / (4.0 * width * width));
    }
  return s * std::sqrt(kPi) * width;
}

double GaussianSum::mass(double lo, double hi) const {
  // |sum|^2 = sum_{k,l} c_k* c_l e^{-(a-b)^2 / 4w^2} e^{-(x - (a+b)/2)^2 / w^2}
  double s = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k)
    for (std::size_t l = 0; l < coef.size(); ++l) {
      const double d = center[k] - center[l];
      const double overlap = std::exp(-d * d / (4.0 * width * width));
      if (overlap < kNegligible) continue;
      const double m = 0.5 * (center[k] + center[l]);
      s += std::real(std::conj(coef[k]) * coef[l]) * overlap *
           erf_diff((lo - m) / width, (hi - m) / width);
    }
  return s * 0.5 * std::sqrt(kPi) * width;
}

namespace {

// Unnormalized comb a_j e^{-kappa^2 x^2 / 2} at x = (n s + j) alpha, |x| <= 6 / kappa.
struct RawComb {
  std::vector<cplx> weight;
  std::vector<double> center;
  double gram = 0.0;  // squared norm in units of the peak shape
  double dropped = 0.0;
  double kept = 0.0;
};

RawComb raw_comb(const CombState& st) {
  check_state(st);
  const double cut = kEnvelopeWidths / st.kappa;
  RawComb r;
  for (int j = 0; j < st.n; ++j) {
    if (st.amplitudes[j] == 0.0) continue;
    const long lo = static_cast<long>(std::floor((-2.0 * cut / st.alpha - j) / st.n));
    const long hi = static_cast<long>(std::ceil((2.0 * cut / st.alpha - j) / st.n));
    for (long s = lo; s <= hi; ++s) {
      const double x = (st.n * s + j) * st.alpha;
      const cplx c = st.amplitudes[j] * std::exp(-0.5 * st.kappa * st.kappa * x * x);
      if (std::abs(x) <= cut) {
        r.weight.push_back(c);
        r.center.push_back(x);
        r.kept += std::norm(c);
      } else {
        r.dropped += std::norm(c);
      }
    }
  }
  if (r.weight.empty()) throw std::invalid_argument("squeezing: state has no peaks");
  for (std::size_t k = 0; k < r.weight.size(); ++k)
    for (std::size_t l = 0; l < r.weight.size(); ++l) {
      const double d = r.center[k] - r.center[l];
      r.gram += std::real(std::conj(r.weight[k]) * r.weight[l]) *
                std::exp(-d * d / (4.0 * st.delta * st.delta));
    }
  return r;
}

}  // namespace

GaussianSum position_peaks(const CombState& st, double* truncated_mass) {
  const RawComb r = raw_comb(st);
  GaussianSum g;
  g.width = st.delta;
  g.center = r.center;
  const double scale = std::pow(kPi * st.delta * st.delta, -0.25) / std::sqrt(r.gram);
  for (const cplx& c : r.weight) g.coef.push_back(c * scale);
  if (truncated_mass) *truncated_mass = r.dropped / (r.kept + r.dropped);
  return g;
}

GaussianSum momentum_peaks(const CombState& st) {
  const RawComb r = raw_comb(st);
  const double d2 = st.delta * st.delta, k2 = st.kappa * st.kappa;
  const double stretch = 1.0 + k2 * d2;
  const double spacing = 2.0 * kPi / (st.n * st.alpha);
  const double cut = kEnvelopeWidths * std::sqrt(stretch) / st.delta;
  const long mmax = static_cast<long>(std::ceil(cut / spacing)) + 1;

  GaussianSum g;
  g.width = st.kappa / std::sqrt(stretch);
  const double pre = std::pow(d2 / kPi, 0.25) * std::sqrt(2.0 * kPi) /
                     (st.n * st.alpha * st.kappa * std::sqrt(r.gram));
  for (long m = -mmax; m <= mmax; ++m) {
    const double pm = -spacing * m;
    cplx phase_sum = 0.0;
    for (int j = 0; j < st.n; ++j)
      phase_sum += st.amplitudes[j] * std::polar(1.0, 2.0 * kPi * m * j / st.n);
    if (std::abs(phase_sum) < 1e-15) continue;
    g.coef.push_back(pre * phase_sum * std::exp(-0.5 * d2 * pm * pm / stretch));
    g.center.push_back(pm / stretch);
  }
  return g;
}

double GridWavefunction::norm2() const {
  if (samples.empty()) return 0.0;
  double s = 0.0;
  for (const cplx& v : samples) s += std::norm(v);
  s -= 0.5 * (std::norm(samples.front()) + std::norm(samples.back()));
  return s * step;
}

void GridWavefunction::normalize() {
  const double n = std::sqrt(norm2());
  if (!(n > 0.0)) throw std::runtime_error("GridWavefunction: zero norm");
  for (cplx& v : samples) v /= n;
}

namespace {

Grid symmetric_grid(double step, double extent) {
  const int half = static_cast<int>(std::ceil(extent / step));
  return {-half * step, step, 2 * half + 1};
}

GridWavefunction sample(const GaussianSum& g, const Grid& grid) {
  GridWavefunction w{grid.start, grid.step, std::vector<cplx>(grid.count)};
  for (int i = 0; i < grid.count; ++i) w.samples[i] = g.value(grid.at(i));
  return w;
}

}  // namespace

Grid default_position_grid(const CombState& st) {
  check_state(st);
  return symmetric_grid(st.alpha / 64.0, 8.0 / st.kappa);
}

Grid default_momentum_grid(const CombState& st) {
  check_state(st);
  return symmetric_grid(2.0 * kPi / (st.n * st.alpha) / 64.0, 8.0 / st.delta);
}

GridWavefunction position_wavefunction(const CombState& st, const Grid& g) {
  const GaussianSum peaks = position_peaks(st);
  const double reach = *std::max_element(peaks.center.begin(), peaks.center.end(),
                                         [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (g.start > -std::abs(reach) || g.at(g.count - 1) < std::abs(reach)) {
    throw std::invalid_argument("position_wavefunction: grid does not cover the envelope cutoff");
  }
  return sample(peaks, g);
}

GridWavefunction momentum_wavefunction(const CombState& st, const Grid& g) {
  return sample(momentum_peaks(st), g);
}

std::vector<double> position_density(const CombState& st, const Grid& g) {
  const GridWavefunction w = position_wavefunction(st, g);
  std::vector<double> out(w.samples.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(w.samples[i]);
  return out;
}

std::vector<double> momentum_density(const CombState& st, const Grid& g) {
  const GridWavefunction w = momentum_wavefunction(st, g);
  std::vector<double> out(w.samples.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(w.samples[i]);
  return out;
}

std::vector<double> position_envelope(const CombState& st, const Grid& g) {
  const GaussianSum peaks = position_peaks(st);
  double top = 0.0;
  for (double c : peaks.center) top = std::max(top, std::norm(peaks.value(c)));
  std::vector<double> out(g.count);
  for (int i = 0; i < g.count; ++i) {
    const double q = g.at(i);
    out[i] = top * std::exp(-st.kappa * st.kappa * q * q);
  }
  return out;
}

GridWavefunction fourier_transform(const GridWavefunction& psi, const Grid& pgrid) {
  GridWavefunction out{pgrid.start, pgrid.step, std::vector<cplx>(pgrid.count)};
  const double pref = psi.step / std::sqrt(2.0 * kPi);
  for (int a = 0; a < pgrid.count; ++a) {
    const double p = pgrid.at(a);
    cplx s = 0.0;
    for (std::size_t k = 0; k < psi.samples.size(); ++k)
      s += psi.samples[k] * std::polar(1.0, -p * psi.at(static_cast<int>(k)));
    out.samples[a] = pref * s;
  }
  return out;
}

DualityCheck check_fourier_duality(const CombState& st) {
  const GridWavefunction psi = position_wavefunction(st, default_position_grid(st));
  const Grid pg = default_momentum_grid(st);
  const GridWavefunction num = fourier_transform(psi, pg);
  const GridWavefunction ref = momentum_wavefunction(st, pg);
  double dd = 0.0, da = 0.0;
  for (int i = 0; i < pg.count; ++i) {
    const double r = std::norm(num.samples[i]) - std::norm(ref.samples[i]);
    dd += r * r;
    da += std::norm(num.samples[i] - ref.samples[i]);
  }
  DualityCheck out;
  out.density_l2 = std::sqrt(dd * pg.step);
  out.amplitude_l2 = std::sqrt(da * pg.step);
  out.agrees = out.density_l2 < 1e-6;
  return out;
}

namespace {

// Mass of |g|^2 nearer an odd multiple of `spacing` than an even one. Cells
// are added outward until a pair of cells changes the total by < 1e-3 relative.
double odd_cell_mass(const GaussianSum& g, double spacing) {
  double reach = 0.0;
  for (double c : g.center) reach = std::max(reach, std::abs(c));
  reach += 40.0 * g.width;
  double total = 0.0;
  for (long k = 0;; ++k) {
    const double c = (2 * k + 1) * spacing;
    const double inc = g.mass(c - 0.5 * spacing, c + 0.5 * spacing) +
                       g.mass(-c - 0.5 * spacing, -c + 0.5 * spacing);
    total += inc;
    if (k >= 1 && inc <= 1e-3 * total) break;
    if (c - 0.5 * spacing > reach) break;
  }
  return total;
}

}  // namespace

IntrinsicError intrinsic_error_sectors(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("intrinsic_error: delta must lie in (0, 1)");
  }
  const double a = std::sqrt(kPi);
  IntrinsicError out;
  out.position = odd_cell_mass(position_peaks(as_state(make_codeword(2, a, delta, delta, 0))), a);
  out.momentum = odd_cell_mass(momentum_peaks(plus_state(2, a, delta, delta)), a);
  out.union_bound = out.position + out.momentum;
  return out;
}

double intrinsic_error_numeric(double delta) { return intrinsic_error_sectors(delta).position; }

double intrinsic_error_asymptotic(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("intrinsic_error_asymptotic: delta must lie in (0, 1)");
  }
  return 2.0 * delta / kPi * std::exp(-kPi / (4.0 * delta * delta));
}

double mean_photon(const CombState& st) {
  const Grid qg = default_position_grid(st);
  const Grid pg = default_momentum_grid(st);
  const std::vector<double> rq = position_density(st, qg);
  const std::vector<double> rp = momentum_density(st, pg);
  double q2 = 0.0, p2 = 0.0;
  for (int i = 0; i < qg.count; ++i) q2 += qg.at(i) * qg.at(i) * rq[i];
  for (int i = 0; i < pg.count; ++i) p2 += pg.at(i) * pg.at(i) * rp[i];
  return 0.5 * (q2 * qg.step + p2 * pg.step) - 0.5;
}

double gaussian_error_overlap(double d1, double k1, double d2, double k2) {
  return 2.0 * std::sqrt(d1 * d2 * k1 * k2) /
         (std::sqrt(d1 * d1 + d2 * d2) * std::sqrt(k1 * k1 + k2 * k2));
}

namespace {

// eta_hat(u, y) = int_{-V}^{V} dv eta(u, v) e^{i v y} for the Gaussian eta
// truncated to |u| < U, |v| < V.
double eta_hat(double u, double y, double delta, double kappa, double U, double V) {
  if (std::abs(u) >= U) return 0.0;
  using boost::math::quadrature::gauss;
  constexpr int kPanels = 16;
  const double h = V / kPanels;
  double s = 0.0;
  auto f = [&](double v) { return std::exp(-0.5 * v * v / (kappa * kappa)) * std::cos(v * y); };
  for (int i = 0; i < kPanels; ++i) s += gauss<double, 20>::integrate(f, i * h, (i + 1) * h);
  return 2.0 * s * std::exp(-0.5 * u * u / (delta * delta)) / std::sqrt(kPi * kappa * delta);
}

double box_loss(double delta, double kappa, double U, double V) {
  // |eta|^2 has standard deviations delta / sqrt 2 and kappa / sqrt 2
  return 1.0 - std::erf(U / delta) * std::erf(V / kappa);
}

}  // namespace

OverlapResult overlap_factorization(const GaussianCodeword& w1, const GaussianCodeword& w2) {
  if (w1.n != w2.n || std::abs(w1.alpha - w2.alpha) > 1e-12) {
    throw std::invalid_argument("overlap_factorization: words must share n and alpha");
  }
  const int n = w1.n;
  const double alpha = w1.alpha;
  const double U = alpha / 2.0, V = kPi / (n * alpha);
  OverlapResult out;
  out.truncated_mass = std::max(box_loss(w1.delta, w1.kappa, U, V), box_loss(w2.delta, w2.kappa, U, V));
  if (out.truncated_mass > 1e-5) {
    throw std::invalid_argument(
        "overlap_factorization: error wavefunction not supported in the correctable box "
        "(truncated mass " + std::to_string(out.truncated_mass) + ")");
  }
  const double kmin = std::min(w1.kappa, w2.kappa);
  const long S = static_cast<long>(std::ceil(8.0 / (kmin * n * alpha))) + 2;
  const double h = alpha / 64.0;
  const long half = static_cast<long>(std::ceil((S * n + n) * alpha / h));

  auto amp = [&](const GaussianCodeword& w, double q) {
    // the only peak within alpha / 2 of q, if it belongs to this word
    const long idx = std::lround(q / alpha);
    if ((((idx - w.j) % n) + n) % n != 0) return 0.0;
    const double x = idx * alpha;
    return eta_hat(q - x, 0.5 * (q + x), w.delta, w.kappa, U, V);
  };
  double s = 0.0;
  for (long i = -half; i <= half; ++i) {
    const double q = i * h;
    const double a = amp(w1, q);
    if (a == 0.0) continue;
    s += a * amp(w2, q);
  }
  out.lhs = s * h / (2.0 * kPi / (n * alpha));
  const double xi = w1.j == w2.j ? 1.0 : 0.0;
  out.rhs = xi * gaussian_error_overlap(w1.delta, w1.kappa, w2.delta, w2.kappa);
  return out;
}

std::vector<WignerSite> wigner_sites(int n, double alpha, int j, int s0, int s1, int t0, int t1) {
  if (n < 1 || !(alpha > 0.0)) throw std::invalid_argument("wigner_sites: need n >= 1, alpha > 0");
  if (s1 < s0 || t1 < t0) throw std::invalid_argument("wigner_sites: empty or inverted window");
  std::vector<WignerSite> out;
  for (int s = s0; s < s1; ++s)
    for (int t = t0; t < t1; ++t) {
      WignerSite w;
      w.s = s;
      w.t = t;
      w.p = kPi / (n * alpha) * s;
      w.q = alpha * j + 0.5 * n * alpha * t;
      w.sign = ((s * t) % 2 == 0) ? 1 : -1;
      out.push_back(w);
    }
  return out;
}

std::map<int, int> wigner_marginal_over_p(const std::vector<WignerSite>& sites) {
  std::map<int, int> m;
  for (const auto& w : sites) m[w.t] += w.sign;
  return m;
}

std::map<int, int> wigner_marginal_over_q(const std::vector<WignerSite>& sites) {
  std::map<int, int> m;
  for (const auto& w : sites) m[w.s] += w.sign;
  return m;
}

CombResult coherent_comb(int window, double alpha, double q0, double p0) {
  if (window < 0 || !(alpha > 0.0)) throw std::invalid_argument("coherent_comb: need window >= 0, alpha > 0");
  const double h = alpha / 64.0;
  const int half = 64 * (window + 4);
  Grid g{-half * h, h, 2 * half + 1};
  CombResult out;
  out.psi = GridWavefunction{g.start, g.step, std::vector<cplx>(g.count)};
  const double vac = std::pow(kPi, -0.25);
  for (int i = 0; i < g.count; ++i) {
    const double q = g.at(i);
    // Dirichlet kernel sum_t e^{2 pi i t q / alpha}, alpha-periodic
    cplx dw = 0.0;
    for (int t = -window; t <= window; ++t) dw += std::polar(1.0, 2.0 * kPi * t * q / alpha);
    cplx comb = 0.0;
    for (int s = -window; s <= window; ++s) {
      const double x = q - s * alpha;
      comb += std::polar(vac * std::exp(-0.5 * (x - q0) * (x - q0)), p0 * x);
    }
    out.psi.samples[i] = dw * comb;
  }
  out.psi.normalize();

  const double limit = (std::max(window - 2, 0) + 0.5) * alpha;
  double diff = 0.0, ref = 0.0;
  for (int i = 64; i < g.count; ++i) {
    if (std::abs(g.at(i)) > limit) continue;
    diff += std::norm(out.psi.samples[i - 64] - out.psi.samples[i]);
    ref += std::norm(out.psi.samples[i]);
  }
  out.translation_residual = ref > 0.0 ? std::sqrt(diff / ref) : 1.0;
  out.truncation_warning = out.translation_residual > 1e-3;
  return out;
}

double interior_fidelity(const GridWavefunction& a, const GridWavefunction& b, double limit) {
  if (a.samples.size() != b.samples.size() || std::abs(a.start - b.start) > 1e-12) {
    throw std::invalid_argument("interior_fidelity: wavefunctions on different grids");
  }
  cplx ab = 0.0;
  double aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (std::abs(a.at(static_cast<int>(i))) > limit) continue;
    ab += std::conj(a.samples[i]) * b.samples[i];
    aa += std::norm(a.samples[i]);
    bb += std::norm(b.samples[i]);
  }
  return std::abs(ab) / std::sqrt(aa * bb);
}

PoissonCheck poisson_check(double a, double b, int truncation) {
  if (!(a > 0.0)) throw std::invalid_argument("poisson_check: a must be positive");
  if (truncation < 0) throw std::invalid_argument("poisson_check: truncation must be >= 0");
  PoissonCheck out;
  for (int m = -truncation; m <= truncation; ++m) out.lhs += std::exp(-kPi * a * (m - b) * (m - b));
  cplx r = 0.0;
  for (int s = -truncation; s <= truncation; ++s)
    r += std::exp(-kPi * s * s / a) * std::polar(1.0, 2.0 * kPi * s * b);
  out.rhs = r / std::sqrt(a);
  return out;
}

}  // namespace shiftcode
