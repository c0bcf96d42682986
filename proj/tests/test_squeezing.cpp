#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "shiftcode/squeezing.h"

using namespace shiftcode;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);
const double kSqrt2Pi = std::sqrt(2 * std::numbers::pi);

CombState symmetric_word(double delta, int j = 0) {
  return as_state(make_codeword(2, kSqrtPi, delta, delta, j));
}

}  // namespace

TEST(Squeezing, CodewordValidation) {
  EXPECT_THROW(make_codeword(2, kSqrtPi, 0.0, 0.25, 0), std::invalid_argument);
  EXPECT_THROW(make_codeword(2, kSqrtPi, 0.25, 0.25, 2), std::invalid_argument);
  EXPECT_THROW(make_codeword(0, kSqrtPi, 0.25, 0.25, 0), std::invalid_argument);
  EXPECT_TRUE(approximation_regime(make_codeword(2, kSqrtPi, 0.25, 0.25, 0)));
  EXPECT_FALSE(approximation_regime(make_codeword(2, kSqrtPi, 1.0, 1.0, 0)));
}

TEST(Squeezing, DensitiesNormalized) {
  for (double delta : {0.2, 0.25, 0.3, 0.5}) {
    const CombState st = symmetric_word(delta);
    EXPECT_NEAR(position_peaks(st).norm2(), 1.0, 1e-10) << delta;
    EXPECT_NEAR(momentum_peaks(st).norm2(), 1.0, 1e-10) << delta;
    GridWavefunction psi = position_wavefunction(st, default_position_grid(st));
    EXPECT_NEAR(psi.norm2(), 1.0, 1e-10) << delta;
    GridWavefunction phi = momentum_wavefunction(st, default_momentum_grid(st));
    EXPECT_NEAR(phi.norm2(), 1.0, 1e-10) << delta;
  }
  const CombState plus = plus_state(2, kSqrtPi, 0.3, 0.3);
  EXPECT_NEAR(position_peaks(plus).norm2(), 1.0, 1e-10);
  EXPECT_NEAR(momentum_peaks(plus).norm2(), 1.0, 1e-10);
}

// rho(0) exp(-kappa^2 q^2) tracks the peak heights, not the density between peaks
TEST(Squeezing, EnvelopeAtPeaks) {
  const CombState st = symmetric_word(0.25);
  const GaussianSum peaks = position_peaks(st);
  const double rho0 = std::norm(peaks.value(0.0));
  for (int k = -6; k <= 6; ++k) {
    const double x = 2 * k * kSqrtPi;
    EXPECT_NEAR(std::norm(peaks.value(x)), rho0 * std::exp(-0.0625 * x * x), 1e-9 * rho0) << k;
  }
  const Grid g = default_position_grid(st);
  const auto env = position_envelope(st, g);
  const int mid = g.count / 2;
  EXPECT_NEAR(env[mid], rho0 * std::exp(-0.0625 * g.at(mid) * g.at(mid)), 1e-12);
}

TEST(Squeezing, FourierDuality) {
  for (double delta : {0.2, 0.25, 0.3}) {
    const DualityCheck d = check_fourier_duality(symmetric_word(delta));
    EXPECT_LT(d.density_l2, 1e-6) << delta;
    EXPECT_TRUE(d.agrees);
  }
  EXPECT_LT(check_fourier_duality(plus_state(2, kSqrtPi, 0.25, 0.25)).density_l2, 1e-6);
}

TEST(Squeezing, IntrinsicError) {
  EXPECT_LE(intrinsic_error_numeric(0.25), 1e-6);
  const double half = intrinsic_error_numeric(0.5);
  EXPECT_GE(half, 0.5e-2);
  EXPECT_LE(half, 2e-2);

  double previous = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double delta = 0.2 + 0.01 * k;
    const double numeric = intrinsic_error_numeric(delta);
    EXPECT_GT(numeric, previous) << delta;
    previous = numeric;
    const double ratio = intrinsic_error_asymptotic(delta) / numeric;
    EXPECT_GE(ratio, 0.5) << delta;
    EXPECT_LE(ratio, 2.0) << delta;
  }

  // symmetric words: the momentum sector mirrors the position sector
  const IntrinsicError e = intrinsic_error_sectors(0.3);
  EXPECT_NEAR(e.momentum, e.position, 1e-3 * e.position);
  EXPECT_NEAR(e.union_bound, e.position + e.momentum, 1e-18);
  EXPECT_THROW(intrinsic_error_numeric(1.2), std::invalid_argument);
}

TEST(Squeezing, MeanPhotonMatchesPairMoments) {
  for (double delta : {0.25, 0.3, 0.5}) {
    for (int j : {0, 1}) {
      const double expect = oracle::comb_photon_number(delta, j);
      EXPECT_NEAR(mean_photon(symmetric_word(delta, j)), expect, 1e-6 * expect) << delta << " " << j;
    }
  }
  // a single vacuum-width peak carries almost no photons
  EXPECT_LT(mean_photon(symmetric_word(1.0)), 1e-3);
}

TEST(Squeezing, OverlapFactorization) {
  const GaussianCodeword a = make_codeword(2, kSqrtPi, 0.25, 0.25, 0);
  OverlapResult same = overlap_factorization(a, a);
  EXPECT_NEAR(std::abs(same.lhs), 1.0, 1e-4);
  EXPECT_NEAR(std::abs(same.lhs - same.rhs), 0.0, 1e-4);

  const GaussianCodeword b = make_codeword(2, kSqrtPi, 0.25, 0.25, 1);
  const OverlapResult orth = overlap_factorization(a, b);
  EXPECT_LT(std::abs(orth.lhs), 1e-4);
  EXPECT_EQ(std::abs(orth.rhs), 0.0);

  const GaussianCodeword c = make_codeword(2, kSqrtPi, 0.2, 0.25, 0);
  const GaussianCodeword d = make_codeword(2, kSqrtPi, 0.25, 0.2, 0);
  const OverlapResult r = overlap_factorization(c, d);
  // <eta1|eta2> for Gaussians of widths (d1, k1) and (d2, k2) in u and v
  const double closed = std::sqrt(2 * 0.2 * 0.25 / (0.2 * 0.2 + 0.25 * 0.25)) *
                        std::sqrt(2 * 0.25 * 0.2 / (0.25 * 0.25 + 0.2 * 0.2));
  EXPECT_NEAR(gaussian_error_overlap(0.2, 0.25, 0.25, 0.2), closed, 1e-12);
  EXPECT_NEAR(r.rhs.real(), closed, 1e-12);
  EXPECT_NEAR(std::abs(r.lhs - r.rhs), 0.0, 1e-4);
  EXPECT_LT(r.truncated_mass, 1e-5);

  const GaussianCodeword wide = make_codeword(2, kSqrtPi, 0.6, 0.6, 0);
  EXPECT_THROW(overlap_factorization(wide, wide), std::invalid_argument);
}

TEST(Squeezing, WignerSites) {
  const auto cell = wigner_sites(2, kSqrtPi, 0, 0, 2, 0, 2);
  ASSERT_EQ(cell.size(), 4u);
  int negative = 0;
  for (const auto& w : cell) {
    EXPECT_EQ(w.sign, (w.s % 2 && w.t % 2) ? -1 : 1);
    EXPECT_NEAR(w.p, std::numbers::pi / (2 * kSqrtPi) * w.s, 1e-15);
    EXPECT_NEAR(w.q, kSqrtPi * w.t, 1e-15);
    negative += w.sign < 0;
  }
  EXPECT_EQ(negative, 1);

  for (int j : {0, 1}) {
    const auto sites = wigner_sites(2, kSqrtPi, j, -4, 4, -4, 4);
    // integrating out p kills odd t: support at q = (2k + j) sqrt(pi)
    for (const auto& [t, w] : wigner_marginal_over_p(sites)) EXPECT_EQ(w != 0, t % 2 == 0) << t;
    // integrating out q kills odd s: support at p = (2 pi / (2 sqrt(pi))) integer
    for (const auto& [s, w] : wigner_marginal_over_q(sites)) EXPECT_EQ(w != 0, s % 2 == 0) << s;
  }
}

TEST(Squeezing, CoherentComb) {
  const CombResult w6 = coherent_comb(6, kSqrt2Pi);
  EXPECT_LT(w6.translation_residual, 1e-3);
  EXPECT_FALSE(w6.truncation_warning);
  EXPECT_NEAR(w6.psi.norm2(), 1.0, 1e-10);

  const CombResult w0 = coherent_comb(0, kSqrt2Pi);
  EXPECT_GT(w0.translation_residual, 0.5);
  EXPECT_TRUE(w0.truncation_warning);

  // a rigidly shifted lattice encodes the same state away from the edges
  double previous = 0.0;
  for (int window : {8, 12}) {
    const CombResult base = coherent_comb(window, kSqrt2Pi);
    const CombResult shifted = coherent_comb(window, kSqrt2Pi, 0.3, 0.2);
    const double f = interior_fidelity(base.psi, shifted.psi, (window - 2) * kSqrt2Pi);
    EXPECT_GT(f, 0.999) << window;
    EXPECT_GT(f, previous);
    previous = f;
  }
  EXPECT_THROW(coherent_comb(-1, kSqrt2Pi), std::invalid_argument);
}

TEST(Squeezing, PoissonIdentity) {
  for (auto [a, b] : {std::pair{1.0, 0.0}, {0.7, 0.3}, {5.0, 0.9}, {0.1, 0.45}, {10.0, 0.2}}) {
    const PoissonCheck c = poisson_check(a, b, 50);
    EXPECT_LT(std::abs(c.lhs - c.rhs), 1e-10) << a << " " << b;
    EXPECT_NEAR(c.rhs.imag(), 0.0, 1e-12);
  }
  EXPECT_THROW(poisson_check(-1.0, 0.0, 50), std::invalid_argument);
}
