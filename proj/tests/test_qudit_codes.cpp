#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "shiftcode/qudit_codes.h"

using namespace shiftcode;

TEST(QuditCode, Construction) {
  const QuditCode c = make_code(2, 3, 3);
  EXPECT_EQ(c.d, 18);
  EXPECT_EQ(c.stabilizer_x_power(), 6);
  EXPECT_EQ(c.stabilizer_z_power(), 6);

  EXPECT_EQ(make_code(1, 1, 1).d, 1);

  const QuditCode c2 = make_code(3, 2, 4);
  EXPECT_EQ(c2.d, 24);
  EXPECT_EQ(c2.logical_x_power(), 2);
  EXPECT_EQ(c2.logical_z_power(), 4);

  EXPECT_THROW(make_code(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_code(2, -1, 3), std::invalid_argument);
}

TEST(QuditCode, CenteredMod) {
  EXPECT_EQ(centered_mod(2, 3), -1);
  EXPECT_EQ(centered_mod(1, 2), 1);  // exact half goes to +m/2
  EXPECT_EQ(centered_mod(-1, 2), 1);
  EXPECT_EQ(centered_mod(9, 18), 9);
  EXPECT_EQ(centered_mod(10, 18), -8);
  EXPECT_EQ(positive_mod(-1, 3), 2);
}

TEST(QuditCode, CodewordSupport) {
  const QuditCode c = make_code(2, 3, 3);
  EXPECT_EQ(codeword_support(c, 0), (std::vector<int>{0, 6, 12}));
  EXPECT_EQ(codeword_support(c, 1), (std::vector<int>{3, 9, 15}));
  EXPECT_EQ(codeword_support(make_code(1, 1, 1), 0), (std::vector<int>{0}));
  EXPECT_THROW(codeword_support(c, 2), std::invalid_argument);
}

TEST(QuditCode, DecodeExamples) {
  const QuditCode c = make_code(2, 3, 3);
  DecodeOutcome o = decode(c, make_label(c, 1, -1));
  EXPECT_EQ(o.syndrome, (QuditSyndrome{1, 2}));
  EXPECT_EQ(o.correction.a, 1);
  EXPECT_EQ(o.correction.b, -1);
  EXPECT_TRUE(o.correctable);

  o = decode(c, make_label(c, 0, 0));
  EXPECT_EQ(o.syndrome, (QuditSyndrome{0, 0}));
  EXPECT_TRUE(o.correctable);

  o = decode(c, make_label(c, 3, 0));
  EXPECT_FALSE(o.correctable);
  EXPECT_EQ(o.logical, (LogicalLabel{1, 0}));
}

TEST(QuditCode, CommutationPhase) {
  const QuditCode c = make_code(2, 3, 3);
  // X^3 Z^3 is the logical pair, which commutes with both stabilizers.
  CommutationPhase ph = commutation_phase(c, make_label(c, 3, 3));
  EXPECT_TRUE(ph.trivial());

  EXPECT_TRUE(commutation_phase(c, make_label(c, 0, 0)).trivial());

  ph = commutation_phase(c, make_label(c, 1, 0));
  EXPECT_EQ(ph.with_x_stabilizer, (Rational{0, 1}));
  EXPECT_EQ(ph.with_z_stabilizer, (Rational{2, 3}));
}

// Direct evaluation of w^{r1 n b} and w^{-r2 n a}, w = e^{2 pi i / d}.
TEST(QuditCode, CommutationPhaseMatchesRootsOfUnity) {
  const QuditCode c = make_code(2, 3, 3);
  for (long a = -8; a <= 9; ++a)
    for (long b = -8; b <= 9; ++b) {
      const CommutationPhase ph = commutation_phase(c, make_label(c, a, b));
      const double fx = std::fmod(static_cast<double>(c.stabilizer_x_power() * b) / c.d + 10.0, 1.0);
      const double fz = std::fmod(static_cast<double>(-c.stabilizer_z_power() * a) / c.d + 10.0, 1.0);
      EXPECT_NEAR(ph.with_x_stabilizer.value(), fx, 1e-12);
      EXPECT_NEAR(ph.with_z_stabilizer.value(), fz, 1e-12);
    }
}

TEST(QuditCode, DenseOracleExamples) {
  const QuditCode c = make_code(2, 3, 3);
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      EXPECT_NEAR(dense_oracle_roundtrip(c, make_label(c, a, b)).fidelity, 1.0, 1e-12);

  const OracleResult flip = dense_oracle_roundtrip(c, make_label(c, 2, 0));
  EXPECT_NEAR(flip.fidelity, 0.0, 1e-12);
  EXPECT_NEAR(flip.logical_fidelity, 1.0, 1e-12);
  EXPECT_EQ(flip.logical, (LogicalLabel{1, 0}));

  EXPECT_THROW(dense_oracle_roundtrip(make_code(2, 12, 12), PauliLabel{}), std::invalid_argument);
}

TEST(QuditCode, OracleSeesLogicalPhase) {
  const QuditCode c = make_code(2, 3, 3);
  const OracleResult o = dense_oracle_roundtrip(c, make_label(c, 0, 3));
  EXPECT_LT(o.fidelity, 1e-12);
  EXPECT_EQ(o.logical, (LogicalLabel{0, 1}));
}

TEST(QuditCode, PerfectCodeSyndromesInjective) {
  for (auto [n, r1, r2] : {std::tuple{2, 3, 3}, {3, 5, 3}, {2, 5, 5}, {4, 1, 3}}) {
    const QuditCode c = make_code(n, r1, r2);
    std::set<std::pair<int, int>> seen;
    for (long a = -(r1 - 1) / 2; a <= (r1 - 1) / 2; ++a)
      for (long b = -(r2 - 1) / 2; b <= (r2 - 1) / 2; ++b) {
        const DecodeOutcome o = decode(c, make_label(c, a, b));
        EXPECT_TRUE(o.correctable);
        EXPECT_TRUE(seen.insert({o.syndrome.s_amp, o.syndrome.s_phase}).second);
      }
    EXPECT_EQ(static_cast<int>(seen.size()), r1 * r2);
  }
}

// Every factorization d = n r1 r2 with d <= 64 and n <= 8; the n^2 Gram
// matrix makes larger n slow without adding new cases.
TEST(QuditCode, OracleAgreesWithDecodeExhaustively) {
  for (int d = 1; d <= 64; ++d)
    for (int n = 1; n <= std::min(d, 8); ++n) {
      if (d % n) continue;
      for (int r1 = 1; r1 <= d / n; ++r1) {
        if ((d / n) % r1) continue;
        const QuditCode c = make_code(n, r1, d / n / r1);
        for (long a = 0; a < d; ++a)
          for (long b = 0; b < d; ++b) {
            const PauliLabel e = make_label(c, a, b);
            const DecodeOutcome o = decode(c, e);
            const OracleResult r = dense_oracle_roundtrip(c, e);
            ASSERT_EQ(r.fidelity > 1.0 - 1e-12, o.correctable)
                << "n=" << n << " r1=" << r1 << " a=" << a << " b=" << b;
            ASSERT_EQ(r.logical, o.logical) << "n=" << n << " r1=" << r1 << " a=" << a << " b=" << b;
            ASSERT_EQ(r.syndrome, o.syndrome);
          }
      }
    }
}

TEST(QuditCode, TrivialPhaseIffStabilizerEquivalent) {
  const QuditCode c = make_code(2, 3, 3);
  for (long a = 0; a < c.d; ++a)
    for (long b = 0; b < c.d; ++b) {
      const PauliLabel e = make_label(c, a, b);
      // an element of the normalizer has trivial syndrome
      EXPECT_EQ(commutation_phase(c, e).trivial(), decode(c, e).syndrome == QuditSyndrome{});
    }
}

TEST(QuditCode, DecodeIsIdempotent) {
  const QuditCode c = make_code(3, 3, 5);
  for (long a = 0; a < c.d; ++a)
    for (long b = 0; b < c.d; b += 3) {
      const DecodeOutcome o = decode(c, make_label(c, a, b));
      const PauliLabel residual = make_label(c, a - o.correction.a, b - o.correction.b);
      const DecodeOutcome again = decode(c, residual);
      EXPECT_EQ(again.syndrome, QuditSyndrome{});
      EXPECT_EQ(again.logical, o.logical);
    }
}

TEST(Rotor, Decode) {
  const RotorCode r = make_rotor(4, 2);
  EXPECT_DOUBLE_EQ(r.theta_radius(), std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(r.l_radius(), 1.0);
  EXPECT_TRUE(rotor_decode(r, 0.1, 0).correctable);
  EXPECT_TRUE(rotor_decode(r, 0.0, 0).correctable);
  const RotorOutcome bad = rotor_decode(r, std::numbers::pi / 4 + 0.01, 0);
  EXPECT_FALSE(bad.correctable);
  EXPECT_EQ(bad.theta_class, 1);
  EXPECT_EQ(bad.l_class, 0);
  // |dL| = m/(2n) sits on the boundary: class from the lower representative,
  // but not inside the strict radius
  const RotorOutcome tie = rotor_decode(r, 0.0, 1);
  EXPECT_FALSE(tie.correctable);
  EXPECT_EQ(tie.l_class, 0);
  const RotorOutcome logical_l = rotor_decode(r, 0.0, 2);
  EXPECT_FALSE(logical_l.correctable);
  EXPECT_EQ(logical_l.l_class, 1);
  EXPECT_THROW(rotor_decode(r, 0.0, 0.5), std::invalid_argument);
}
