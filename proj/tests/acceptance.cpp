// Acceptance checks, one line per criterion. Exit status is nonzero if a
// criterion fails that is not listed in kKnownUnattainable, or if a listed
// one starts passing (the list is then stale).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lattice_gen.h"
#include "oracles.h"
#include "shiftcode/capacity.h"
#include "shiftcode/channels.h"
#include "shiftcode/clifford_gates.h"
#include "shiftcode/decoder_mc.h"
#include "shiftcode/lattice.h"
#include "shiftcode/qudit_codes.h"
#include "shiftcode/squeezing.h"

using namespace shiftcode;

namespace {

const double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Mean photon number of the symmetric Delta = 0.25 word comes out near
// 7.5, not 15.5; the quadrature agrees with an independent pair-moment sum.
const std::set<int> kKnownUnattainable = {6};

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Verdict c1() {
  const auto t0 = Clock::now();
  const double s = threshold_sigma(ThresholdKind::square_css).sigma_star;
  const double t = seconds_since(t0);
  return {s >= 0.550 && s <= 0.560 && t < 1.0, fmt("sigma* = %.6f", s) + fmt(", %.3f s", t)};
}

Verdict c2() {
  const auto t0 = Clock::now();
  const double s = threshold_sigma(ThresholdKind::hex_stabilizer).sigma_star;
  const double t = seconds_since(t0);
  return {s >= 0.542 && s <= 0.552 && t < 10.0, fmt("sigma* = %.6f", s) + fmt(", %.3f s", t)};
}

Verdict c3() {
  const double pe = analytic_pe_square(0.555, kSqrtPi);
  return {std::abs(pe - 0.110) <= 0.001, fmt("pe = %.6f", pe)};
}

Verdict c4() {
  const double ratio = shortest_nonzero(build_hexagonal(2), Which::dual) /
                       shortest_nonzero(build_square(2, kSqrtPi), Which::dual);
  const std::string printed = fmt("%.5f", ratio);
  const bool ok = std::abs(ratio - std::sqrt(2.0 / std::sqrt(3.0))) < 1e-6 && printed == "1.07457";
  return {ok, "ratio = " + printed};
}

Verdict c5() {
  const double e25 = intrinsic_error_numeric(0.25), e50 = intrinsic_error_numeric(0.5);
  bool ok = e25 <= 1e-6 && e50 >= 0.5e-2 && e50 <= 2e-2;
  double lo = 1e9, hi = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double delta = 0.2 + 0.01 * k;
    const double r = intrinsic_error_asymptotic(delta) / intrinsic_error_numeric(delta);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  ok = ok && lo >= 0.5 && hi <= 2.0;
  return {ok, fmt("P(0.25) = %.3g", e25) + fmt(", P(0.5) = %.4g", e50) + fmt(", ratio in [%.3f, ", lo) +
                  fmt("%.3f]", hi)};
}

Verdict c6() {
  const auto t0 = Clock::now();
  const double n = mean_photon(as_state(make_codeword(2, kSqrtPi, 0.25, 0.25, 0)));
  const double t = seconds_since(t0);
  const double target = 1.0 / (0.25 * 0.25);
  const bool ok = std::abs(n + 0.5 - target) <= 0.1 * target && t < 1.0;
  return {ok, fmt("<n> = %.4f", n) + fmt(" (pair-moment oracle %.4f)", oracle::comb_photon_number(0.25, 0)) +
                  fmt(", target <n> + 1/2 = %.1f", target) + fmt(", %.3f s", t)};
}

Verdict c7() {
  const QuditCode c = make_code(2, 3, 3);
  bool ok = c.d == 18;
  double worst = 1.0;
  std::set<std::pair<int, int>> syndromes;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b) {
      const PauliLabel e = make_label(c, a, b);
      const DecodeOutcome o = decode(c, e);
      const OracleResult r = dense_oracle_roundtrip(c, e);
      worst = std::min(worst, r.fidelity);
      ok = ok && o.correctable;
      syndromes.insert({o.syndrome.s_amp, o.syndrome.s_phase});
    }
  ok = ok && worst >= 1.0 - 1e-12 && syndromes.size() == 9;
  int disagreements = 0;
  for (long a = 0; a < c.d; ++a)
    for (long b = 0; b < c.d; ++b) {
      const PauliLabel e = make_label(c, a, b);
      const DecodeOutcome o = decode(c, e);
      const OracleResult r = dense_oracle_roundtrip(c, e);
      if ((r.fidelity > 1.0 - 1e-12) != o.correctable || !(r.logical == o.logical) ||
          !(r.syndrome == o.syndrome))
        ++disagreements;
    }
  ok = ok && disagreements == 0;
  return {ok, fmt("min fidelity %.15f", worst) + ", " + std::to_string(syndromes.size()) +
                  " distinct syndromes, " + std::to_string(disagreements) + " scan disagreements"};
}

Verdict c8() {
  McConfig cfg;
  cfg.code = build_square(2, kSqrtPi);
  cfg.sigma = 0.3;
  cfg.trials = 1'000'000;
  cfg.seed = 20240601;
  cfg.workers = 4;
  const auto t0 = Clock::now();
  const McResult r = run_mc(cfg);
  const double t = seconds_since(t0);
  const double p = oracle::odd_multiple_mass(0.3, kSqrtPi);
  const double z = (r.x_rate.estimate - p) / r.x_rate.stderr_;
  return {std::abs(z) <= 3.0 && t < 30.0,
          fmt("x rate %.6f", r.x_rate.estimate) + fmt(" vs %.6f", p) + fmt(" (%.2f stderr)", z) +
              fmt(", %.2f s", t)};
}

Verdict c9() {
  double worst = 0.0;
  for (auto [a, b] : {std::pair{1.0, 0.0}, {0.7, 0.3}, {5.0, 0.9}}) {
    const PoissonCheck c = poisson_check(a, b, 50);
    worst = std::max(worst, std::abs(c.lhs - c.rhs));
  }
  return {worst < 1e-10, fmt("max |lhs - rhs| = %.3g", worst)};
}

Verdict c10() {
  double worst = 0.0;
  auto identity_error = [&](const LatticeCode& c) {
    const Matrix I = c.M_perp * symplectic_form(c.N) * c.M.transpose();
    worst = std::max(worst, (I - Matrix::Identity(2 * c.N, 2 * c.N)).cwiseAbs().maxCoeff());
  };
  Matrix Mq(2, 2), Mp(2, 2);
  Mq << 2, 0, 1, 3;
  Mp << 1, 0, 0, 1;
  for (const auto& c : {build_square(2, kSqrtPi), build_square(5, 0.9), build_hexagonal(2), build_hexagonal(7),
                        build_css(Mq, Mp), build_shor9()})
    identity_error(c);
  std::mt19937_64 gen(101);
  for (int k = 0; k < 100; ++k) {
    const int N = 1 + k % 3;
    identity_error(make_lattice(testgen::random_integral(N, gen) * testgen::random_symplectic(N, gen)));
  }
  bool dims = true;
  for (int n = 1; n <= 8; ++n) dims = dims && code_dimension(build_square(n, kSqrtPi)) == n;

  int unimodular_failures = 0;
  std::normal_distribution<double> nd(0.0, 0.6);
  for (int k = 0; k < 20; ++k) {
    const int N = 1 + k % 2;
    const LatticeCode a = make_lattice(testgen::random_integral(N, gen) * testgen::random_symplectic(N, gen));
    const LatticeCode b = make_lattice(testgen::random_unimodular(2 * N, gen).cast<double>() * a.M);
    bool ok = a.dimension() == b.dimension() &&
              std::abs(shortest_nonzero(a, Which::stabilizer) - shortest_nonzero(b, Which::stabilizer)) < 1e-9 &&
              std::abs(shortest_nonzero(a, Which::dual) - shortest_nonzero(b, Which::dual)) < 1e-9;
    Vector ref(2 * N);
    for (int i = 0; i < 2 * N; ++i) ref(i) = nd(gen);
    const ShiftDecode ra = decode_shift(a, ref), rb = decode_shift(b, ref);
    for (int t = 0; t < 10; ++t) {
      Vector s(2 * N);
      for (int i = 0; i < 2 * N; ++i) s(i) = nd(gen);
      const ShiftDecode da = decode_shift(a, s), db = decode_shift(b, s);
      ok = ok && (da.correction - db.correction).norm() < 1e-9 &&
           (da.logical == ra.logical) == (db.logical == rb.logical);
    }
    unimodular_failures += !ok;
  }
  return {worst < 1e-9 && dims && unimodular_failures == 0,
          fmt("max |M_perp w M^T - I| = %.3g", worst) + (dims ? ", dimensions ok" : ", dimension mismatch") +
              ", " + std::to_string(unimodular_failures) + " unimodular failures"};
}

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Verdict c11() {
  double worst = 0.0;
  auto check = [&](const AffineSymplectic& g) {
    const Matrix w = symplectic_form(g.N);
    worst = std::max(worst, (g.S * w * g.S.transpose() - w).cwiseAbs().maxCoeff());
  };
  for (int N = 1; N <= 3; ++N)
    for (int i = 0; i < N; ++i) {
      check(fourier_gate(i, N));
      check(phase_gate(i, 2, N));
      check(phase_gate(i, 3, N));
      check(squeeze_gate(i, 3.7, N));
      for (int j = 0; j < N; ++j)
        if (j != i) check(sum_gate(i, j, N));
    }
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<int> kind(0, 3), idx(0, 2), nn(1, 5);
  std::uniform_real_distribution<double> rr(0.2, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    AffineSymplectic g = identity_gate(3);
    for (int k = 0; k < 6; ++k) {
      const int a = idx(gen), b = (a + 1 + idx(gen) % 2) % 3;
      switch (kind(gen)) {
        case 0: g = compose(g, sum_gate(a, b, 3)); break;
        case 1: g = compose(g, fourier_gate(a, 3)); break;
        case 2: g = compose(g, phase_gate(a, nn(gen), 3)); break;
        default: g = compose(g, squeeze_gate(a, rr(gen), 3)); break;
      }
    }
    check(g);
  }

  // F: (u, v) -> (v, -u); SUM: (u1, v1; u2, v2) -> (u1, v1 + v2; u2 - u1, v2), the
  // latter realized by SUM^{-1} in the row convention
  const double u = 0.13, v = -0.07, u1 = 0.1, v1 = 0.2, u2 = -0.3, v2 = 0.05;
  const bool f_rule = (propagate_shift(fourier_gate(0, 1), vec({u, v})) - vec({v, -u})).norm() < 1e-15;
  const bool sum_rule = (propagate_shift(inverse(sum_gate(0, 1, 2)), vec({u1, u2, v1, v2})) -
                         vec({u1, u2 - u1, v1 + v2, v2}))
                            .norm() < 1e-15;
  bool squeeze_exact = true;
  for (double r : {0.125, 8.0, 27.0, 1000.0}) {
    const double amp = propagate_shift(squeeze_gate(0, r, 1), vec({1.0, 0.0}))(0);
    squeeze_exact = squeeze_exact && amp == std::cbrt(r);
  }
  return {worst < 1e-12 && f_rule && sum_rule && squeeze_exact,
          fmt("max |S w S^T - w| = %.3g", worst) + (f_rule ? ", F rule ok" : ", F rule wrong") +
              (sum_rule ? ", SUM rule ok" : ", SUM rule wrong") +
              (squeeze_exact ? ", squeeze r^(1/3) exact" : ", squeeze factor off")};
}

Verdict c12() {
  const Lambda2ZReport r = verify_lambda2z_circuit();
  bool shor = true;
  for (double e : r.shor_stabilizer) shor = shor && std::abs(e - 1.0) < 1e-12;
  return {r.distance < 1e-9 && r.lambda_p_distance < 1e-9 && shor,
          fmt("distance %.3g", r.distance) + fmt(", controlled-P %.3g", r.lambda_p_distance) +
              (shor ? ", Shor stabilizers +1" : ", Shor stabilizer mismatch")};
}

Verdict c13() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const std::vector<cplx> gammas = {cplx(0, 0), cplx(0.5, 0), cplx(1, 0), cplx(0, 0.7), cplx(-0.6, 0.6)};
  for (double theta : {kPi / 6, kPi / 3, kPi / 2, kPi})
    for (const cplx g : gammas) {
      const TraceResult t = number_basis_trace(theta, g, 256);
      worst = std::max(worst, std::abs(t.value - rotation_coefficient({theta}, g)));
    }
  const double t = seconds_since(t0);
  return {worst < 1e-4 && t < 20.0, fmt("max difference %.3g", worst) + fmt(", %.2f s", t)};
}

Verdict c14() {
  ConcatConfig cfg;
  cfg.pe = 0.01;
  cfg.trials = 1'000'000;
  cfg.seed = 14;
  const ConcatResult low = concat_mc(cfg);
  const double exact = oracle::steane_block_failure(0.01);
  const double z = (low.block_total - exact) / low.block_total_stderr;
  cfg.pe = 0.3;
  cfg.trials = 200000;
  const ConcatResult high = concat_mc(cfg);
  const bool ok = std::abs(z) <= 3.0 && low.block_total < low.unencoded_total && high.block_total > high.unencoded_total;
  return {ok, fmt("pe 0.01: block %.3g", low.block_total) + fmt(" vs exact %.3g", exact) +
                  fmt(" (%.2f stderr)", z) + fmt(" (unencoded %.3g)", low.unencoded_total) +
                  fmt("; pe 0.3: block %.3f", high.block_total) + fmt(" (unencoded %.3f)", high.unencoded_total)};
}

Verdict c15() {
  const DualityCheck d = check_fourier_duality(as_state(make_codeword(2, kSqrtPi, 0.25, 0.25, 0)));
  return {d.density_l2 < 1e-6, fmt("density L2 = %.3g", d.density_l2)};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {c1, c2, c3, c4,  c5,  c6,  c7, c8,
                                                          c9, c10, c11, c12, c13, c14, c15};
  int unexpected = 0, failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Verdict v;
    try {
      v = criteria[k]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const bool known = kKnownUnattainable.count(id) > 0;
    std::printf("criterion %d: %s  %s%s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                known ? "  [known unattainable]" : "");
    std::fflush(stdout);
    failed += !v.pass;
    if (v.pass == known) ++unexpected;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return unexpected == 0 ? 0 : 1;
}
