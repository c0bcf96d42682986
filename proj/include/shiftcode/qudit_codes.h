#pragma once

#include <cstdint>
#include <vector>

namespace shiftcode {

// Shift code on a d-level system with d = n * r1 * r2. Stabilizer generators
// are X^{r1 n} and Z^{r2 n}; logical operators are X^{r1} and Z^{r2}.
struct QuditCode {
  int n = 1;
  int r1 = 1;
  int r2 = 1;
  int d = 1;

  int logical_x_power() const { return r1; }
  int logical_z_power() const { return r2; }
  int stabilizer_x_power() const { return r1 * n; }
  int stabilizer_z_power() const { return r2 * n; }
};

QuditCode make_code(int n, int r1, int r2);

// Representative of x mod m in (-m/2, m/2]. An exact half goes to +m/2,
// which is the same as rounding x/m to the lower multiple.
long centered_mod(long x, long m);
// Representative in [0, m).
long positive_mod(long x, long m);

// X^a Z^b acting as |k> -> w^{b k} |k + a>, w = exp(2 pi i / d).
struct PauliLabel {
  long a = 0;
  long b = 0;
};

PauliLabel make_label(const QuditCode& code, long a, long b);

struct QuditSyndrome {
  int s_amp = 0;    // a mod r1
  int s_phase = 0;  // b mod r2
  bool operator==(const QuditSyndrome&) const = default;
};

struct LogicalLabel {
  int x = 0;  // power of logical X, mod n
  int z = 0;  // power of logical Z, mod n
  bool is_identity() const { return x == 0 && z == 0; }
  bool operator==(const LogicalLabel&) const = default;
};

struct DecodeOutcome {
  QuditSyndrome syndrome;
  PauliLabel correction;
  LogicalLabel logical;
  bool correctable = false;
};

std::vector<int> codeword_support(const QuditCode& code, int j);
QuditSyndrome syndrome_of(const QuditCode& code, const PauliLabel& error);
DecodeOutcome decode(const QuditCode& code, const PauliLabel& error);

// Non-negative reduced fraction num/den in [0, 1).
struct Rational {
  long num = 0;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(long num, long den);

// Phases picked up by the error against X^{r1 n} and Z^{r2 n}, in units of
// 2 pi: (b / r2 mod 1, -a / r1 mod 1).
struct CommutationPhase {
  Rational with_x_stabilizer;
  Rational with_z_stabilizer;
  bool trivial() const { return with_x_stabilizer.is_zero() && with_z_stabilizer.is_zero(); }
};

CommutationPhase commutation_phase(const QuditCode& code, const PauliLabel& error);

// Result of the dense state-vector round trip.
struct OracleResult {
  double fidelity = 0.0;          // min |<psi|R E|psi>| over the words and their pairwise
                                  // equal superpositions; 1 iff R E acts as the identity
  double logical_fidelity = 0.0;  // min_j |<j+x|R E|j>|, against the words the recovered
                                  // operator maps onto
  QuditSyndrome syndrome;         // read off stabilizer eigenvalues
  LogicalLabel logical;           // logical Pauli extracted from the matrix elements
};

inline constexpr int kDenseOracleMaxDim = 256;

OracleResult dense_oracle_roundtrip(const QuditCode& code, const PauliLabel& error);

// Rotor (angle theta, integer angular momentum L) with theta spacing 2 pi / m
// and L spacing m / n.
struct RotorCode {
  int m = 1;
  int n = 1;
  double theta_radius() const;  // pi / m
  double l_radius() const;      // m / (2 n)
};

RotorCode make_rotor(int m, int n);

struct RotorOutcome {
  bool correctable = false;
  int theta_class = 0;  // net shift of theta in units of 2 pi / m, mod n
  int l_class = 0;      // net shift of L in units of m / n, mod n
};

RotorOutcome rotor_decode(const RotorCode& code, double dtheta, double dl);

}  // namespace shiftcode
