#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace shiftcode {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// omega = [[0, I], [-I, 0]] for coordinates ordered (q_1..q_N, p_1..p_N).
Matrix symplectic_form(int N);

// A = M omega M^T, rounded. Throws if any entry is more than 1e-9 from an integer.
IntMatrix gram(const Matrix& M);

// R A R^T = [[0, D], [-D, 0]] with R unimodular and d_1 | d_2 | ... | d_N.
struct SkewStandardForm {
  IntMatrix R;
  IntVector D;
};

SkewStandardForm skew_standardize(const IntMatrix& A);

// LLL-reduced rows: basis = transform * original, transform unimodular.
struct ReducedBasis {
  Matrix basis;
  IntMatrix transform;
};

ReducedBasis lll_reduce(const Matrix& B);

// Rows of M are lattice generators in units of sqrt(2 pi); the physical
// displacement of row a is sqrt(2 pi) * M.row(a).
struct LatticeCode {
  int N = 0;
  Matrix M;
  IntMatrix A;
  SkewStandardForm standard;
  Matrix M_perp;
  ReducedBasis perp_reduced;  // enumeration basis for decoding
  bool shift_protected = true;
  std::string descriptor;

  long long dimension() const;
};

LatticeCode make_lattice(const Matrix& M, std::string descriptor = "custom",
                         bool shift_protected = true);

long long code_dimension(const LatticeCode& code);
Matrix dual(const LatticeCode& code);

LatticeCode build_square(int n, double alpha);
LatticeCode build_hexagonal(int n);
LatticeCode build_css(const Matrix& Mq, const Matrix& Mp);
// Continuous nine-oscillator Shor code: eight stabilizer rows and the logical
// pair, padded to full rank with unit vectors. Not shift-distance protected.
LatticeCode build_shor9();

enum class Which { stabilizer, dual };

inline constexpr long long kMaxEnumeration = 20'000'000;

double shortest_nonzero(const LatticeCode& code, Which which);

// Coset of a dual-lattice point in L_perp / L. Entries are the coordinates
// c' = c R^T reduced mod (d_1..d_N, d_1..d_N).
struct LogicalCoset {
  IntVector c;
  bool is_identity() const { return c.isZero(); }
  bool operator==(const LogicalCoset& o) const { return c == o.c; }
};

struct LogicalPowers {
  std::vector<long long> x;  // power of logical X_i, mod d_i
  std::vector<long long> z;
};

struct ShiftDecode {
  Vector correction;   // nearest dual point, physical units
  Vector residual;     // shift - correction
  IntVector coords;    // integer coordinates of the correction in the M_perp basis
  LogicalCoset logical;
};

LogicalCoset coset_of(const LatticeCode& code, const IntVector& dual_coords);
LogicalPowers logical_powers(const LatticeCode& code, const LogicalCoset& coset);

// Exact nearest dual point: every integer vector whose coordinates could beat
// the rounded real solve is enumerated. Ties go to the lexicographically
// smaller integer coordinates. Throws past kMaxEnumeration candidates.
ShiftDecode decode_shift(const LatticeCode& code, const Vector& shift);

// S = M1^{-1} M2 for two symplectic (self-dual, normalized) bases.
Matrix encoder_transform(const Matrix& M1, const Matrix& M2);

bool is_symplectic(const Matrix& S, double tol = 1e-9);

// Lattice file format: {"N": int, "M": [[...], ...]}
LatticeCode lattice_from_json(const std::string& text);
std::string lattice_to_json(const LatticeCode& code);

}  // namespace shiftcode
