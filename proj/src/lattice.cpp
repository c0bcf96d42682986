#include "shiftcode/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace shiftcode {

namespace {

constexpr double kIntegralTol = 1e-9;
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Congruence operations on B, mirrored on the rows of R so that
// R A R^T == B holds throughout.
struct Congruence {
  IntMatrix B;
  IntMatrix R;

  void swap(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    B.row(i).swap(B.row(j));
    B.col(i).swap(B.col(j));
    R.row(i).swap(R.row(j));
  }
  // row_i += q row_j, col_i += q col_j
  void addmul(Eigen::Index i, Eigen::Index j, long long q) {
    if (q == 0) return;
    B.row(i) += q * B.row(j);
    B.col(i) += q * B.col(j);
    R.row(i) += q * R.row(j);
  }
  void negate(Eigen::Index i) {
    B.row(i) *= -1;
    B.col(i) *= -1;
    R.row(i) *= -1;
  }
};

}  // namespace

// Textbook LLL (delta = 3/4) on the rows of B; Gram-Schmidt is recomputed
// after every change, which is fine for the dimensions enumerated here.
ReducedBasis lll_reduce(const Matrix& B) {
  const Eigen::Index n = B.rows();
  ReducedBasis out{B, IntMatrix::Identity(n, n)};
  Matrix& b = out.basis;
  auto gram_schmidt = [&](Matrix& bs, Matrix& mu) {
    bs = b;
    mu = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < i; ++j) {
        mu(i, j) = b.row(i).dot(bs.row(j)) / bs.row(j).squaredNorm();
        bs.row(i) -= mu(i, j) * bs.row(j);
      }
  };
  Matrix bs, mu;
  gram_schmidt(bs, mu);
  Eigen::Index k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw std::runtime_error("lll_reduce: no convergence");
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const long long q = std::llround(mu(k, j));
      if (q == 0) continue;
      b.row(k) -= static_cast<double>(q) * b.row(j);
      out.transform.row(k) -= q * out.transform.row(j);
      gram_schmidt(bs, mu);
    }
    if (bs.row(k).squaredNorm() >= (0.75 - mu(k, k - 1) * mu(k, k - 1)) * bs.row(k - 1).squaredNorm()) {
      ++k;
    } else {
      b.row(k).swap(b.row(k - 1));
      out.transform.row(k).swap(out.transform.row(k - 1));
      gram_schmidt(bs, mu);
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return out;
}

Matrix symplectic_form(int N) {
  Matrix w = Matrix::Zero(2 * N, 2 * N);
  w.topRightCorner(N, N) = Matrix::Identity(N, N);
  w.bottomLeftCorner(N, N) = -Matrix::Identity(N, N);
  return w;
}

IntMatrix gram(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0) {
    throw std::invalid_argument("gram: generator matrix must be square with even dimension");
  }
  const int N = static_cast<int>(M.rows() / 2);
  const Matrix Ar = M * symplectic_form(N) * M.transpose();
  IntMatrix A(Ar.rows(), Ar.cols());
  for (Eigen::Index i = 0; i < Ar.rows(); ++i) {
    for (Eigen::Index j = 0; j < Ar.cols(); ++j) {
      const double r = std::round(Ar(i, j));
      if (std::abs(Ar(i, j) - r) > kIntegralTol) {
        throw std::invalid_argument("not a valid stabilizer lattice: Gram entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ") = " +
                                    std::to_string(Ar(i, j)) + " is not an integer");
      }
      A(i, j) = static_cast<long long>(r);
    }
  }
  return A;
}

SkewStandardForm skew_standardize(const IntMatrix& A) {
  const Eigen::Index dim = A.rows();
  if (A.cols() != dim || dim % 2 != 0 || dim == 0) {
    throw std::invalid_argument("skew_standardize: matrix must be square with even dimension");
  }
  if ((A + A.transpose()).any()) {
    throw std::invalid_argument("skew_standardize: matrix is not antisymmetric");
  }
  const Eigen::Index N = dim / 2;
  Congruence w{A, IntMatrix::Identity(dim, dim)};

  for (Eigen::Index k = 0; k < N; ++k) {
    const Eigen::Index a = 2 * k, b = 2 * k + 1;
    while (true) {
      // smallest nonzero entry of the active block becomes the pivot
      Eigen::Index pi = -1, pj = -1;
      long long best = std::numeric_limits<long long>::max();
      for (Eigen::Index i = a; i < dim; ++i)
        for (Eigen::Index j = i + 1; j < dim; ++j)
          if (w.B(i, j) != 0 && std::llabs(w.B(i, j)) < best) {
            best = std::llabs(w.B(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) throw std::invalid_argument("skew_standardize: matrix is singular");
      w.swap(a, pi);
      if (pj == a) pj = pi;
      w.swap(b, pj);
      if (w.B(a, b) < 0) w.negate(b);
      const long long p = w.B(a, b);

      bool clean = true;
      for (Eigen::Index t = b + 1; t < dim; ++t) {
        w.addmul(t, b, -floor_div(w.B(a, t), p));
        w.addmul(t, a, floor_div(w.B(b, t), p));
        if (w.B(a, t) != 0 || w.B(b, t) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull any entry not divisible by p into the pivot row
      bool divides = true;
      for (Eigen::Index s = b + 1; s < dim && divides; ++s)
        for (Eigen::Index t = s + 1; t < dim; ++t)
          if (w.B(s, t) % p != 0) {
            w.addmul(a, s, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  // (q1 p1 q2 p2 ...) pair order to (q1 q2 ... p1 p2 ...) block order
  SkewStandardForm out;
  out.R.resize(dim, dim);
  out.D.resize(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    out.R.row(k) = w.R.row(2 * k);
    out.R.row(N + k) = w.R.row(2 * k + 1);
    out.D(k) = w.B(2 * k, 2 * k + 1);
  }
  return out;
}

long long LatticeCode::dimension() const {
  long long n = 1;
  for (Eigen::Index i = 0; i < standard.D.size(); ++i) n *= standard.D(i);
  return n;
}

LatticeCode make_lattice(const Matrix& M, std::string descriptor, bool shift_protected) {
  LatticeCode c;
  c.A = gram(M);
  c.N = static_cast<int>(M.rows() / 2);
  c.M = M;
  Eigen::FullPivLU<Matrix> lu(M);
  if (!lu.isInvertible()) throw std::invalid_argument("make_lattice: generator matrix is singular");
  c.standard = skew_standardize(c.A);
  c.M_perp = c.A.cast<double>().inverse() * M;
  c.perp_reduced = lll_reduce(c.M_perp);
  c.shift_protected = shift_protected;
  c.descriptor = std::move(descriptor);
  return c;
}

long long code_dimension(const LatticeCode& code) { return code.dimension(); }

Matrix dual(const LatticeCode& code) { return code.M_perp; }

LatticeCode build_square(int n, double alpha) {
  if (n < 1 || !(alpha > 0.0)) throw std::invalid_argument("build_square: need n >= 1, alpha > 0");
  Matrix M = Matrix::Zero(2, 2);
  M(0, 0) = n * alpha / kSqrt2Pi;
  M(1, 1) = 2.0 * std::numbers::pi / alpha / kSqrt2Pi;
  return make_lattice(M, "square(n=" + std::to_string(n) + ",alpha=" + std::to_string(alpha) + ")");
}

LatticeCode build_hexagonal(int n) {
  if (n < 1) throw std::invalid_argument("build_hexagonal: need n >= 1");
  const double s = std::sqrt(2.0 * n / std::sqrt(3.0));
  Matrix M(2, 2);
  M << s, 0.0, 0.5 * s, 0.5 * std::sqrt(3.0) * s;
  return make_lattice(M, "hexagonal(n=" + std::to_string(n) + ")");
}

LatticeCode build_css(const Matrix& Mq, const Matrix& Mp) {
  if (Mq.rows() != Mq.cols() || Mp.rows() != Mp.cols() || Mq.rows() != Mp.rows()) {
    throw std::invalid_argument("build_css: Mq and Mp must be square of equal size");
  }
  const Matrix pairing = Mq * Mp.transpose();
  if ((pairing.array() - pairing.array().round()).abs().maxCoeff() > kIntegralTol) {
    throw std::invalid_argument("build_css: Mq Mp^T is not integral");
  }
  const Eigen::Index N = Mq.rows();
  Matrix M = Matrix::Zero(2 * N, 2 * N);
  M.topLeftCorner(N, N) = Mq;
  M.bottomRightCorner(N, N) = Mp;
  return make_lattice(M, "css(N=" + std::to_string(N) + ")");
}

LatticeCode build_shor9() {
  constexpr int N = 9;
  std::vector<Vector> rows;
  auto q = [](int i) { return i; };
  auto p = [](int i) { return N + i; };
  for (int blk = 0; blk < 3; ++blk)
    for (int k = 0; k < 2; ++k) {
      Vector v = Vector::Zero(2 * N);
      v(q(3 * blk + k)) = 1.0;
      v(q(3 * blk + k + 1)) = -1.0;
      rows.push_back(v);
    }
  for (int blk = 0; blk < 2; ++blk) {
    Vector v = Vector::Zero(2 * N);
    for (int k = 0; k < 3; ++k) {
      v(p(3 * blk + k)) = 1.0;
      v(p(3 * blk + 3 + k)) = -1.0;
    }
    rows.push_back(v);
  }
  Vector qbar = Vector::Zero(2 * N), pbar = Vector::Zero(2 * N);
  qbar(q(0)) = qbar(q(3)) = qbar(q(6)) = 1.0;
  pbar(p(0)) = pbar(p(1)) = pbar(p(2)) = 1.0;
  rows.push_back(qbar);
  rows.push_back(pbar);

  // greedy completion with unit vectors
  auto rank_of = [](const std::vector<Vector>& rs) {
    Matrix m(rs.size(), rs.front().size());
    for (std::size_t i = 0; i < rs.size(); ++i) m.row(i) = rs[i].transpose();
    return Eigen::FullPivLU<Matrix>(m).rank();
  };
  for (int e = 0; e < 2 * N && static_cast<int>(rows.size()) < 2 * N; ++e) {
    Vector u = Vector::Zero(2 * N);
    u(e) = 1.0;
    rows.push_back(u);
    if (rank_of(rows) < static_cast<Eigen::Index>(rows.size())) rows.pop_back();
  }
  Matrix M(2 * N, 2 * N);
  for (int i = 0; i < 2 * N; ++i) M.row(i) = rows[i].transpose();
  return make_lattice(M, "shor9", false);
}

double shortest_nonzero(const LatticeCode& code, Which which) {
  if (code.N > 4) throw std::invalid_argument("shortest_nonzero: enumeration bound exceeded (N > 4)");
  const ReducedBasis red = which == Which::stabilizer ? lll_reduce(code.M) : code.perp_reduced;
  const Matrix& B = red.basis;
  const Eigen::Index dim = B.rows();
  double bound = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dim; ++i) bound = std::min(bound, B.row(i).norm());
  // any v = c B with |v| <= bound has |c_i| <= bound * |column i of B^{-1}|
  const Matrix Binv = B.inverse();
  std::vector<long long> lim(dim);
  long long total = 1;
  for (Eigen::Index i = 0; i < dim; ++i) {
    lim[i] = static_cast<long long>(std::floor(bound * Binv.col(i).norm() + 1e-9));
    total *= 2 * lim[i] + 1;
    if (total > kMaxEnumeration) {
      throw std::invalid_argument("shortest_nonzero: enumeration bound exceeded");
    }
  }
  std::vector<long long> c(dim);
  for (Eigen::Index i = 0; i < dim; ++i) c[i] = -lim[i];
  double best = bound;
  Vector v(B.cols());
  while (true) {
    bool zero = true;
    v.setZero();
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (c[i] != 0) {
        zero = false;
        v += static_cast<double>(c[i]) * B.row(i).transpose();
      }
    }
    if (!zero) best = std::min(best, v.norm());
    Eigen::Index i = dim - 1;
    while (i >= 0 && c[i] == lim[i]) c[i] = -lim[i], --i;
    if (i < 0) break;
    ++c[i];
  }
  return best;
}

LogicalCoset coset_of(const LatticeCode& code, const IntVector& dual_coords) {
  const IntVector cp = code.standard.R * dual_coords;
  const Eigen::Index N = code.N;
  LogicalCoset out{IntVector(2 * N)};
  for (Eigen::Index i = 0; i < N; ++i) {
    const long long d = code.standard.D(i);
    out.c(i) = ((cp(i) % d) + d) % d;
    out.c(N + i) = ((cp(N + i) % d) + d) % d;
  }
  return out;
}

LogicalPowers logical_powers(const LatticeCode& code, const LogicalCoset& coset) {
  LogicalPowers out;
  for (int i = 0; i < code.N; ++i) {
    const long long d = code.standard.D(i);
    out.x.push_back(coset.c(code.N + i) % d);
    out.z.push_back(((-coset.c(i)) % d + d) % d);
  }
  return out;
}

ShiftDecode decode_shift(const LatticeCode& code, const Vector& shift) {
  // enumerate in the reduced basis B = T M_perp, report coordinates in M_perp
  const Matrix& B = code.perp_reduced.basis;
  const IntMatrix& T = code.perp_reduced.transform;
  const Eigen::Index dim = B.rows();
  if (shift.size() != dim) throw std::invalid_argument("decode_shift: shift has wrong dimension");
  const Vector w = shift / kSqrt2Pi;
  // real coordinates t with t^T B = w^T
  const Matrix Binv = B.inverse();
  const Vector t = Binv.transpose() * w;
  IntVector cr(dim);
  for (Eigen::Index i = 0; i < dim; ++i) cr(i) = std::llround(t(i));
  const double r2 = (w - B.transpose() * cr.cast<double>()).squaredNorm();

  // Any c at least as close as the rounded point has
  // |c_i - t_i| <= |c B - w| |column i of B^{-1}|.
  const double r = std::sqrt(r2) * (1.0 + 1e-9) + 1e-12;
  std::vector<long long> lo(dim), hi(dim), c(dim);
  long long total = 1;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double g = r * Binv.col(i).norm();
    lo[i] = static_cast<long long>(std::ceil(t(i) - g));
    hi[i] = static_cast<long long>(std::floor(t(i) + g));
    total *= hi[i] - lo[i] + 1;
    if (total > kMaxEnumeration) throw std::invalid_argument("decode_shift: enumeration bound exceeded");
  }
  double best = std::numeric_limits<double>::infinity();
  IntVector best_c(dim), cand(dim), orig(dim);
  c = lo;
  Vector p(dim);
  while (true) {
    p = w;
    for (Eigen::Index i = 0; i < dim; ++i) p -= static_cast<double>(c[i]) * B.row(i).transpose();
    const double d2 = p.squaredNorm();
    if (d2 <= best + 1e-12) {
      for (Eigen::Index i = 0; i < dim; ++i) cand(i) = c[i];
      orig = T.transpose() * cand;
      const bool better = d2 < best - 1e-12 ||
                          std::lexicographical_compare(orig.data(), orig.data() + dim,
                                                       best_c.data(), best_c.data() + dim);
      if (better) {
        best = std::min(best, d2);
        best_c = orig;
      }
    }
    Eigen::Index i = dim - 1;
    while (i >= 0 && c[i] == hi[i]) c[i] = lo[i], --i;
    if (i < 0) break;
    ++c[i];
  }

  ShiftDecode out;
  out.coords = best_c;
  out.correction = kSqrt2Pi * (code.M_perp.transpose() * best_c.cast<double>());
  out.residual = shift - out.correction;
  out.logical = coset_of(code, best_c);
  return out;
}

bool is_symplectic(const Matrix& S, double tol) {
  if (S.rows() != S.cols() || S.rows() % 2 != 0) return false;
  const Matrix w = symplectic_form(static_cast<int>(S.rows() / 2));
  return (S * w * S.transpose() - w).cwiseAbs().maxCoeff() <= tol;
}

Matrix encoder_transform(const Matrix& M1, const Matrix& M2) {
  if (M1.rows() != M2.rows() || M1.cols() != M2.cols()) {
    throw std::invalid_argument("encoder_transform: generator matrices differ in shape");
  }
  if (!is_symplectic(M1) || !is_symplectic(M2)) {
    throw std::invalid_argument(
        "encoder_transform: inputs must be self-dual bases normalized to M omega M^T = omega");
  }
  return M1.inverse() * M2;
}

LatticeCode lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("lattice file: ") + e.what());
  }
  if (!j.contains("N") || !j.contains("M")) {
    throw std::invalid_argument("lattice file: expected keys \"N\" and \"M\"");
  }
  const int N = j.at("N").get<int>();
  const auto rows = j.at("M").get<std::vector<std::vector<double>>>();
  if (N < 1 || static_cast<int>(rows.size()) != 2 * N) {
    throw std::invalid_argument("lattice file: M must have 2N rows");
  }
  Matrix M(2 * N, 2 * N);
  for (int i = 0; i < 2 * N; ++i) {
    if (static_cast<int>(rows[i].size()) != 2 * N) {
      throw std::invalid_argument("lattice file: row " + std::to_string(i) + " has wrong length");
    }
    for (int k = 0; k < 2 * N; ++k) M(i, k) = rows[i][k];
  }
  return make_lattice(M, "file");
}

std::string lattice_to_json(const LatticeCode& code) {
  nlohmann::json j;
  j["N"] = code.N;
  std::vector<std::vector<double>> rows(code.M.rows(), std::vector<double>(code.M.cols()));
  for (Eigen::Index i = 0; i < code.M.rows(); ++i)
    for (Eigen::Index k = 0; k < code.M.cols(); ++k) rows[i][k] = code.M(i, k);
  j["M"] = rows;
  return j.dump();
}

}  // namespace shiftcode
