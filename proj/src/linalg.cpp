#include "cecoh/linalg.hpp"

#include <cmath>
#include <sstream>

namespace cecoh {

double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

double anti_hermiticity_residual(const ComplexMatrix& m) {
  return (m + m.adjoint()).norm();
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InputError(std::string(what) + ": non-finite entries");
  }
}

void require_hermitian(const ComplexMatrix& m, double rel_tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw InputError(std::string(what) + ": matrix is not square");
  }
  require_finite(m, what);
  const double res = hermiticity_residual(m);
  if (res > rel_tol * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << what << ": not Hermitian, ||m - m^H||_F = " << res;
    throw InputError(os.str());
  }
}

AntiHermitianMatrix::AntiHermitianMatrix(ComplexMatrix m, double rel_tol)
    : inner(std::move(m)) {
  if (inner.rows() != inner.cols()) {
    throw InputError("AntiHermitianMatrix: matrix is not square");
  }
  require_finite(inner, "AntiHermitianMatrix");
  const double res = anti_hermiticity_residual(inner);
  if (res > rel_tol * std::max(1.0, inner.norm())) {
    std::ostringstream os;
    os << "AntiHermitianMatrix: ||m + m^H||_F = " << res << " exceeds tolerance";
    throw InputError(os.str());
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InputError("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

AntiHermitianMatrix anti_hermitize(const ComplexMatrix& h, double rel_tol) {
  require_hermitian(h, rel_tol, "anti_hermitize");
  return AntiHermitianMatrix(Complex(0, 1) * h, rel_tol);
}

std::vector<ComplexMatrix> u_basis(int n) {
  if (n <= 0) throw InputError("u_basis: n must be positive");
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<size_t>(n) * n);
  const Complex I(0, 1);
  for (int k = 0; k < n; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(k, k) = I;
    out.push_back(e);
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(k, l) = r;
      a(l, k) = -r;
      out.push_back(a);
      ComplexMatrix b = ComplexMatrix::Zero(n, n);
      b(k, l) = I * r;
      b(l, k) = I * r;
      out.push_back(b);
    }
  }
  return out;
}

RankResult real_rank_checked(const RealMatrix& m, double tol, double scale_floor) {
  if (m.size() == 0) throw InputError("real_rank: empty matrix");
  if (tol < 0 || scale_floor < 0) throw InputError("real_rank: negative tolerance");
  // JacobiSVD: BDCSVD miscomputes repeated singular values on wide inputs (Eigen 3.4.0)
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  RankResult res;
  const double cut = tol * std::max(smax, scale_floor);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++res.rank;
    if (cut > 0 && sv(i) > cut / 10 && sv(i) < cut * 10) res.ambiguous = true;
  }
  return res;
}

int real_rank(const RealMatrix& m, double tol, double scale_floor) {
  return real_rank_checked(m, tol, scale_floor).rank;
}

}  // namespace cecoh
