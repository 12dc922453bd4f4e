#include "cecoh/verma.hpp"

#include <sstream>

namespace cecoh {

RationalMatrix RationalMatrix::Identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::isZero() const {
  for (const auto& v : a_) {
    if (v != 0) return false;
  }
  return true;
}

bool RationalMatrix::columnIsZero(int j) const {
  for (int i = 0; i < rows_; ++i) {
    if ((*this)(i, j) != 0) return false;
  }
  return true;
}

Rational RationalMatrix::maxAbs() const {
  Rational m = 0;
  for (const auto& v : a_) {
    Rational av = v < 0 ? Rational(-v) : v;
    if (av > m) m = av;
  }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InputError("RationalMatrix: shape mismatch in +");
  }
  RationalMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InputError("RationalMatrix: shape mismatch in -");
  }
  RationalMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("RationalMatrix: shape mismatch in *");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j) == 0) continue;
        r(i, j) += v * o(k, j);
      }
    }
  }
  return r;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  }
  return r;
}

RationalMatrix poly_mult_x(int N) {
  RationalMatrix X(N + 1, N + 1);
  for (int k = 0; k < N; ++k) X(k + 1, k) = 1;  // x^N maps to 0
  return X;
}

VermaOperators verma_operators(const Rational& lambda, int N) {
  if (N < 3) throw InputError("verma_operators: truncation degree must be >= 3");
  VermaOperators ops;
  ops.lambda = lambda;
  ops.trunc_degree = N;

  RationalMatrix E(N + 1, N + 1);
  for (int k = 1; k <= N; ++k) E(k - 1, k) = k;  // d/dx: x^k -> k x^(k-1)

  RationalMatrix H(N + 1, N + 1);
  for (int k = 0; k <= N; ++k) H(k, k) = lambda - 2 * k;  // (-2x d/dx + lambda) x^k

  RationalMatrix F(N + 1, N + 1);
  for (int k = 0; k < N; ++k) F(k + 1, k) = lambda - k;  // (-x^2 d/dx + lambda x) x^k

  ops.e = {N, std::move(E)};
  ops.h = {N, std::move(H)};
  ops.f = {N, std::move(F)};
  return ops;
}

namespace {

RelationCheck column_report(std::string name, const RationalMatrix& residual) {
  RelationCheck rc;
  rc.name = std::move(name);
  rc.max_abs_violation = residual.maxAbs();
  rc.exact_on_degree.resize(residual.cols());
  for (int j = 0; j < residual.cols(); ++j) {
    rc.exact_on_degree[j] = residual.columnIsZero(j);
  }
  return rc;
}

RationalMatrix comm(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

}  // namespace

bool RelationCheck::exact_through(int deg) const {
  if (deg < 0 || deg >= static_cast<int>(exact_on_degree.size())) return false;
  for (int j = 0; j <= deg; ++j) {
    if (!exact_on_degree[j]) return false;
  }
  return true;
}

std::vector<RelationCheck> check_sl2_relations(const VermaOperators& ops) {
  const RationalMatrix& E = ops.e.matrix;
  const RationalMatrix& H = ops.h.matrix;
  const RationalMatrix& F = ops.f.matrix;
  std::vector<RelationCheck> out;
  out.push_back(column_report("[h,e] - 2e", comm(H, E) - (Rational(2) * E)));
  out.push_back(column_report("[h,f] + 2f", comm(H, F) + (Rational(2) * F)));
  out.push_back(column_report("[e,f] - h", comm(E, F) - H));
  return out;
}

LieAlgebraData<RationalMatrix> sl2_verma_algebra(const VermaOperators& ops) {
  LieAlgebraData<RationalMatrix> g;
  g.dim_g = 3;
  g.f.assign(27, Rational(0));
  // basis order (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f
  g.fc(0, 1, 0) = -2;
  g.fc(1, 0, 0) = 2;
  g.fc(0, 2, 1) = 1;
  g.fc(2, 0, 1) = -1;
  g.fc(1, 2, 2) = -2;
  g.fc(2, 1, 2) = 2;
  g.rep = {ops.e.matrix, ops.h.matrix, ops.f.matrix};
  return g;
}

CocycleCheck deformation_cocycle_residual(const VermaOperators& ops,
                                          const RationalMatrix& delta_h,
                                          const RationalMatrix& delta_f) {
  const int N = ops.trunc_degree;
  if (N < 4) throw InputError("deformation_cocycle_residual: need N >= 4");
  const LieAlgebraData<RationalMatrix> g = sl2_verma_algebra(ops);

  GeneralCochain<RationalMatrix> c;
  c.degree = 1;
  c.components[{1}] = delta_h;  // c^h slot
  c.components[{2}] = delta_f;  // c^f slot
  const GeneralCochain<RationalMatrix> dc = d_general(c, g);

  CocycleCheck out;
  out.verified_degree = N - 2;
  out.passed = true;
  const std::vector<std::pair<std::vector<int>, std::string>> slots = {
      {{0, 1}, "c^e c^h"}, {{0, 2}, "c^e c^f"}, {{1, 2}, "c^h c^f"}};
  for (const auto& [idx, name] : slots) {
    auto it = dc.components.find(idx);
    const RationalMatrix res =
        it != dc.components.end() ? it->second : RationalMatrix::Zero(N + 1, N + 1);
    RelationCheck rc = column_report(name, res);
    if (!rc.exact_through(N - 2)) out.passed = false;
    out.components.push_back(std::move(rc));
  }
  return out;
}

CocycleCheck check_deformation_cocycle(const Rational& lambda, int N) {
  if (N < 4) throw InputError("check_deformation_cocycle: need N >= 4");
  const VermaOperators ops = verma_operators(lambda, N);
  return deformation_cocycle_residual(ops, RationalMatrix::Identity(N + 1),
                                      poly_mult_x(N));
}

}  // namespace cecoh
