// sl(2) highest-weight representation by differential operators on a
// degree-truncated polynomial space; exact rational arithmetic throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cecoh/ce_general.hpp"

namespace cecoh {

using Rational = boost::multiprecision::cpp_rational;

// dense matrix over the rationals; just enough surface for d_general
class RationalMatrix {
 public:
  using Scalar = Rational;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}
  static RationalMatrix Zero(int r, int c) { return RationalMatrix(r, c); }
  static RationalMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  bool isZero() const;
  bool columnIsZero(int j) const;
  Rational maxAbs() const;

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  RationalMatrix operator*(const RationalMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

template <>
struct real_scalar_of<RationalMatrix> {
  using type = Rational;
};

// operator on span{1, x, ..., x^N} with multiplication by x truncating x^(N+1) to 0
struct TruncatedPolyOperator {
  int trunc_degree = 0;  // N
  RationalMatrix matrix;  // (N+1) x (N+1), columns indexed by input degree
};

struct VermaOperators {
  TruncatedPolyOperator e, h, f;  // rho(e) = d/dx, rho(h) = -2x d/dx + lambda, rho(f) = -x^2 d/dx + lambda x
  Rational lambda;
  int trunc_degree = 0;
};

VermaOperators verma_operators(const Rational& lambda, int N);

// multiplication by x on the truncated space
RationalMatrix poly_mult_x(int N);

struct RelationCheck {
  std::string name;
  std::vector<bool> exact_on_degree;  // residual column k is identically zero
  Rational max_abs_violation;
  bool exact_through(int deg) const;
};

// [h,e] = 2e, [h,f] = -2f, [e,f] = h on the truncated space
std::vector<RelationCheck> check_sl2_relations(const VermaOperators& ops);

// structure constants and representation matrices in the basis order (e, h, f)
LieAlgebraData<RationalMatrix> sl2_verma_algebra(const VermaOperators& ops);

struct CocycleCheck {
  bool passed = false;      // all output components vanish on degrees <= N-2
  int verified_degree = 0;  // N-2
  std::vector<RelationCheck> components;  // one per 2-cochain slot
};

// applies d_general to the 1-cochain (c^e, c^h, c^f) -> (0, delta_h, delta_f)
CocycleCheck deformation_cocycle_residual(const VermaOperators& ops,
                                          const RationalMatrix& delta_h,
                                          const RationalMatrix& delta_f);

// the weight-shift deformation: delta rho(e) = 0, delta rho(h) = 1, delta rho(f) = x
CocycleCheck check_deformation_cocycle(const Rational& lambda, int N);

}  // namespace cecoh
