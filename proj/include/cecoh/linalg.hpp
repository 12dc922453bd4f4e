// u(V) groundwork: commutators, hermiticity gates, the canonical real basis, real rank.
#pragma once

#include <vector>

#include "cecoh/types.hpp"

namespace cecoh {

double hermiticity_residual(const ComplexMatrix& m);       // ||m - m^H||_F
double anti_hermiticity_residual(const ComplexMatrix& m);  // ||m + m^H||_F
void require_finite(const ComplexMatrix& m, const char* what);
void require_hermitian(const ComplexMatrix& m, double rel_tol, const char* what);

struct AntiHermitianMatrix {
  ComplexMatrix inner;
  explicit AntiHermitianMatrix(ComplexMatrix m, double rel_tol = 1e-10);
  operator const ComplexMatrix&() const { return inner; }
  int dim() const { return static_cast<int>(inner.rows()); }
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// wraps i*h for Hermitian h
AntiHermitianMatrix anti_hermitize(const ComplexMatrix& h, double rel_tol = 1e-10);

// Canonical orthonormal basis of u(n) under <a,b> = -tr(ab):
// i E_kk for k = 0..n-1, then (E_kl - E_lk)/sqrt(2) and i (E_kl + E_lk)/sqrt(2) for k < l.
std::vector<ComplexMatrix> u_basis(int n);

// number of singular values exceeding tol * max(sigma_max, scale_floor).
// The floor keeps numerically-zero matrices (entries at rounding scale of a
// larger problem) from being ranked against their own noise.
int real_rank(const RealMatrix& m, double tol, double scale_floor = 0.0);

// rank plus an ambiguity flag: set when some singular value lies within a
// factor 10 of the cut
struct RankResult {
  int rank = 0;
  bool ambiguous = false;
};
RankResult real_rank_checked(const RealMatrix& m, double tol, double scale_floor = 0.0);

}  // namespace cecoh
