// Chevalley-Eilenberg complex of the abelian pair acting on u(V): cochains,
// differential, blockwise homotopy, cohomology by the commutant formula and by rank.
#pragma once

#include <array>

#include "cecoh/spectral.hpp"

namespace cecoh {

// degree 0: w; degree 1: x_H (c^H slot) and y_S (c^S slot); degree 2: z (c^H c^S slot)
struct Cochain {
  int degree = 0;
  int dim = 0;
  ComplexMatrix w, x_H, y_S, z;

  static Cochain degree0(ComplexMatrix w, double rel_tol = 1e-10);
  static Cochain degree1(ComplexMatrix x_H, ComplexMatrix y_S, double rel_tol = 1e-10);
  static Cochain degree2(ComplexMatrix z, double rel_tol = 1e-10);
  double norm() const;
};

// d(w) = (c^H [H,w], c^S [S,w]); d(x,y) = c^H c^S ([H,y] - [S,x]).
// Degree-2 input returns the zero degree-2 cochain (the complex terminates).
Cochain d_abelian(const Cochain& c, const SymmetryPair& pair);

// Blockwise inverse on the off-diagonal subcomplex; input must have vanishing
// diagonal blocks. Per block the branch divides by i*lambda_ab or i*mu_ab,
// whichever eigenvalue difference is larger in magnitude.
Cochain homotopy(const Cochain& c, const JointSpectrum& sp, double diag_rel_tol = 1e-10);

enum class CohomologyMethod { theorem, brute_force };

struct CohomologyReport {
  std::array<int, 3> dims{0, 0, 0};  // real dimensions (h0, h1, h2)
  CommutantBasis commutant;
  CohomologyMethod method = CohomologyMethod::theorem;
};

// (|Z|, 2|Z|, |Z|) with |Z| = sum of multiplicity^2
CohomologyReport cohomology_theorem(const JointSpectrum& sp);

// independent route: ranks of the realified differentials in the canonical u(n) basis
CohomologyReport cohomology_bruteforce(const SymmetryPair& pair);

// d0: u(V) -> u(V)^2 and d1: u(V)^2 -> u(V) as real matrices in the canonical
// basis (x-columns first, then y-columns; rows stack the c^H and c^S slots)
RealMatrix realified_d0(const SymmetryPair& pair);
RealMatrix realified_d1(const SymmetryPair& pair);

}  // namespace cecoh
