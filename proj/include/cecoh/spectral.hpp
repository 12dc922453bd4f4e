// Joint spectral decomposition of a commuting Hermitian pair, sector projectors,
// block maps, the commutant Z and its structure constants.
#pragma once

#include <vector>

#include "cecoh/linalg.hpp"

namespace cecoh {

struct SymmetryPair {
  ComplexMatrix hamiltonian;  // Hermitian
  ComplexMatrix symmetry;     // Hermitian, commutes with hamiltonian
  int dim = 0;
  Tolerances tol;

  SymmetryPair(ComplexMatrix H, ComplexMatrix S, Tolerances t = {});

  // anti-Hermitian generators iH, iS of the abelian action on u(V)
  ComplexMatrix anti_h() const { return Complex(0, 1) * hamiltonian; }
  ComplexMatrix anti_s() const { return Complex(0, 1) * symmetry; }
};

struct Sector {
  double lambda = 0.0;
  double mu = 0.0;
  ComplexMatrix projector;
  int multiplicity = 0;
  ComplexMatrix isometry;  // dim x multiplicity, orthonormal columns spanning the sector
};

struct JointSpectrum {
  std::vector<Sector> sectors;
  double cluster_tol = 0.0;  // absolute width actually used
  int dim = 0;
  int commutant_dim() const;  // sum of multiplicity^2
};

// Diagonalize hamiltonian, then symmetry restricted to each eigenspace; cluster
// eigenvalues at cluster_tol (absolute; < 0 selects 1e-8 * spectral range).
// Sectors sorted lexicographically by (lambda, mu).
JointSpectrum joint_diagonalize(const SymmetryPair& pair, double cluster_tol = -1.0);

struct BlockIndex {
  int first = 0;
  int second = 0;
  BlockIndex(int a, int b);  // stored with first <= second
};

// pi(x) = 1/2 (P_a x P_b + P_b x P_a); equals P x P on diagonal blocks
ComplexMatrix block_project(const ComplexMatrix& x, const JointSpectrum& sp, BlockIndex idx);

// sum of the diagonal blocks P_a x P_a; for anti-Hermitian x this is the Z-component
ComplexMatrix diagonal_part(const ComplexMatrix& x, const JointSpectrum& sp);
ComplexMatrix offdiagonal_part(const ComplexMatrix& x, const JointSpectrum& sp);

struct CommutantBasis {
  std::vector<AntiHermitianMatrix> basis;
  std::vector<int> sector_of;  // diagonal block of each element; -1 when unknown
  int size() const { return static_cast<int>(basis.size()); }
};

// orthonormal real basis of Z = { A in u(V) : [H,A] = [S,A] = 0 }
CommutantBasis commutant_basis(const JointSpectrum& sp);

struct StructureConstants {
  int n = 0;
  std::vector<double> v;  // flat, index (i*n + j)*n + k
  double operator()(int i, int j, int k) const { return v[(size_t(i) * n + j) * n + k]; }
  double& operator()(int i, int j, int k) { return v[(size_t(i) * n + j) * n + k]; }
  double max_jacobi_violation() const;
};

// f_ij^k = -tr([e_i,e_j] e_k) in the orthonormal basis; closure is verified
StructureConstants structure_constants(const CommutantBasis& basis);

}  // namespace cecoh
