// Order-by-order symmetry restoration: first-order solve, second-order
// obstruction class in Z, continuation of the curve (H(t), S(t)).
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cecoh/cecomplex.hpp"

namespace cecoh {

struct DeformationProblem {
  SymmetryPair pair;
  ComplexMatrix delta_h1;                 // Hermitian perturbation of the hamiltonian
  std::optional<ComplexMatrix> delta_s1;  // optional user-supplied first-order correction

  DeformationProblem(SymmetryPair p, ComplexMatrix dh1,
                     std::optional<ComplexMatrix> ds1 = std::nullopt);
};

// ||[H, ds1] - [S, dh1]||_F, the first-order cocycle residual
double first_order_residual(const SymmetryPair& pair, const ComplexMatrix& dh1,
                            const ComplexMatrix& ds1);

struct BlockViolation {
  int first = 0, second = 0;  // sector indices
  double norm = 0.0;
};

struct FirstOrderResult {
  bool solvable = false;
  ComplexMatrix delta_s1;                  // valid when solvable
  std::vector<BlockViolation> violations;  // blocks breaking the symmetry at first order
  double residual = 0.0;                   // cocycle residual of the returned solution
  bool supplied = false;                   // user-provided delta_s1 validated and passed through
};

FirstOrderResult solve_first_order(const DeformationProblem& prob);
FirstOrderResult solve_first_order(const DeformationProblem& prob, const JointSpectrum& sp);

struct ObstructionClass {
  ComplexMatrix representative;      // anti-Hermitian element of Z
  ComplexMatrix observable;          // -i * representative (Hermitian)
  std::vector<double> coefficients;  // in the commutant basis
  double norm = 0.0;
  std::optional<double> feasibility_residual;  // least-squares cross-check when run
};

ObstructionClass obstruction_second_order(const DeformationProblem& prob,
                                          const ComplexMatrix& ds1);
ObstructionClass obstruction_second_order(const DeformationProblem& prob,
                                          const ComplexMatrix& ds1,
                                          const JointSpectrum& sp,
                                          const CommutantBasis& cb);

// least-squares residual of the order-2 linear system over (d2H, d2S); equals
// the class norm up to rounding and certifies infeasibility independently
double quadratic_feasibility_residual(const DeformationProblem& prob,
                                      const ComplexMatrix& ds1);

struct DeformationSeries {
  int order = 0;
  std::vector<ComplexMatrix> h_coeffs, s_coeffs;  // Hermitian; entry 0 = the originals
  std::string gauge;
  std::vector<std::pair<double, double>> residual_profile;  // (t, ||[H(t),S(t)]||_F tail)
  double fitted_slope = 0.0;   // log-log slope over the profile; NaN when exact
  bool profile_exact = false;  // every tail coefficient at rounding level
};

struct ContinuationResult {
  bool obstructed = false;
  int obstructed_order = 0;                     // 0 when unobstructed
  std::optional<ObstructionClass> obstruction;  // set when obstructed
  std::optional<DeformationSeries> series;      // set when unobstructed
  FirstOrderResult first_order;
};

ContinuationResult continue_series(const DeformationProblem& prob, int order);

struct AnomalyReport {
  JointSpectrum spectrum;
  CohomologyReport coh_theorem;
  CohomologyReport coh_brute;
  FirstOrderResult first_order;
  std::optional<ObstructionClass> obstruction;
  bool anomaly = false;         // nonzero second-order class
  bool nondegenerate = false;   // every multiplicity is 1
  double obstruction_gate = 0;  // effective absolute tolerance used for the verdict
};

AnomalyReport anomaly_report(const DeformationProblem& prob);

}  // namespace cecoh
