// Shared matrix typedefs, tolerance bundle and error types.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace cecoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// input violates a documented precondition (shape, hermiticity, commutation, schema)
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a floating-point result cannot be trusted (rank ambiguity, failed cross-check)
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a cochain fed to the homotopy carries diagonal-block components it must not have
struct NotExactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sector structure violated (two sectors not separated in either eigenvalue)
struct SpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double hermiticity = 1e-10;  // relative gate for (anti-)hermiticity checks
  double commute = 1e-10;      // relative gate for ||[H,S]||
  double cluster = -1.0;       // absolute eigenvalue cluster width; < 0 selects 1e-8 * spectral range
  double rank = 1e-9;          // singular values below rank * sigma_max count as zero
  double first_order = 1e-10;  // relative gate for the first-order cocycle equation
  double obstruction = 1e-8;   // relative gate for order-n obstruction classes
  int feasibility_max_dim = 12;  // least-squares cross-check of the order-2 system runs up to this dim
};

// real inner product on u(V): <a,b> = -Re tr(ab)
inline double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return -a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace cecoh
