#include "cecoh/cecomplex.hpp"

#include <cmath>
#include <sstream>

namespace cecoh {

namespace {

void check_component(const ComplexMatrix& m, double rel_tol, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InputError(std::string(what) + ": component must be square and nonempty");
  }
  require_finite(m, what);
  const double res = anti_hermiticity_residual(m);
  if (res > rel_tol * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << what << ": component not anti-Hermitian, ||m + m^H||_F = " << res;
    throw InputError(os.str());
  }
}

}  // namespace

Cochain Cochain::degree0(ComplexMatrix w, double rel_tol) {
  check_component(w, rel_tol, "Cochain degree 0");
  Cochain c;
  c.degree = 0;
  c.dim = static_cast<int>(w.rows());
  c.w = std::move(w);
  return c;
}

Cochain Cochain::degree1(ComplexMatrix x_H, ComplexMatrix y_S, double rel_tol) {
  check_component(x_H, rel_tol, "Cochain degree 1 (c^H slot)");
  check_component(y_S, rel_tol, "Cochain degree 1 (c^S slot)");
  if (x_H.rows() != y_S.rows()) {
    throw InputError("Cochain degree 1: components differ in dimension");
  }
  Cochain c;
  c.degree = 1;
  c.dim = static_cast<int>(x_H.rows());
  c.x_H = std::move(x_H);
  c.y_S = std::move(y_S);
  return c;
}

Cochain Cochain::degree2(ComplexMatrix z, double rel_tol) {
  check_component(z, rel_tol, "Cochain degree 2");
  Cochain c;
  c.degree = 2;
  c.dim = static_cast<int>(z.rows());
  c.z = std::move(z);
  return c;
}

double Cochain::norm() const {
  switch (degree) {
    case 0:
      return w.norm();
    case 1:
      return std::hypot(x_H.norm(), y_S.norm());
    default:
      return z.norm();
  }
}

Cochain d_abelian(const Cochain& c, const SymmetryPair& pair) {
  if (c.dim != pair.dim) throw InputError("d_abelian: dimension mismatch");
  const ComplexMatrix H = pair.anti_h();
  const ComplexMatrix S = pair.anti_s();
  switch (c.degree) {
    case 0:
      return Cochain::degree1(commutator(H, c.w), commutator(S, c.w));
    case 1:
      return Cochain::degree2(commutator(H, c.y_S) - commutator(S, c.x_H));
    default:
      return Cochain::degree2(ComplexMatrix::Zero(c.dim, c.dim));
  }
}

namespace {

// P_a m P_b - P_b m P_a, the signed off-diagonal slice the homotopy divides
ComplexMatrix signed_slice(const ComplexMatrix& m, const Sector& a, const Sector& b) {
  return a.projector * m * b.projector - b.projector * m * a.projector;
}

}  // namespace

Cochain homotopy(const Cochain& c, const JointSpectrum& sp, double diag_rel_tol) {
  if (c.degree != 1 && c.degree != 2) {
    throw InputError("homotopy: defined for degrees 1 and 2 only");
  }
  if (c.dim != sp.dim) throw InputError("homotopy: dimension mismatch");

  const double gate = diag_rel_tol * std::max(1.0, c.norm());
  for (size_t a = 0; a < sp.sectors.size(); ++a) {
    const ComplexMatrix& P = sp.sectors[a].projector;
    double res = 0;
    if (c.degree == 1) {
      res = std::hypot((P * c.x_H * P).norm(), (P * c.y_S * P).norm());
    } else {
      res = (P * c.z * P).norm();
    }
    if (res > gate) {
      std::ostringstream os;
      os << "homotopy: nonzero diagonal block, sector " << a << ", norm " << res;
      throw NotExactError(os.str());
    }
  }

  const int n = sp.dim;
  const Complex I(0, 1);
  if (c.degree == 1) {
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    for (size_t a = 0; a < sp.sectors.size(); ++a) {
      for (size_t b = a + 1; b < sp.sectors.size(); ++b) {
        const double lam = sp.sectors[a].lambda - sp.sectors[b].lambda;
        const double mu = sp.sectors[a].mu - sp.sectors[b].mu;
        if (std::abs(lam) <= sp.cluster_tol && std::abs(mu) <= sp.cluster_tol) {
          throw SpectrumError("homotopy: sectors not separated in either eigenvalue");
        }
        if (std::abs(lam) >= std::abs(mu)) {
          w += signed_slice(c.x_H, sp.sectors[a], sp.sectors[b]) / (I * lam);
        } else {
          w += signed_slice(c.y_S, sp.sectors[a], sp.sectors[b]) / (I * mu);
        }
      }
    }
    return Cochain::degree0(std::move(w));
  }

  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  ComplexMatrix y = ComplexMatrix::Zero(n, n);
  for (size_t a = 0; a < sp.sectors.size(); ++a) {
    for (size_t b = a + 1; b < sp.sectors.size(); ++b) {
      const double lam = sp.sectors[a].lambda - sp.sectors[b].lambda;
      const double mu = sp.sectors[a].mu - sp.sectors[b].mu;
      if (std::abs(lam) <= sp.cluster_tol && std::abs(mu) <= sp.cluster_tol) {
        throw SpectrumError("homotopy: sectors not separated in either eigenvalue");
      }
      const ComplexMatrix slice = signed_slice(c.z, sp.sectors[a], sp.sectors[b]);
      if (std::abs(lam) >= std::abs(mu)) {
        y += slice / (I * lam);  // d(0, y) = c^H c^S [H, y]
      } else {
        x += -slice / (I * mu);  // d(x, 0) = -c^H c^S [S, x]
      }
    }
  }
  return Cochain::degree1(std::move(x), std::move(y));
}

CohomologyReport cohomology_theorem(const JointSpectrum& sp) {
  CohomologyReport rep;
  const int z = sp.commutant_dim();
  rep.dims = {z, 2 * z, z};
  rep.commutant = commutant_basis(sp);
  rep.method = CohomologyMethod::theorem;
  return rep;
}

RealMatrix realified_d0(const SymmetryPair& pair) {
  const int n = pair.dim;
  const int nb = n * n;
  const auto basis = u_basis(n);
  const ComplexMatrix H = pair.anti_h();
  const ComplexMatrix S = pair.anti_s();
  RealMatrix d0(2 * nb, nb);
  for (int j = 0; j < nb; ++j) {
    const ComplexMatrix ch = commutator(H, basis[j]);
    const ComplexMatrix cs = commutator(S, basis[j]);
    for (int i = 0; i < nb; ++i) {
      d0(i, j) = real_inner(ch, basis[i]);
      d0(nb + i, j) = real_inner(cs, basis[i]);
    }
  }
  return d0;
}

RealMatrix realified_d1(const SymmetryPair& pair) {
  const int n = pair.dim;
  const int nb = n * n;
  const auto basis = u_basis(n);
  const ComplexMatrix H = pair.anti_h();
  const ComplexMatrix S = pair.anti_s();
  RealMatrix d1(nb, 2 * nb);
  for (int j = 0; j < nb; ++j) {
    const ComplexMatrix from_x = -commutator(S, basis[j]);  // x slot
    const ComplexMatrix from_y = commutator(H, basis[j]);   // y slot
    for (int i = 0; i < nb; ++i) {
      d1(i, j) = real_inner(from_x, basis[i]);
      d1(i, nb + j) = real_inner(from_y, basis[i]);
    }
  }
  return d1;
}

CohomologyReport cohomology_bruteforce(const SymmetryPair& pair) {
  const int n = pair.dim;
  const int nb = n * n;
  const RealMatrix d0 = realified_d0(pair);
  const RealMatrix d1 = realified_d1(pair);
  // rank cuts are floored at the operator scale so that a numerically scalar
  // pair (d0, d1 at rounding scale) comes out as the zero map
  const double floor = std::max(pair.hamiltonian.norm(), pair.symmetry.norm());
  const RankResult r1 = real_rank_checked(d1, pair.tol.rank, floor);

  // one SVD of d0 serves the rank and the kernel basis
  Eigen::JacobiSVD<RealMatrix> svd(d0, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double cut = pair.tol.rank * std::max(smax, floor);
  RankResult r0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++r0.rank;
    if (cut > 0 && sv(i) > cut / 10 && sv(i) < cut * 10) r0.ambiguous = true;
  }
  if (r0.ambiguous || r1.ambiguous) {
    throw NumericalError(
        "cohomology_bruteforce: singular values straddle the rank tolerance "
        "within a factor 10; rank is ambiguous");
  }

  CohomologyReport rep;
  rep.method = CohomologyMethod::brute_force;
  rep.dims = {nb - r0.rank, (2 * nb - r1.rank) - r0.rank, nb - r1.rank};

  // kernel of d0 = Z
  const auto basis = u_basis(n);
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cut) continue;
    ComplexMatrix elem = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < nb; ++j) elem += svd.matrixV()(j, k) * basis[j];
    rep.commutant.basis.emplace_back(std::move(elem));
    rep.commutant.sector_of.push_back(-1);
  }
  return rep;
}

}  // namespace cecoh
