#include "cecoh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cecoh {

SymmetryPair::SymmetryPair(ComplexMatrix H, ComplexMatrix S, Tolerances t)
    : hamiltonian(std::move(H)), symmetry(std::move(S)), tol(t) {
  if (hamiltonian.rows() != hamiltonian.cols() || symmetry.rows() != symmetry.cols() ||
      hamiltonian.rows() != symmetry.rows() || hamiltonian.rows() == 0) {
    throw InputError("SymmetryPair: matrices must be square and of equal dimension");
  }
  dim = static_cast<int>(hamiltonian.rows());
  require_hermitian(hamiltonian, tol.hermiticity, "SymmetryPair hamiltonian");
  require_hermitian(symmetry, tol.hermiticity, "SymmetryPair symmetry");
  const double comm = commutator(hamiltonian, symmetry).norm();
  const double gate = tol.commute * hamiltonian.norm() * symmetry.norm();
  if (comm > gate) {
    std::ostringstream os;
    os << "SymmetryPair: operators do not commute, ||[H,S]||_F = " << comm
       << " exceeds " << gate;
    throw InputError(os.str());
  }
}

int JointSpectrum::commutant_dim() const {
  int z = 0;
  for (const auto& s : sectors) z += s.multiplicity * s.multiplicity;
  return z;
}

namespace {

// gap-based clustering of sorted values; returns [begin, end) column ranges
std::vector<std::pair<int, int>> cluster_sorted(const RealVector& vals, double tol) {
  std::vector<std::pair<int, int>> out;
  int begin = 0;
  for (int i = 1; i < vals.size(); ++i) {
    if (vals(i) - vals(i - 1) > tol) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  out.emplace_back(begin, static_cast<int>(vals.size()));
  return out;
}

double mean_of(const RealVector& vals, int b, int e) {
  double m = 0;
  for (int i = b; i < e; ++i) m += vals(i);
  return m / (e - b);
}

}  // namespace

JointSpectrum joint_diagonalize(const SymmetryPair& pair, double cluster_tol) {
  const int n = pair.dim;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> esH(pair.hamiltonian);
  if (esH.info() != Eigen::Success) {
    throw NumericalError("joint_diagonalize: eigensolver failed on the hamiltonian");
  }
  const RealVector lam = esH.eigenvalues();
  const ComplexMatrix U = esH.eigenvectors();

  double ct = cluster_tol;
  if (ct < 0) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> esS(pair.symmetry,
                                                     Eigen::EigenvaluesOnly);
    if (esS.info() != Eigen::Success) {
      throw NumericalError("joint_diagonalize: eigensolver failed on the symmetry");
    }
    const RealVector mu_all = esS.eigenvalues();
    const double range = std::max(lam(n - 1) - lam(0), mu_all(n - 1) - mu_all(0));
    ct = 1e-8 * std::max(range, 1.0);
  }

  JointSpectrum sp;
  sp.dim = n;
  sp.cluster_tol = ct;

  for (const auto& [hb, he] : cluster_sorted(lam, ct)) {
    const int m = he - hb;
    const double lam_rep = mean_of(lam, hb, he);
    const ComplexMatrix Uc = U.middleCols(hb, m);
    ComplexMatrix B = Uc.adjoint() * pair.symmetry * Uc;
    B = ComplexMatrix(0.5 * (B + B.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> esB(B);
    if (esB.info() != Eigen::Success) {
      throw NumericalError("joint_diagonalize: eigensolver failed on a restricted block");
    }
    const RealVector mu = esB.eigenvalues();
    const ComplexMatrix W = esB.eigenvectors();
    for (const auto& [sb, se] : cluster_sorted(mu, ct)) {
      Sector sec;
      sec.lambda = lam_rep;
      sec.mu = mean_of(mu, sb, se);
      sec.multiplicity = se - sb;
      sec.isometry = Uc * W.middleCols(sb, se - sb);
      sec.projector = sec.isometry * sec.isometry.adjoint();
      sp.sectors.push_back(std::move(sec));
    }
  }

  std::sort(sp.sectors.begin(), sp.sectors.end(), [](const Sector& a, const Sector& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.mu < b.mu;
  });

  // sanity: H and S act as scalars on each sector
  const double comm_res = commutator(pair.hamiltonian, pair.symmetry).norm();
  const double slack_h = 10.0 * n * ct + 1e-10 * std::max(1.0, pair.hamiltonian.norm());
  const double slack_s =
      slack_h + 1e-10 * std::max(1.0, pair.symmetry.norm()) + 10.0 * comm_res / ct;
  for (const auto& sec : sp.sectors) {
    const double rh = (pair.hamiltonian * sec.isometry - sec.lambda * sec.isometry).norm();
    const double rs = (pair.symmetry * sec.isometry - sec.mu * sec.isometry).norm();
    if (rh > slack_h || rs > slack_s) {
      throw NumericalError(
          "joint_diagonalize: operators are not scalar on a sector; "
          "cluster tolerance is inconsistent with the input");
    }
  }
  return sp;
}

BlockIndex::BlockIndex(int a, int b) : first(std::min(a, b)), second(std::max(a, b)) {
  if (first < 0) throw InputError("BlockIndex: negative sector index");
}

ComplexMatrix block_project(const ComplexMatrix& x, const JointSpectrum& sp,
                            BlockIndex idx) {
  if (idx.second >= static_cast<int>(sp.sectors.size())) {
    throw InputError("block_project: sector index out of range");
  }
  if (x.rows() != sp.dim || x.cols() != sp.dim) {
    throw InputError("block_project: dimension mismatch");
  }
  const ComplexMatrix& Pa = sp.sectors[idx.first].projector;
  const ComplexMatrix& Pb = sp.sectors[idx.second].projector;
  if (idx.first == idx.second) return Pa * x * Pa;
  return Pa * x * Pb + Pb * x * Pa;
}

ComplexMatrix diagonal_part(const ComplexMatrix& x, const JointSpectrum& sp) {
  ComplexMatrix out = ComplexMatrix::Zero(sp.dim, sp.dim);
  for (const auto& sec : sp.sectors) out += sec.projector * x * sec.projector;
  return out;
}

ComplexMatrix offdiagonal_part(const ComplexMatrix& x, const JointSpectrum& sp) {
  return x - diagonal_part(x, sp);
}

CommutantBasis commutant_basis(const JointSpectrum& sp) {
  CommutantBasis cb;
  for (size_t a = 0; a < sp.sectors.size(); ++a) {
    const ComplexMatrix& iso = sp.sectors[a].isometry;
    for (const ComplexMatrix& b : u_basis(sp.sectors[a].multiplicity)) {
      cb.basis.emplace_back(ComplexMatrix(iso * b * iso.adjoint()));
      cb.sector_of.push_back(static_cast<int>(a));
    }
  }
  return cb;
}

double StructureConstants::max_jacobi_violation() const {
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = 0;
          for (int l = 0; l < n; ++l) {
            s += (*this)(i, j, l) * (*this)(l, k, m) +
                 (*this)(j, k, l) * (*this)(l, i, m) +
                 (*this)(k, i, l) * (*this)(l, j, m);
          }
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

StructureConstants structure_constants(const CommutantBasis& basis) {
  const int nz = basis.size();
  StructureConstants f;
  f.n = nz;
  f.v.assign(static_cast<size_t>(nz) * nz * nz, 0.0);
  if (nz == 0) return f;
  const int dim = basis.basis[0].dim();
  for (int i = 0; i < nz; ++i) {
    for (int j = i + 1; j < nz; ++j) {
      const ComplexMatrix cij = commutator(basis.basis[i], basis.basis[j]);
      ComplexMatrix recon = ComplexMatrix::Zero(dim, dim);
      for (int k = 0; k < nz; ++k) {
        const double c = real_inner(cij, basis.basis[k]);
        f(i, j, k) = c;
        f(j, i, k) = -c;
        recon += c * basis.basis[k].inner;
      }
      if ((cij - recon).norm() > 1e-10 * std::max(1.0, cij.norm())) {
        throw NumericalError(
            "structure_constants: basis does not close under the bracket");
      }
    }
  }
  return f;
}

}  // namespace cecoh
