#include "cecoh/deformation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cecoh {

double first_order_residual(const SymmetryPair& pair, const ComplexMatrix& dh1,
                            const ComplexMatrix& ds1) {
  return (commutator(pair.hamiltonian, ds1) - commutator(pair.symmetry, dh1)).norm();
}

DeformationProblem::DeformationProblem(SymmetryPair p, ComplexMatrix dh1,
                                       std::optional<ComplexMatrix> ds1)
    : pair(std::move(p)), delta_h1(std::move(dh1)), delta_s1(std::move(ds1)) {
  if (delta_h1.rows() != pair.dim || delta_h1.cols() != pair.dim) {
    throw InputError("DeformationProblem: delta_h1 dimension mismatch");
  }
  require_hermitian(delta_h1, pair.tol.hermiticity, "DeformationProblem delta_h1");
  if (delta_s1) {
    if (delta_s1->rows() != pair.dim || delta_s1->cols() != pair.dim) {
      throw InputError("DeformationProblem: delta_s1 dimension mismatch");
    }
    require_hermitian(*delta_s1, pair.tol.hermiticity, "DeformationProblem delta_s1");
    const double res = first_order_residual(pair, delta_h1, *delta_s1);
    const double scale = std::max(1.0, pair.hamiltonian.norm() * delta_s1->norm() +
                                           pair.symmetry.norm() * delta_h1.norm());
    if (res > pair.tol.first_order * scale) {
      std::ostringstream os;
      os << "DeformationProblem: supplied delta_s1 is not a 1-cocycle, residual " << res;
      throw InputError(os.str());
    }
  }
}

FirstOrderResult solve_first_order(const DeformationProblem& prob) {
  return solve_first_order(prob, joint_diagonalize(prob.pair, prob.pair.tol.cluster));
}

FirstOrderResult solve_first_order(const DeformationProblem& prob,
                                   const JointSpectrum& sp) {
  FirstOrderResult out;
  if (prob.delta_s1) {
    out.solvable = true;
    out.supplied = true;
    out.delta_s1 = *prob.delta_s1;
    out.residual = first_order_residual(prob.pair, prob.delta_h1, out.delta_s1);
    return out;
  }

  const int n = prob.pair.dim;
  const double gate = prob.pair.tol.first_order * std::max(1.0, prob.delta_h1.norm());
  ComplexMatrix ds = ComplexMatrix::Zero(n, n);
  for (size_t a = 0; a < sp.sectors.size(); ++a) {
    for (size_t b = a + 1; b < sp.sectors.size(); ++b) {
      const double lam = sp.sectors[a].lambda - sp.sectors[b].lambda;
      const double mu = sp.sectors[a].mu - sp.sectors[b].mu;
      const ComplexMatrix blk =
          sp.sectors[a].projector * prob.delta_h1 * sp.sectors[b].projector;
      if (std::abs(lam) > sp.cluster_tol) {
        const ComplexMatrix scaled = (mu / lam) * blk;
        ds += scaled + scaled.adjoint();
      } else if (std::sqrt(2.0) * blk.norm() > gate) {
        // lambda_ab = 0 forces the block of delta_h1 to vanish; it does not
        out.violations.push_back({static_cast<int>(a), static_cast<int>(b),
                                  std::sqrt(2.0) * blk.norm()});
      }
    }
  }
  if (!out.violations.empty()) {
    out.solvable = false;
    return out;
  }
  out.solvable = true;
  out.delta_s1 = std::move(ds);
  out.residual = first_order_residual(prob.pair, prob.delta_h1, out.delta_s1);
  return out;
}

namespace {

ObstructionClass make_class(const ComplexMatrix& rep, const CommutantBasis& cb) {
  ObstructionClass oc;
  oc.representative = rep;
  oc.observable = Complex(0, -1) * rep;
  oc.norm = rep.norm();
  oc.coefficients.reserve(cb.basis.size());
  for (const auto& e : cb.basis) oc.coefficients.push_back(real_inner(rep, e));
  return oc;
}

}  // namespace

ObstructionClass obstruction_second_order(const DeformationProblem& prob,
                                          const ComplexMatrix& ds1) {
  const JointSpectrum sp = joint_diagonalize(prob.pair, prob.pair.tol.cluster);
  return obstruction_second_order(prob, ds1, sp, commutant_basis(sp));
}

ObstructionClass obstruction_second_order(const DeformationProblem& prob,
                                          const ComplexMatrix& ds1,
                                          const JointSpectrum& sp,
                                          const CommutantBasis& cb) {
  require_hermitian(ds1, prob.pair.tol.hermiticity, "obstruction_second_order ds1");
  const double res = first_order_residual(prob.pair, prob.delta_h1, ds1);
  const double scale = std::max(1.0, prob.pair.hamiltonian.norm() * ds1.norm() +
                                         prob.pair.symmetry.norm() * prob.delta_h1.norm());
  if (res > prob.pair.tol.first_order * scale) {
    std::ostringstream os;
    os << "obstruction_second_order: (delta_h1, ds1) is not a 1-cocycle, residual "
       << res;
    throw InputError(os.str());
  }

  // class of [i dH, i dS] = -[dH, dS], projected on the diagonal blocks
  const ComplexMatrix rep =
      diagonal_part(-commutator(prob.delta_h1, ds1), sp);
  ObstructionClass oc = make_class(rep, cb);

  if (prob.pair.dim <= prob.pair.tol.feasibility_max_dim) {
    const double fres = quadratic_feasibility_residual(prob, ds1);
    oc.feasibility_residual = fres;
    if (std::abs(fres - oc.norm) > 1e-7 * std::max(1.0, oc.norm)) {
      std::ostringstream os;
      os << "obstruction_second_order: least-squares feasibility residual " << fres
         << " disagrees with the class norm " << oc.norm;
      throw NumericalError(os.str());
    }
  }
  return oc;
}

double quadratic_feasibility_residual(const DeformationProblem& prob,
                                      const ComplexMatrix& ds1) {
  const int n = prob.pair.dim;
  const int nb = n * n;
  const RealMatrix d1 = realified_d1(prob.pair);
  // order-2 equation: [H, y] - [S, x] = [dH1, dS1] in u(V)
  const ComplexMatrix rhs = commutator(prob.delta_h1, ds1);
  const auto basis = u_basis(n);
  RealVector b(nb);
  for (int i = 0; i < nb; ++i) b(i) = real_inner(rhs, basis[i]);
  // JacobiSVD: BDCSVD miscomputes repeated singular values on wide inputs
  // (Eigen 3.4.0); the truncation is floored at the operator scale
  Eigen::JacobiSVD<RealMatrix> svd(d1, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  const double floor =
      std::max(prob.pair.hamiltonian.norm(), prob.pair.symmetry.norm());
  const double cut = prob.pair.tol.rank * std::max(smax, floor);
  svd.setThreshold(smax > 0 ? cut / smax : 1.0);
  const RealVector v = svd.solve(b);
  return (d1 * v - b).norm();
}

namespace {

double norm_or_zero(const ComplexMatrix& m) { return m.size() ? m.norm() : 0.0; }

// least-squares fit of log r against log t
double loglog_slope(const std::vector<std::pair<double, double>>& profile) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(profile.size());
  for (const auto& [t, r] : profile) {
    const double x = std::log(t), y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ContinuationResult continue_series(const DeformationProblem& prob, int order) {
  if (order < 2) throw InputError("continue_series: order must be at least 2");
  const JointSpectrum sp = joint_diagonalize(prob.pair, prob.pair.tol.cluster);
  const CommutantBasis cb = commutant_basis(sp);
  const int n = prob.pair.dim;
  const int nz = cb.size();

  ContinuationResult out;
  out.first_order = solve_first_order(prob, sp);
  if (!out.first_order.solvable) {
    std::ostringstream os;
    os << "continue_series: no first-order completion, " << out.first_order.violations.size()
       << " violating block(s)";
    throw InputError(os.str());
  }

  // anti-Hermitian series coefficients
  std::vector<ComplexMatrix> Hs{prob.pair.anti_h(), Complex(0, 1) * prob.delta_h1};
  std::vector<ComplexMatrix> Ss{prob.pair.anti_s(),
                                Complex(0, 1) * out.first_order.delta_s1};

  // Z-parts of the first-order data drive the class at every later order; the
  // diagonal blocks of each new coefficient are chosen by least squares to
  // cancel the class one order ahead.
  const ComplexMatrix zh = diagonal_part(Hs[1], sp);
  const ComplexMatrix zs = diagonal_part(Ss[1], sp);
  RealMatrix M(nz, 2 * nz);
  for (int j = 0; j < nz; ++j) {
    const ComplexMatrix sh = -commutator(zs, cb.basis[j]);  // z_H column
    const ComplexMatrix hh = commutator(zh, cb.basis[j]);   // z_S column
    for (int i = 0; i < nz; ++i) {
      M(i, j) = real_inner(sh, cb.basis[i]);
      M(i, nz + j) = real_inner(hh, cb.basis[i]);
    }
  }
  Eigen::JacobiSVD<RealMatrix> msvd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& msv = msvd.singularValues();
  const double mscale = std::max({zh.norm(), zs.norm(), 1e-300});
  const double mcut = 1e-9 * std::max(msv.size() ? msv(0) : 0.0, mscale);
  auto lookahead_z = [&](const RealVector& c0) {
    RealVector z = RealVector::Zero(2 * nz);
    const RealVector w = msvd.matrixU().transpose() * c0;
    RealVector shrink = RealVector::Zero(msv.size());
    bool any = false;
    for (Eigen::Index k = 0; k < msv.size(); ++k) {
      if (msv(k) > mcut) {
        shrink(k) = w(k) / msv(k);
        any = true;
      }
    }
    if (any) z = msvd.matrixV() * shrink;
    return z;
  };

  for (int m = 2; m <= order; ++m) {
    ComplexMatrix R = ComplexMatrix::Zero(n, n);
    double scale = 0;
    for (int k = 1; k < m; ++k) {
      R -= commutator(Hs[k], Ss[m - k]);
      scale += Hs[k].norm() * Ss[m - k].norm();
    }
    const ComplexMatrix Rdiag = diagonal_part(R, sp);
    const double gate = prob.pair.tol.obstruction * scale;
    if (Rdiag.norm() > gate) {
      out.obstructed = true;
      out.obstructed_order = m;
      out.obstruction = make_class(ComplexMatrix(-Rdiag), cb);
      if (m == 2 && prob.pair.dim <= prob.pair.tol.feasibility_max_dim) {
        out.obstruction->feasibility_residual =
            quadratic_feasibility_residual(prob, out.first_order.delta_s1);
      }
      return out;
    }

    const Cochain sol = homotopy(Cochain::degree2(ComplexMatrix(R - Rdiag)), sp);
    ComplexMatrix x = sol.x_H;
    ComplexMatrix y = sol.y_S;
    if (m < order && nz > 0) {
      ComplexMatrix R1 = ComplexMatrix::Zero(n, n);
      for (int k = 1; k <= m; ++k) {
        const ComplexMatrix& hk = (k == m) ? x : Hs[k];
        const ComplexMatrix& sk = (m + 1 - k == m) ? y : Ss[m + 1 - k];
        R1 -= commutator(hk, sk);
      }
      RealVector c0(nz);
      for (int i = 0; i < nz; ++i) c0(i) = real_inner(R1, cb.basis[i]);
      const RealVector z = lookahead_z(c0);
      for (int j = 0; j < nz; ++j) {
        x += z(j) * cb.basis[j].inner;
        y += z(nz + j) * cb.basis[j].inner;
      }
    }
    Hs.push_back(std::move(x));
    Ss.push_back(std::move(y));
  }

  DeformationSeries series;
  series.order = order;
  series.gauge =
      "diagonal blocks chosen by least squares in Z to cancel the next-order "
      "class; off-diagonal blocks from the blockwise homotopy";
  const Complex mi(0, -1);
  for (int k = 0; k <= order; ++k) {
    series.h_coeffs.push_back(mi * Hs[k]);
    series.s_coeffs.push_back(mi * Ss[k]);
  }

  // tail of the commutator series: orders N+1 .. 2N are the exact remainder of
  // the truncated curve; evaluating them directly avoids the rounding floor a
  // full commutator evaluation would hit at small t
  std::vector<ComplexMatrix> tail;
  double cscale = 0;
  for (int m = order + 1; m <= 2 * order; ++m) {
    ComplexMatrix C = ComplexMatrix::Zero(n, n);
    for (int k = m - order; k <= order; ++k) C += commutator(Hs[k], Ss[m - k]);
    cscale = std::max(cscale, C.norm());
    tail.push_back(std::move(C));
  }
  const int samples = 9;
  for (int i = 0; i < samples; ++i) {
    const double t = std::pow(10.0, -3.0 + 2.0 * i / (samples - 1));
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (int m = order + 1; m <= 2 * order; ++m) {
      acc += std::pow(t, m) * tail[m - order - 1];
    }
    series.residual_profile.emplace_back(t, acc.norm());
  }

  const double first_scale =
      std::max(1.0, norm_or_zero(Hs[1]) * norm_or_zero(Ss[1]));
  bool degenerate_profile = false;
  for (const auto& [t, r] : series.residual_profile) {
    if (r <= 0.0) degenerate_profile = true;
  }
  if (cscale <= 1e-12 * first_scale || degenerate_profile) {
    series.profile_exact = true;
    series.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    series.fitted_slope = loglog_slope(series.residual_profile);
    if (std::abs(series.fitted_slope - (order + 1)) > 0.3) {
      std::ostringstream os;
      os << "continue_series: truncation residual slope " << series.fitted_slope
         << " is incompatible with order " << order;
      throw NumericalError(os.str());
    }
  }
  out.series = std::move(series);
  return out;
}

AnomalyReport anomaly_report(const DeformationProblem& prob) {
  AnomalyReport rep;
  rep.spectrum = joint_diagonalize(prob.pair, prob.pair.tol.cluster);
  rep.coh_theorem = cohomology_theorem(rep.spectrum);
  rep.coh_brute = cohomology_bruteforce(prob.pair);
  if (rep.coh_theorem.dims != rep.coh_brute.dims) {
    throw NumericalError("anomaly_report: cohomology methods disagree");
  }
  rep.nondegenerate = true;
  for (const auto& s : rep.spectrum.sectors) {
    if (s.multiplicity != 1) rep.nondegenerate = false;
  }
  rep.first_order = solve_first_order(prob, rep.spectrum);
  if (!rep.first_order.solvable) {
    rep.anomaly = false;  // already fails at first order; no second-order class
    return rep;
  }
  const CommutantBasis cb = commutant_basis(rep.spectrum);
  rep.obstruction = obstruction_second_order(prob, rep.first_order.delta_s1,
                                             rep.spectrum, cb);
  rep.obstruction_gate = prob.pair.tol.obstruction *
                         prob.delta_h1.norm() * rep.first_order.delta_s1.norm();
  rep.anomaly = rep.obstruction->norm > rep.obstruction_gate;
  if (rep.nondegenerate && rep.anomaly) {
    throw NumericalError(
        "anomaly_report: nonzero obstruction on a nondegenerate spectrum; "
        "this contradicts the vanishing guarantee and signals a bug");
  }
  return rep;
}

}  // namespace cecoh
