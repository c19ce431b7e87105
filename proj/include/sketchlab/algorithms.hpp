#pragma once

#include "sketchlab/core.hpp"
#include "sketchlab/dense.hpp"
#include "sketchlab/embeddings.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <utility>

namespace sketchlab {

template <class Scalar>
struct SketchSolveResult {
  Mat<Scalar> xhat;            // d x p sketched solution
  double residual_sq;          // residual of the original problem at xhat
  double optimal_residual_sq;  // residual of the exact least-squares solution
};

template <class Scalar>
struct LowRankResult {
  Mat<Scalar> left;   // approximation = left * right
  Mat<Scalar> right;
  double err_sq;      // squared Frobenius error, or trace error for Nystrom
};

struct ResidualSplit {
  double cross_term_sq;  // ||(O*Q)^+ (O*Qp) Qp*B||_F^2
  double optimal_sq;     // ||Qp*B||_F^2
};

namespace detail {

/// Orthonormal basis of range(M) with rank detection by column-pivoted QR,
/// extended to a full unitary. Returns (Q_full, rank).
template <class Scalar>
std::pair<Mat<Scalar>, Index> full_unitary_basis(const Mat<Scalar>& m) {
  Eigen::ColPivHouseholderQR<Mat<Scalar>> qr(m);
  qr.setThreshold(static_cast<double>(std::max(m.rows(), m.cols())) * machine_eps());
  const Index rank = qr.rank();
  Mat<Scalar> q_full = qr.householderQ() * Mat<Scalar>::Identity(m.rows(), m.rows());
  return {std::move(q_full), rank};
}

/// Orthonormal basis of range(M) only.
template <class Scalar>
Mat<Scalar> range_basis(const Mat<Scalar>& m) {
  Eigen::ColPivHouseholderQR<Mat<Scalar>> qr(m);
  qr.setThreshold(static_cast<double>(std::max(m.rows(), m.cols())) * machine_eps());
  const Index rank = qr.rank();
  return qr.householderQ() * Mat<Scalar>::Identity(m.rows(), rank);
}

template <class Scalar>
void check_psd(const Mat<Scalar>& h) {
  require(h.rows() == h.cols(), ErrorCode::NotPsd, "matrix is not square");
  require(is_hermitian(h), ErrorCode::NotPsd, "matrix is not conjugate symmetric");
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(h, Eigen::EigenvaluesOnly);
  const double lam_max = eig.eigenvalues().maxCoeff();
  require(eig.eigenvalues().minCoeff() >= -1e-10 * std::max(lam_max, 0.0), ErrorCode::NotPsd,
          "matrix has a negative eigenvalue");
}

}  // namespace detail

/// Solve the sketched least-squares problem: Xhat = (O*A)^+ (O*B). The
/// residual is always evaluated against the original problem.
template <class Scalar>
SketchSolveResult<Scalar> sketch_and_solve(const Mat<Scalar>& a, const Mat<Scalar>& b,
                                           const Sketcher<Scalar>& omega) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "A and B row counts differ");
  require(omega.rows() == a.rows(), ErrorCode::DimensionMismatch,
          "embedding rows must match problem rows");
  Mat<Scalar> sa = omega.adjoint_times(a);
  Mat<Scalar> sb = omega.adjoint_times(b);
  Mat<Scalar> xhat = pseudoinverse<Scalar>(sa) * sb;
  const double residual_sq = frob_sq<Scalar>((b - a * xhat).eval());
  Mat<Scalar> xstar = pseudoinverse<Scalar>(a) * b;
  const double optimal_sq = frob_sq<Scalar>((b - a * xstar).eval());
  return {std::move(xhat), residual_sq, optimal_sq};
}

template <class Scalar>
SketchSolveResult<Scalar> sketch_and_solve(const Mat<Scalar>& a, const Mat<Scalar>& b,
                                           const Mat<Scalar>& omega) {
  return sketch_and_solve<Scalar>(a, b, Sketcher<Scalar>(omega));
}

/// Sketched solution and original-problem residual from precomputed sketches;
/// the per-trial path used by the Monte Carlo engine.
template <class Scalar>
std::pair<Mat<Scalar>, double> solve_sketched(const Mat<Scalar>& a, const Mat<Scalar>& b,
                                              const Mat<Scalar>& sa, const Mat<Scalar>& sb) {
  Mat<Scalar> xhat = pseudoinverse<Scalar>(sa) * sb;
  const double residual_sq = frob_sq<Scalar>((b - a * xhat).eval());
  return {std::move(xhat), residual_sq};
}

/// Exact two-term split of the sketched residual: the optimal residual plus
/// a cross term driven by the embedding. Requires rank(A) <= ell.
template <class Scalar>
ResidualSplit residual_decomposition(const Mat<Scalar>& a, const Mat<Scalar>& b,
                                     const Sketcher<Scalar>& omega) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "A and B row counts differ");
  require(omega.rows() == a.rows(), ErrorCode::DimensionMismatch,
          "embedding rows must match problem rows");
  auto [q_full, rank] = detail::full_unitary_basis<Scalar>(a);
  require(rank <= omega.cols(), ErrorCode::RankExceedsSketch,
          "rank of A exceeds the sketch dimension");
  Mat<Scalar> q = q_full.leftCols(rank);
  Mat<Scalar> q_perp = q_full.rightCols(a.rows() - rank);
  Mat<Scalar> oq = omega.adjoint_times(q);
  Mat<Scalar> oq_perp = omega.adjoint_times(q_perp);
  Mat<Scalar> tail = q_perp.adjoint() * b;
  const double cross = frob_sq<Scalar>((pseudoinverse<Scalar>(oq) * oq_perp * tail).eval());
  return {cross, frob_sq<Scalar>(tail)};
}

template <class Scalar>
ResidualSplit residual_decomposition(const Mat<Scalar>& a, const Mat<Scalar>& b,
                                     const Mat<Scalar>& omega) {
  return residual_decomposition<Scalar>(a, b, Sketcher<Scalar>(omega));
}

/// Rank-ell approximation Q (Q* A) with Q an orthonormal basis of range(A Omega).
template <class Scalar>
LowRankResult<Scalar> randomized_svd(const Mat<Scalar>& a, const Sketcher<Scalar>& omega) {
  require(omega.rows() == a.cols(), ErrorCode::DimensionMismatch,
          "embedding rows must match target columns");
  Mat<Scalar> y = omega.right_times(a);
  Mat<Scalar> q = detail::range_basis<Scalar>(y);
  Mat<Scalar> coeffs = q.adjoint() * a;
  const double err_sq = frob_sq<Scalar>((a - q * coeffs).eval());
  return {std::move(q), std::move(coeffs), err_sq};
}

template <class Scalar>
LowRankResult<Scalar> randomized_svd(const Mat<Scalar>& a, const Mat<Scalar>& omega) {
  return randomized_svd<Scalar>(a, Sketcher<Scalar>(omega));
}

/// Nystrom approximation H<O> = HO (O*HO)^+ O*H of a psd matrix, returned in
/// factored form Z Z* with Z = HO V L^{-1/2} from an eigenvalue-cutoff
/// pseudoinverse of O*HO (stable under huge spectral spreads).
/// err_sq is the trace error tr(H - H<O>).
template <class Scalar>
LowRankResult<Scalar> nystrom(const Mat<Scalar>& h, const Sketcher<Scalar>& omega,
                              bool validate_psd = true) {
  require(omega.rows() == h.rows() && h.rows() == h.cols(), ErrorCode::DimensionMismatch,
          "embedding rows must match matrix order");
  if (validate_psd) detail::check_psd(h);
  Mat<Scalar> y = omega.right_times(h);  // H Omega
  Mat<Scalar> m = omega.adjoint_times(y);
  m = ((m + m.adjoint()) / Scalar(2.0)).eval();
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(m);
  const auto& vals = eig.eigenvalues();
  const double cutoff = static_cast<double>(m.rows()) * detail::machine_eps() *
                        std::max(vals.maxCoeff(), 0.0);
  Index first_kept = vals.size();
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > cutoff) {
      first_kept = i;
      break;
    }
  }
  const Index kept = vals.size() - first_kept;
  Vec<double> inv_sqrt(kept);
  for (Index i = 0; i < kept; ++i) inv_sqrt(i) = 1.0 / std::sqrt(vals(first_kept + i));
  Mat<Scalar> z = y * (eig.eigenvectors().rightCols(kept) * inv_sqrt.cast<Scalar>().asDiagonal());
  const double err_sq = std::real(h.trace()) - frob_sq<Scalar>(z);
  Mat<Scalar> z_adj = z.adjoint();
  return {std::move(z), std::move(z_adj), err_sq};
}

template <class Scalar>
LowRankResult<Scalar> nystrom(const Mat<Scalar>& h, const Mat<Scalar>& omega,
                              bool validate_psd = true) {
  return nystrom<Scalar>(h, Sketcher<Scalar>(omega), validate_psd);
}

/// Materialized Nystrom approximation Z Z*.
template <class Scalar>
Mat<Scalar> nystrom_matrix(const LowRankResult<Scalar>& result) {
  return result.left * result.left.adjoint();
}

/// Nystrom residual H - H<O>; psd up to roundoff.
template <class Scalar>
Mat<Scalar> schur_complement(const Mat<Scalar>& h, const Sketcher<Scalar>& omega,
                             bool validate_psd = true) {
  auto ny = nystrom<Scalar>(h, omega, validate_psd);
  Mat<Scalar> s = h - nystrom_matrix(ny);
  return ((s + s.adjoint()) / Scalar(2.0)).eval();
}

template <class Scalar>
Mat<Scalar> schur_complement(const Mat<Scalar>& h, const Mat<Scalar>& omega,
                             bool validate_psd = true) {
  return schur_complement<Scalar>(h, Sketcher<Scalar>(omega), validate_psd);
}

/// Generalized Nystrom approximation A<O, Psi> = AO (Psi*AO)^+ Psi*A in
/// factored form (AO (Psi*AO)^+, Psi*A).
template <class Scalar>
LowRankResult<Scalar> generalized_nystrom(const Mat<Scalar>& a, const Sketcher<Scalar>& omega,
                                          const Sketcher<Scalar>& psi) {
  require(omega.rows() == a.cols(), ErrorCode::DimensionMismatch,
          "right embedding rows must match target columns");
  require(psi.rows() == a.rows(), ErrorCode::DimensionMismatch,
          "left embedding rows must match target rows");
  Mat<Scalar> y = omega.right_times(a);       // d x ell
  Mat<Scalar> w = psi.adjoint_times(a);       // k x n
  Mat<Scalar> c = psi.adjoint_times(y);       // k x ell
  Mat<Scalar> left = y * pseudoinverse<Scalar>(c);
  const double err_sq = frob_sq<Scalar>((a - left * w).eval());
  return {std::move(left), std::move(w), err_sq};
}

template <class Scalar>
LowRankResult<Scalar> generalized_nystrom(const Mat<Scalar>& a, const Mat<Scalar>& omega,
                                          const Mat<Scalar>& psi) {
  return generalized_nystrom<Scalar>(a, Sketcher<Scalar>(omega), Sketcher<Scalar>(psi));
}

}  // namespace sketchlab
