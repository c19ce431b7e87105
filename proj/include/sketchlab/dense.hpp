#pragma once

#include "sketchlab/core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace sketchlab {

template <class Scalar>
struct QrResult {
  Mat<Scalar> q;  // orthonormal columns
  Mat<Scalar> r;  // upper triangular, real nonnegative diagonal
};

template <class Scalar>
struct TruncatedSvd {
  Mat<Scalar> approx;  // best rank-q approximation
  double tail_sq;      // squared Frobenius distance to it
};

namespace detail {

inline double machine_eps() { return std::numeric_limits<double>::epsilon(); }

/// Rescale Q and R so the diagonal of R is real and nonnegative. A Gaussian
/// matrix factored this way has a Haar-distributed Q factor.
template <class Scalar>
void canonicalize_qr(Mat<Scalar>& q, Mat<Scalar>& r) {
  const Index k = std::min(r.rows(), r.cols());
  for (Index i = 0; i < k; ++i) {
    const Scalar d = r(i, i);
    const double mag = std::abs(d);
    if (mag == 0.0) continue;
    const Scalar phase = d / Scalar(mag);
    q.col(i) *= phase;
    r.row(i) *= Scalar(1.0) / phase;
    r(i, i) = Scalar(mag);  // clear roundoff in the imaginary part
  }
}

}  // namespace detail

/// Thin QR factorization M = QR with Q'Q = I and a canonical sign convention
/// (diagonal of R real and nonnegative). Throws RankDeficient if a diagonal
/// entry of R falls below max(rows, cols) * eps * max_diag.
template <class Scalar>
QrResult<Scalar> thin_qr(const Mat<Scalar>& m) {
  require(m.rows() >= m.cols() && m.cols() >= 1, ErrorCode::DimensionMismatch,
          "thin_qr expects a tall matrix with at least one column");
  Eigen::HouseholderQR<Mat<Scalar>> qr(m);
  Mat<Scalar> q = qr.householderQ() * Mat<Scalar>::Identity(m.rows(), m.cols());
  Mat<Scalar> r = qr.matrixQR().topRows(m.cols()).template triangularView<Eigen::Upper>();

  double max_diag = 0.0;
  for (Index i = 0; i < m.cols(); ++i) max_diag = std::max(max_diag, std::abs(r(i, i)));
  const double tol = static_cast<double>(std::max(m.rows(), m.cols())) * detail::machine_eps() * max_diag;
  for (Index i = 0; i < m.cols(); ++i) {
    if (std::abs(r(i, i)) <= tol) {
      fail(ErrorCode::RankDeficient, "matrix does not have full column rank");
    }
  }
  detail::canonicalize_qr(q, r);
  return {std::move(q), std::move(r)};
}

/// Best rank-q approximation together with the squared Frobenius tail
/// (the sum of squared singular values beyond q).
template <class Scalar>
TruncatedSvd<Scalar> truncated_svd(const Mat<Scalar>& m, Index q) {
  require(q >= 0 && q <= std::min(m.rows(), m.cols()), ErrorCode::DimensionMismatch,
          "truncation rank out of range");
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Mat<Scalar> approx = Mat<Scalar>::Zero(m.rows(), m.cols());
  if (q > 0) {
    approx = svd.matrixU().leftCols(q) * sv.head(q).asDiagonal() *
             svd.matrixV().leftCols(q).adjoint();
  }
  double tail = 0.0;
  for (Index i = sv.size() - 1; i >= q; --i) tail += sv(i) * sv(i);
  return {std::move(approx), tail};
}

/// Moore-Penrose pseudoinverse with the standard rank cutoff
/// sigma_i <= max(rows, cols) * eps * sigma_max.
template <class Scalar>
Mat<Scalar> pseudoinverse(const Mat<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return Mat<Scalar>::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff =
      static_cast<double>(std::max(m.rows(), m.cols())) * detail::machine_eps() * sv(0);
  Vec<double> inv = Vec<double>::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.cast<Scalar>().asDiagonal() * svd.matrixU().adjoint();
}

/// Numerical rank under the pseudoinverse cutoff.
template <class Scalar>
Index numerical_rank(const Mat<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat<Scalar>> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff =
      static_cast<double>(std::max(m.rows(), m.cols())) * detail::machine_eps() * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

/// Orthonormal DCT-II matrix of order n. Columns are the cosine basis
/// vectors; the first column is constant 1/sqrt(n).
inline MatR dct_orthonormal(Index n) {
  require(n >= 1, ErrorCode::DimensionMismatch, "DCT order must be positive");
  MatR c(n, n);
  const double dn = static_cast<double>(n);
  for (Index k = 0; k < n; ++k) {
    const double scale = k == 0 ? std::sqrt(1.0 / dn) : std::sqrt(2.0 / dn);
    for (Index j = 0; j < n; ++j) {
      c(j, k) = scale * std::cos(std::numbers::pi * (2.0 * static_cast<double>(j) + 1.0) *
                                 static_cast<double>(k) / (2.0 * dn));
    }
  }
  return c;
}

/// Shared read-only DCT matrices, keyed by order. Samplers hit the same few
/// orders thousands of times per run.
inline std::shared_ptr<const MatR> dct_cached(Index n) {
  static std::mutex mutex;
  static std::map<Index, std::shared_ptr<const MatR>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_shared<const MatR>(dct_orthonormal(n))).first;
  }
  return it->second;
}

template <class Scalar>
bool is_hermitian(const Mat<Scalar>& h, double rel_tol = 1e-10) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::sqrt(frob_sq<Scalar>(h));
  Mat<Scalar> diff = h - h.adjoint();
  return std::sqrt(frob_sq<Scalar>(diff)) <= rel_tol * std::max(scale, 1e-300);
}

/// Inverse square root of a Hermitian positive definite matrix:
/// returns S = S* with S H S = I. Throws NotPositiveDefinite when the
/// smallest eigenvalue is at or below n * eps * lambda_max.
template <class Scalar>
Mat<Scalar> psd_inv_sqrt(const Mat<Scalar>& h) {
  require(h.rows() == h.cols(), ErrorCode::DimensionMismatch, "matrix must be square");
  require(is_hermitian(h), ErrorCode::NotPositiveDefinite, "matrix is not conjugate symmetric");
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(h);
  const auto& vals = eig.eigenvalues();
  const double lam_max = vals(vals.size() - 1);
  const double tol = static_cast<double>(h.rows()) * detail::machine_eps() * std::max(lam_max, 0.0);
  if (vals(0) <= tol) {
    fail(ErrorCode::NotPositiveDefinite, "matrix has a nonpositive eigenvalue");
  }
  Vec<double> inv_sqrt = vals.array().rsqrt();
  return eig.eigenvectors() * inv_sqrt.cast<Scalar>().asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace sketchlab
