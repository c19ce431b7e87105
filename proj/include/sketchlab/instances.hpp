#pragma once

#include "sketchlab/core.hpp"
#include "sketchlab/dense.hpp"
#include "sketchlab/embeddings.hpp"
#include "sketchlab/theory.hpp"

#include <string>
#include <vector>

namespace sketchlab {

enum class LsqKind { Coherent, Incoherent };
enum class PsdBasis { Identity, Dct };
enum class PsdSpectrumKind { Step, Poly };

inline const char* lsq_kind_name(LsqKind k) { return k == LsqKind::Coherent ? "coherent" : "incoherent"; }
inline const char* psd_basis_name(PsdBasis b) { return b == PsdBasis::Identity ? "identity" : "dct"; }
inline const char* psd_spectrum_name(PsdSpectrumKind s) { return s == PsdSpectrumKind::Step ? "step" : "poly"; }

template <class Scalar = double>
struct LeastSquaresInstance {
  Mat<Scalar> a;  // n x d
  Mat<Scalar> b;  // n x p
  Index r = 0;    // rank of a
  double optimal_residual_sq = 0.0;
  std::string name;

  template <class T>
  LeastSquaresInstance<T> cast() const {
    return {a.template cast<T>(), b.template cast<T>(), r, optimal_residual_sq, name};
  }
};

template <class Scalar = double>
struct PsdInstance {
  Mat<Scalar> h;              // n x n psd
  std::vector<double> eigs;   // nonincreasing
  Index r = 0;                // count of positive eigenvalues
  PsdBasis basis = PsdBasis::Identity;
  std::string name;

  Index n() const { return h.rows(); }
  /// Squared singular values of H itself (Frobenius-error bounds).
  SpectrumTail squared_spectrum() const {
    std::vector<double> v(eigs.size());
    for (std::size_t i = 0; i < eigs.size(); ++i) v[i] = eigs[i] * eigs[i];
    return SpectrumTail(std::move(v));
  }
  /// Eigenvalues of H (trace-error bounds).
  SpectrumTail trace_spectrum() const { return SpectrumTail(eigs); }

  template <class T>
  PsdInstance<T> cast() const {
    return {h.template cast<T>(), eigs, r, basis, name};
  }
};

template <class Scalar = double>
struct RectInstance {
  Mat<Scalar> a;  // d x n
  double amp = 1.0;
  Index q = 0, r = 0;
  std::vector<double> sv;  // nonincreasing singular values
  std::string name;

  SpectrumTail squared_spectrum() const { return SpectrumTail::from_singular_values(sv); }

  template <class T>
  RectInstance<T> cast() const {
    return {a.template cast<T>(), amp, q, r, sv, name};
  }
};

/// Least-squares pair with orthonormal columns in A and B = sum_i i e_i in
/// every column. Coherent: A = [I 0]'. Incoherent: first d columns of the
/// orthonormal DCT.
inline LeastSquaresInstance<double> make_lsq(LsqKind kind, Index n, Index d, Index p) {
  require(n >= 1 && d >= 1 && p >= 1 && d <= n, ErrorCode::DimensionMismatch,
          "need 1 <= d <= n and p >= 1");
  LeastSquaresInstance<double> inst;
  if (kind == LsqKind::Coherent) {
    inst.a = MatR::Zero(n, d);
    inst.a.topRows(d) = MatR::Identity(d, d);
  } else {
    inst.a = dct_cached(n)->leftCols(d);
  }
  inst.b = MatR(n, p);
  for (Index i = 0; i < n; ++i) inst.b.row(i).setConstant(static_cast<double>(i + 1));
  inst.r = numerical_rank<double>(inst.a);
  MatR xstar = pseudoinverse<double>(inst.a) * inst.b;
  inst.optimal_residual_sq = frob_sq<double>((inst.b - inst.a * xstar).eval());
  inst.name = lsq_kind_name(kind);
  return inst;
}

/// Psd test matrix H = Q Lambda Q'. Step: ten unit eigenvalues then 1e-5
/// (requires n >= 10). Poly: lambda_i = i^-2.
inline PsdInstance<double> make_psd(PsdBasis basis, PsdSpectrumKind spectrum, Index n) {
  require(n >= 1, ErrorCode::DimensionMismatch, "order must be positive");
  if (spectrum == PsdSpectrumKind::Step) {
    require(n >= 10, ErrorCode::DimensionMismatch, "step spectrum hardcodes ten unit eigenvalues");
  }
  PsdInstance<double> inst;
  inst.basis = basis;
  inst.eigs.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    if (spectrum == PsdSpectrumKind::Step) {
      inst.eigs[static_cast<std::size_t>(i)] = i < 10 ? 1.0 : 1e-5;
    } else {
      const double x = static_cast<double>(i + 1);
      inst.eigs[static_cast<std::size_t>(i)] = 1.0 / (x * x);
    }
  }
  inst.r = n;
  VecR lambda = Eigen::Map<const VecR>(inst.eigs.data(), n);
  if (basis == PsdBasis::Identity) {
    inst.h = lambda.asDiagonal();
  } else {
    const MatR& c = *dct_cached(n);
    inst.h = c * lambda.asDiagonal() * c.transpose();
    inst.h = ((inst.h + inst.h.transpose()) / 2.0).eval();
  }
  inst.name = std::string(psd_spectrum_name(spectrum)) + "/" + psd_basis_name(basis);
  return inst;
}

/// Diagonal psd matrix with eigenvalues (a x q, b x (r-q), 0 x (n-r)); the
/// worst case that saturates the low-rank approximation bounds as a grows.
inline PsdInstance<double> make_two_eig(double a, double b, Index q, Index r, Index n) {
  require(0.0 < b && b <= a, ErrorCode::ParameterOrderViolation, "need 0 < b <= a");
  require(0 <= q && q <= r && r <= n, ErrorCode::ParameterOrderViolation, "need q <= r <= n");
  PsdInstance<double> inst;
  inst.eigs.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    inst.eigs[static_cast<std::size_t>(i)] = i < q ? a : (i < r ? b : 0.0);
  }
  inst.r = r;
  inst.basis = PsdBasis::Identity;
  VecR lambda = Eigen::Map<const VecR>(inst.eigs.data(), n);
  inst.h = lambda.asDiagonal();
  inst.name = "two_eig";
  return inst;
}

/// d x n diagonal-pattern matrix with singular values (a x q, 1 x (r-q)).
inline RectInstance<double> make_rect_hard(double a, Index q, Index r, Index d, Index n) {
  require(a >= 1.0, ErrorCode::ParameterOrderViolation, "amplitude must be at least 1");
  require(0 <= q && q <= r && r <= std::min(d, n), ErrorCode::ParameterOrderViolation,
          "need q <= r <= min(d, n)");
  RectInstance<double> inst;
  inst.a = MatR::Zero(d, n);
  for (Index i = 0; i < r; ++i) inst.a(i, i) = i < q ? a : 1.0;
  inst.amp = a;
  inst.q = q;
  inst.r = r;
  inst.sv.resize(static_cast<std::size_t>(std::min(d, n)), 0.0);
  for (Index i = 0; i < r; ++i) inst.sv[static_cast<std::size_t>(i)] = i < q ? a : 1.0;
  inst.name = "rect_hard";
  return inst;
}

/// Conjugate by a Haar unitary; the spectrum is unchanged.
template <class Scalar>
PsdInstance<Scalar> randomize_basis(const PsdInstance<Scalar>& inst, RngStream rng) {
  EmbeddingSpec spec{EmbeddingKind::HaarOrthonormal, inst.n(), inst.n(), field_of<Scalar>(), 0, -1};
  Mat<Scalar> u = sample_embedding<Scalar>(spec, rng);
  PsdInstance<Scalar> out = inst;
  out.h = u * inst.h * u.adjoint();
  out.h = ((out.h + out.h.adjoint()) / Scalar(2.0)).eval();
  out.name = inst.name + "+rot";
  return out;
}

/// Two-sided rotation by independent Haar unitaries; singular values are
/// unchanged.
template <class Scalar>
RectInstance<Scalar> randomize_basis(const RectInstance<Scalar>& inst, RngStream rng) {
  const Index d = inst.a.rows();
  const Index n = inst.a.cols();
  RandomStream rs(rng);
  Mat<Scalar> gu = rs.gaussian<Scalar>(d, d);
  Mat<Scalar> gv = rs.gaussian<Scalar>(n, n);
  Mat<Scalar> u = thin_qr<Scalar>(gu).q;
  Mat<Scalar> v = thin_qr<Scalar>(gv).q;
  RectInstance<Scalar> out = inst;
  out.a = u * inst.a * v.adjoint();
  out.name = inst.name + "+rot";
  return out;
}

/// Dense Gaussian d x n target with full rank min(d, n); spectrum recorded
/// from its singular values.
inline RectInstance<double> make_random_rect(Index d, Index n, RngStream rng) {
  require(d >= 1 && n >= 1, ErrorCode::DimensionMismatch, "dimensions must be positive");
  RandomStream rs(rng);
  RectInstance<double> inst;
  inst.a = rs.gaussian<double>(d, n);
  Eigen::JacobiSVD<MatR> svd(inst.a);
  inst.sv.assign(svd.singularValues().data(),
                 svd.singularValues().data() + svd.singularValues().size());
  inst.r = numerical_rank<double>(inst.a);
  inst.q = 0;
  inst.amp = 1.0;
  inst.name = "random_rect";
  return inst;
}

}  // namespace sketchlab
