#pragma once

#include "sketchlab/core.hpp"
#include "sketchlab/dense.hpp"
#include "sketchlab/rng.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sketchlab {

enum class EmbeddingKind {
  Gaussian,
  HaarOrthonormal,
  Sign,
  Uniform,
  SparseIID,
  SparseStack,
  Srtt,
  Givens,
};

inline const char* embedding_name(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::Gaussian: return "gaussian";
    case EmbeddingKind::HaarOrthonormal: return "haar";
    case EmbeddingKind::Sign: return "sign";
    case EmbeddingKind::Uniform: return "uniform";
    case EmbeddingKind::SparseIID: return "sparse_iid";
    case EmbeddingKind::SparseStack: return "sparse_stack";
    case EmbeddingKind::Srtt: return "srtt";
    case EmbeddingKind::Givens: return "givens";
  }
  return "unknown";
}

inline std::optional<EmbeddingKind> embedding_from_name(const std::string& name) {
  for (EmbeddingKind k :
       {EmbeddingKind::Gaussian, EmbeddingKind::HaarOrthonormal, EmbeddingKind::Sign,
        EmbeddingKind::Uniform, EmbeddingKind::SparseIID, EmbeddingKind::SparseStack,
        EmbeddingKind::Srtt, EmbeddingKind::Givens}) {
    if (name == embedding_name(k)) return k;
  }
  return std::nullopt;
}

/// True for embeddings whose error law tracks the Gaussian prediction;
/// false for the orthonormal-column family (Haar, SRTT, Givens).
inline bool in_gaussian_class(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::Gaussian:
    case EmbeddingKind::Sign:
    case EmbeddingKind::Uniform:
    case EmbeddingKind::SparseIID:
    case EmbeddingKind::SparseStack:
      return true;
    default:
      return false;
  }
}

struct EmbeddingSpec {
  EmbeddingKind kind = EmbeddingKind::Gaussian;
  Index n = 0;    // ambient rows
  Index ell = 0;  // sketch columns
  Field field = Field::Real;
  int zeta = 0;         // SparseIID / SparseStack only
  long rotations = -1;  // Givens only; -1 means ceil(4 n ln n)

  long effective_rotations() const {
    if (rotations >= 0) return rotations;
    const double dn = static_cast<double>(n);
    return static_cast<long>(std::ceil(4.0 * dn * std::log(dn)));
  }

  void validate() const {
    require(n >= 1 && ell >= 1, ErrorCode::InvalidSpec, "dimensions must be positive");
    require(ell <= n, ErrorCode::InvalidSpec, "sketch dimension exceeds ambient dimension");
    const bool structured = kind != EmbeddingKind::Gaussian && kind != EmbeddingKind::HaarOrthonormal;
    if (structured) {
      require(field == Field::Real, ErrorCode::InvalidSpec,
              "structured embeddings are defined over the reals");
    }
    if (kind == EmbeddingKind::SparseIID || kind == EmbeddingKind::SparseStack) {
      require(zeta >= 1, ErrorCode::InvalidSpec, "sparsity parameter must be at least 1");
    }
  }
};

namespace detail {

struct SrttForm {
  std::shared_ptr<const MatR> dct;  // orthonormal DCT-II of order n
  VecR d1, d2;                      // independent +/-1 diagonals
  std::vector<Index> rows;          // subsampled coordinates
};

struct GivensRotation {
  Index i, j;
  double c, s;
};

struct GivensForm {
  Index n = 0;
  std::vector<GivensRotation> rotations;
  std::vector<Index> cols;
};

// In-place right multiplication Z <- Z * V with V the accumulated rotation
// product; mirrored by adjoint_apply below.
inline void givens_right_apply(const GivensForm& g, MatR& z) {
  for (auto it = g.rotations.rbegin(); it != g.rotations.rend(); ++it) {
    const auto& r = *it;
    for (Index row = 0; row < z.rows(); ++row) {
      const double zi = z(row, r.i);
      const double zj = z(row, r.j);
      z(row, r.i) = r.c * zi + r.s * zj;
      z(row, r.j) = -r.s * zi + r.c * zj;
    }
  }
}

// In-place Y <- V* Y.
inline void givens_adjoint_apply(const GivensForm& g, MatR& y) {
  for (auto it = g.rotations.rbegin(); it != g.rotations.rend(); ++it) {
    const auto& r = *it;
    for (Index col = 0; col < y.cols(); ++col) {
      const double yi = y(r.i, col);
      const double yj = y(r.j, col);
      y(r.i, col) = r.c * yi + r.s * yj;
      y(r.j, col) = -r.s * yi + r.c * yj;
    }
  }
}

}  // namespace detail

/// A sampled embedding. Dense kinds hold the matrix; SRTT and Givens hold
/// their structured form so sketches of skinny targets stay cheap. dense()
/// materializes the same n x ell matrix either way.
template <class Scalar>
class Sketcher {
 public:
  explicit Sketcher(Mat<Scalar> dense) : n_(dense.rows()), ell_(dense.cols()), form_(std::move(dense)) {}
  Sketcher(Index n, detail::SrttForm form)
      : n_(n), ell_(static_cast<Index>(form.rows.size())), form_(std::move(form)) {}
  explicit Sketcher(detail::GivensForm form)
      : n_(form.n), ell_(static_cast<Index>(form.cols.size())), form_(std::move(form)) {}

  Index rows() const { return n_; }
  Index cols() const { return ell_; }

  /// Omega* M for an n x p target.
  Mat<Scalar> adjoint_times(const Mat<Scalar>& m) const {
    require(m.rows() == n_, ErrorCode::DimensionMismatch, "sketch target has wrong row count");
    if (const auto* d = std::get_if<Mat<Scalar>>(&form_)) return d->adjoint() * m;
    if constexpr (std::is_same_v<Scalar, double>) {
      if (const auto* s = std::get_if<detail::SrttForm>(&form_)) {
        MatR t = s->d1.asDiagonal() * m;
        t = *s->dct * t;
        t = s->d2.asDiagonal() * t;
        t = *s->dct * t;
        MatR out(ell_, m.cols());
        for (Index i = 0; i < ell_; ++i) out.row(i) = t.row(s->rows[static_cast<std::size_t>(i)]);
        return out;
      }
      const auto& g = std::get<detail::GivensForm>(form_);
      MatR t = m;
      detail::givens_adjoint_apply(g, t);
      MatR out(ell_, m.cols());
      for (Index i = 0; i < ell_; ++i) out.row(i) = t.row(g.cols[static_cast<std::size_t>(i)]);
      return out;
    } else {
      fail(ErrorCode::InvalidSpec, "structured embeddings are real only");
    }
  }

  /// M Omega for an m x n target.
  Mat<Scalar> right_times(const Mat<Scalar>& m) const {
    require(m.cols() == n_, ErrorCode::DimensionMismatch, "sketch target has wrong column count");
    if (const auto* d = std::get_if<Mat<Scalar>>(&form_)) return m * (*d);
    if constexpr (std::is_same_v<Scalar, double>) {
      if (std::get_if<detail::SrttForm>(&form_)) return m * dense();
      const auto& g = std::get<detail::GivensForm>(form_);
      MatR t = m;
      detail::givens_right_apply(g, t);
      MatR out(m.rows(), ell_);
      for (Index j = 0; j < ell_; ++j) out.col(j) = t.col(g.cols[static_cast<std::size_t>(j)]);
      return out;
    } else {
      fail(ErrorCode::InvalidSpec, "structured embeddings are real only");
    }
  }

  const Mat<Scalar>& dense() const {
    if (const auto* d = std::get_if<Mat<Scalar>>(&form_)) return *d;
    if (!dense_cache_) dense_cache_ = std::make_unique<Mat<Scalar>>(materialize());
    return *dense_cache_;
  }

 private:
  Mat<Scalar> materialize() const {
    if constexpr (std::is_same_v<Scalar, double>) {
      if (const auto* s = std::get_if<detail::SrttForm>(&form_)) {
        // Omega = D1 C' D2 C' S'; build from the selected columns of C'.
        MatR cols(n_, ell_);
        for (Index j = 0; j < ell_; ++j) {
          cols.col(j) = s->dct->row(s->rows[static_cast<std::size_t>(j)]).transpose();
        }
        MatR t = s->d2.asDiagonal() * cols;
        t = s->dct->transpose() * t;
        return s->d1.asDiagonal() * t;
      }
      const auto& g = std::get<detail::GivensForm>(form_);
      MatR eye = MatR::Identity(n_, n_);
      detail::givens_right_apply(g, eye);
      MatR out(n_, ell_);
      for (Index j = 0; j < ell_; ++j) out.col(j) = eye.col(g.cols[static_cast<std::size_t>(j)]);
      return out;
    } else {
      fail(ErrorCode::InvalidSpec, "structured embeddings are real only");
    }
  }

  Index n_, ell_;
  std::variant<Mat<Scalar>, detail::SrttForm, detail::GivensForm> form_;
  mutable std::unique_ptr<Mat<Scalar>> dense_cache_;
};

template <class Scalar>
Sketcher<Scalar> sample_sketcher(const EmbeddingSpec& spec, RngStream rng) {
  spec.validate();
  require(spec.field == field_of<Scalar>(), ErrorCode::InvalidSpec,
          "embedding field does not match requested scalar type");
  RandomStream rs(rng);
  const Index n = spec.n;
  const Index ell = spec.ell;

  switch (spec.kind) {
    case EmbeddingKind::Gaussian:
      return Sketcher<Scalar>(rs.gaussian<Scalar>(n, ell));
    case EmbeddingKind::HaarOrthonormal: {
      Mat<Scalar> g = rs.gaussian<Scalar>(n, ell);
      return Sketcher<Scalar>(thin_qr<Scalar>(g).q);
    }
    default:
      break;
  }

  if constexpr (std::is_same_v<Scalar, double>) {
    switch (spec.kind) {
      case EmbeddingKind::Sign: {
        MatR m(n, ell);
        for (Index j = 0; j < ell; ++j)
          for (Index i = 0; i < n; ++i) m(i, j) = rs.rademacher();
        return Sketcher<double>(std::move(m));
      }
      case EmbeddingKind::Uniform: {
        MatR m(n, ell);
        for (Index j = 0; j < ell; ++j)
          for (Index i = 0; i < n; ++i) m(i, j) = rs.uniform_pm1();
        return Sketcher<double>(std::move(m));
      }
      case EmbeddingKind::SparseIID: {
        // Each ambient coordinate (row of Omega, column of the sketching
        // operator Omega*) is hit zeta times in expectation: entries are
        // nonzero with probability zeta/ell, value +/- 1/sqrt(zeta).
        const double p_half = 0.5 * std::min(1.0, static_cast<double>(spec.zeta) /
                                                      static_cast<double>(ell));
        const double value = 1.0 / std::sqrt(static_cast<double>(spec.zeta));
        MatR m = MatR::Zero(n, ell);
        for (Index i = 0; i < n; ++i) {
          for (Index j = 0; j < ell; ++j) {
            const double u = rs.uniform01();
            if (u < p_half) {
              m(i, j) = value;
            } else if (u < 2.0 * p_half) {
              m(i, j) = -value;
            }
          }
        }
        return Sketcher<double>(std::move(m));
      }
      case EmbeddingKind::SparseStack: {
        // Stacked construction: each row of Omega carries exactly
        // min(zeta, ell) nonzeros, one per near-equal block of the sketch
        // coordinates, so every ambient coordinate is sketched zeta times.
        const Index blocks = std::min<Index>(spec.zeta, ell);
        const double value = 1.0 / std::sqrt(static_cast<double>(spec.zeta));
        const Index base = ell / blocks;
        const Index rem = ell % blocks;
        MatR m = MatR::Zero(n, ell);
        for (Index i = 0; i < n; ++i) {
          Index start = 0;
          for (Index b = 0; b < blocks; ++b) {
            const Index len = base + (b < rem ? 1 : 0);
            const Index pos = start + static_cast<Index>(rs.index(static_cast<std::uint64_t>(len)));
            m(i, pos) = rs.rademacher() * value;
            start += len;
          }
        }
        return Sketcher<double>(std::move(m));
      }
      case EmbeddingKind::Srtt: {
        detail::SrttForm form;
        form.dct = dct_cached(n);
        form.d1 = VecR(n);
        form.d2 = VecR(n);
        for (Index i = 0; i < n; ++i) form.d1(i) = rs.rademacher();
        for (Index i = 0; i < n; ++i) form.d2(i) = rs.rademacher();
        form.rows = rs.subset(n, ell);
        return Sketcher<double>(n, std::move(form));
      }
      case EmbeddingKind::Givens: {
        detail::GivensForm form;
        form.n = n;
        const long count = spec.effective_rotations();
        form.rotations.reserve(static_cast<std::size_t>(count));
        for (long t = 0; t < count; ++t) {
          const Index i = static_cast<Index>(rs.index(static_cast<std::uint64_t>(n)));
          Index j = static_cast<Index>(rs.index(static_cast<std::uint64_t>(n - 1)));
          if (j >= i) ++j;
          const double theta = rs.angle();
          form.rotations.push_back({i, j, std::cos(theta), std::sin(theta)});
        }
        form.cols = rs.subset(n, ell);
        return Sketcher<double>(std::move(form));
      }
      default:
        break;
    }
  }
  fail(ErrorCode::InvalidSpec, "unsupported embedding kind for this field");
}

/// Materialized n x ell draw from the requested embedding distribution.
template <class Scalar>
Mat<Scalar> sample_embedding(const EmbeddingSpec& spec, RngStream rng) {
  return sample_sketcher<Scalar>(spec, rng).dense();
}

/// Wishart matrix W = G G* with G an r x ell standard Gaussian.
template <class Scalar>
Mat<Scalar> sample_wishart(Index r, Index ell, RngStream rng) {
  require(r >= 1 && ell >= 0, ErrorCode::DimensionMismatch, "invalid Wishart parameters");
  RandomStream rs(rng);
  Mat<Scalar> g = rs.gaussian<Scalar>(r, ell);
  Mat<Scalar> w = g * g.adjoint();
  return ((w + w.adjoint()) / Scalar(2.0)).eval();
}

/// Beta random matrix (W1 + W2)^{-1/2} W1 (W1 + W2)^{-1/2} with independent
/// W1 ~ Wishart(r, ell) and W2 ~ Wishart(r, n - ell). Contraction: 0 <= X <= I.
template <class Scalar>
Mat<Scalar> sample_beta(Index r, Index ell, Index n, RngStream rng) {
  require(r >= 1 && ell >= 1, ErrorCode::DimensionMismatch, "invalid Beta parameters");
  require(ell <= n && r <= n, ErrorCode::DimensionMismatch, "Beta parameters require r, ell <= n");
  RandomStream rs(rng);
  Mat<Scalar> g1 = rs.gaussian<Scalar>(r, ell);
  Mat<Scalar> g2 = rs.gaussian<Scalar>(r, n - ell);
  Mat<Scalar> w1 = g1 * g1.adjoint();
  Mat<Scalar> sum = w1 + g2 * g2.adjoint();
  Mat<Scalar> s = psd_inv_sqrt<Scalar>(((sum + sum.adjoint()) / Scalar(2.0)).eval());
  Mat<Scalar> x = s * w1 * s;
  return ((x + x.adjoint()) / Scalar(2.0)).eval();
}

/// First r rows of a Haar embedding draw; the Gram matrix of the block is a
/// Beta(r, ell, n) sample, which the statistical suites verify.
template <class Scalar>
Mat<Scalar> haar_top_block(const EmbeddingSpec& spec, Index r, RngStream rng) {
  require(spec.kind == EmbeddingKind::HaarOrthonormal, ErrorCode::InvalidSpec,
          "top-block sampling is defined for Haar embeddings");
  require(r >= 1 && r <= spec.n, ErrorCode::DimensionMismatch, "block size out of range");
  return sample_embedding<Scalar>(spec, rng).topRows(r);
}

}  // namespace sketchlab
