#pragma once

#include "sketchlab/core.hpp"

#include <optional>
#include <vector>

namespace sketchlab {

/// Nonincreasing squared singular values of a target matrix;
/// tail(q) = sum of entries beyond the first q.
class SpectrumTail {
 public:
  explicit SpectrumTail(std::vector<double> squared_values);

  /// From singular values (squares them first).
  static SpectrumTail from_singular_values(const std::vector<double>& sv);

  double tail(long q) const;
  long rank() const { return rank_; }
  long size() const { return static_cast<long>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  std::vector<double> suffix_;  // suffix_[q] = tail(q)
  long rank_ = 0;
};

enum class GammaKind { Gaussian, HaarOrthonormal };

/// Parameter bundle for the closed-form bounds.
struct BoundQuery {
  Field field = Field::Real;
  long n = 0, d = 0;  // ambient dimensions
  long r = 0;         // rank of the target
  long ell = 0;       // right sketch dimension
  long k = 0;         // left sketch dimension (two-sided approximation only)
  long q = 0;         // comparison rank
  GammaKind gamma_kind = GammaKind::Gaussian;  // distribution of the left embedding
  double epsilon = 0.0;
  long t = 0;  // matvec budget
};

/// Exact expected residual inflation of sketched least squares with a
/// Gaussian embedding: 1 + r / (ell - r - alpha).
double ss_ratio_gaussian(const BoundQuery& q);
double ss_ratio_gaussian(Field field, long r, long ell);

/// Exact expected residual inflation with a random orthonormal embedding:
/// 1 + (n - ell)/(n - r) * r/(ell - r - alpha). Also the minimax value over
/// all data-oblivious embeddings.
double ss_ratio_haar(const BoundQuery& q);
double ss_ratio_haar(Field field, long n, long r, long ell);

/// Classical randomized-SVD bound: min over q < ell - alpha of
/// (1 + q/(ell - q - alpha)) * tail(q).
double rsvd_bound_hmt(const SpectrumTail& tail, Field field, long ell);

/// Sharp randomized-SVD bound (requires rank >= ell): min over q of
/// (r - ell)/(r - q) * (1 + q/(ell - q - alpha)) * tail(q).
double rsvd_bound_sharp(const SpectrumTail& tail, Field field, long r, long ell);

/// Minimax lower-bound factor for rank-constrained targets; equals the
/// q-term of the sharp bound.
double rsvd_lower_factor(Field field, long r, long ell, long q);

/// Sharp two-sided (generalized Nystrom) upper bound.
double gn_bound(const BoundQuery& q, const SpectrumTail& tail);

/// Two-sided minimax lower-bound factor (multiplies tail(q)).
double gn_lower_factor(const BoundQuery& q);

struct PlanSplit {
  long k = 0;
  long ell = 0;
  double objective = 0.0;      // (1 + ell/(k-ell-a)) (1 + q/(ell-q-a)) at the returned split
  double continuous_k = 0.0;   // optimum before rounding
  double continuous_ell = 0.0;
};

/// Split a matvec budget t = k + ell for a target rank q by the continuous
/// optimum k/ell = sqrt(t - q)/sqrt(q), then keep the better integer
/// rounding. The objective is the complex-case worst-case ratio by default.
PlanSplit plan_split(long q, long t, Field objective_field = Field::Complex);

enum class BudgetMethod { GeneralizedNystrom, Rsvd };

/// Matrix-vector product budget needed for a (1 + epsilon) guarantee at
/// comparison rank q.
long budget_for_epsilon(long q, double epsilon, BudgetMethod method);

struct SketchDimensions {
  long ell_min = 0;         // smallest dimension with finite expected error
  long ell_sufficient = 0;  // guarantees a (1 + epsilon) residual ratio
};

SketchDimensions ss_dimensions(long r, Field field, double epsilon);

}  // namespace sketchlab
