#include "sketchlab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sketchlab {

SpectrumTail::SpectrumTail(std::vector<double> squared_values) : values_(std::move(squared_values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(values_[i] >= 0.0, ErrorCode::InvalidSpec, "squared singular values must be nonnegative");
    if (i > 0) {
      require(values_[i] <= values_[i - 1] * (1.0 + 1e-12) + 1e-300, ErrorCode::InvalidSpec,
              "spectrum must be nonincreasing");
    }
    if (values_[i] > 0.0) rank_ = static_cast<long>(i) + 1;
  }
  suffix_.assign(values_.size() + 1, 0.0);
  for (std::size_t i = values_.size(); i-- > 0;) {
    suffix_[i] = suffix_[i + 1] + values_[i];
  }
}

SpectrumTail SpectrumTail::from_singular_values(const std::vector<double>& sv) {
  std::vector<double> sq(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) sq[i] = sv[i] * sv[i];
  return SpectrumTail(std::move(sq));
}

double SpectrumTail::tail(long q) const {
  require(q >= 0, ErrorCode::InvalidSpec, "tail index must be nonnegative");
  const auto idx = static_cast<std::size_t>(q);
  return idx >= suffix_.size() ? 0.0 : suffix_[idx];
}

double ss_ratio_gaussian(Field field, long r, long ell) {
  const long a = alpha(field);
  require(r >= 0 && ell >= 1, ErrorCode::DimensionTooSmall, "invalid rank or sketch dimension");
  require(r < ell - a, ErrorCode::DimensionTooSmall,
          "expected error is infinite unless rank < ell - alpha");
  return 1.0 + static_cast<double>(r) / static_cast<double>(ell - r - a);
}

double ss_ratio_gaussian(const BoundQuery& q) { return ss_ratio_gaussian(q.field, q.r, q.ell); }

double ss_ratio_haar(Field field, long n, long r, long ell) {
  const long a = alpha(field);
  require(r >= 0 && ell >= 1, ErrorCode::DimensionTooSmall, "invalid rank or sketch dimension");
  require(ell <= n, ErrorCode::DimensionTooSmall, "sketch dimension cannot exceed n");
  require(r < ell - a, ErrorCode::DimensionTooSmall,
          "expected error is infinite unless rank < ell - alpha");
  const double frac = static_cast<double>(n - ell) / static_cast<double>(n - r);
  return 1.0 + frac * static_cast<double>(r) / static_cast<double>(ell - r - a);
}

double ss_ratio_haar(const BoundQuery& q) { return ss_ratio_haar(q.field, q.n, q.r, q.ell); }

namespace {

double oversampling_term(long q, long ell, long a) {
  return 1.0 + static_cast<double>(q) / static_cast<double>(ell - q - a);
}

}  // namespace

double rsvd_bound_hmt(const SpectrumTail& tail, Field field, long ell) {
  const long a = alpha(field);
  require(ell - a >= 1, ErrorCode::NoAdmissibleQ, "no admissible comparison rank");
  double best = std::numeric_limits<double>::infinity();
  for (long q = 0; q < ell - a; ++q) {
    best = std::min(best, oversampling_term(q, ell, a) * tail.tail(q));
  }
  return best;
}

double rsvd_bound_sharp(const SpectrumTail& tail, Field field, long r, long ell) {
  const long a = alpha(field);
  require(r >= ell, ErrorCode::RankBelowSketch, "sharp bound requires rank >= ell");
  require(ell - a >= 1, ErrorCode::NoAdmissibleQ, "no admissible comparison rank");
  double best = std::numeric_limits<double>::infinity();
  for (long q = 0; q < ell - a; ++q) {
    const double factor = static_cast<double>(r - ell) / static_cast<double>(r - q);
    best = std::min(best, factor * oversampling_term(q, ell, a) * tail.tail(q));
  }
  return best;
}

double rsvd_lower_factor(Field field, long r, long ell, long q) {
  const long a = alpha(field);
  require(q >= 0 && q + a < ell && ell <= r, ErrorCode::ParameterOrderViolation,
          "need q + alpha < ell <= r");
  const double factor = static_cast<double>(r - ell) / static_cast<double>(r - q);
  return factor * oversampling_term(q, ell, a);
}

double gn_bound(const BoundQuery& query, const SpectrumTail& tail) {
  const long a = alpha(query.field);
  require(query.ell + a < query.k && query.k <= query.r, ErrorCode::ParameterOrderViolation,
          "need ell + alpha < k <= r");
  double gamma = 1.0;
  if (query.gamma_kind == GammaKind::HaarOrthonormal) {
    require(query.d >= query.k, ErrorCode::ParameterOrderViolation,
            "left sketch dimension exceeds ambient dimension");
    gamma = static_cast<double>(query.d - query.k) / static_cast<double>(query.d - query.ell);
  }
  const double prefactor =
      1.0 + gamma * static_cast<double>(query.ell) / static_cast<double>(query.k - query.ell - a);
  return prefactor * rsvd_bound_sharp(tail, query.field, query.r, query.ell);
}

double gn_lower_factor(const BoundQuery& query) {
  const long a = alpha(query.field);
  require(query.q + a < query.ell, ErrorCode::ParameterOrderViolation,
          "need q + alpha < ell (factor diverges at equality)");
  require(query.k <= query.r, ErrorCode::ParameterOrderViolation, "need k <= r");
  require(query.ell + a < query.k, ErrorCode::ParameterOrderViolation, "need ell + alpha < k");
  require(query.d >= query.k, ErrorCode::ParameterOrderViolation,
          "left sketch dimension exceeds ambient dimension");
  const double prefactor =
      1.0 + (static_cast<double>(query.d - query.k) / static_cast<double>(query.d - query.ell)) *
                static_cast<double>(query.ell) / static_cast<double>(query.k - query.ell - a);
  return prefactor * rsvd_lower_factor(query.field, query.r, query.ell, query.q);
}

namespace {

// Worst-case two-sided ratio at comparison rank q; +inf when infeasible.
double split_objective(long k, long ell, long q, long a) {
  if (ell - q - a <= 0 || k - ell - a <= 0) return std::numeric_limits<double>::infinity();
  return (1.0 + static_cast<double>(ell) / static_cast<double>(k - ell - a)) *
         (1.0 + static_cast<double>(q) / static_cast<double>(ell - q - a));
}

}  // namespace

PlanSplit plan_split(long q, long t, Field objective_field) {
  require(q >= 1 && q < t, ErrorCode::InfeasibleBudget, "need 0 < q < t");
  const long a = alpha(objective_field);
  PlanSplit plan;
  const double dq = static_cast<double>(q);
  const double dt = static_cast<double>(t);
  // k / ell = sqrt(t - q) / sqrt(q) with k + ell = t.
  plan.continuous_ell = dt * std::sqrt(dq) / (std::sqrt(dq) + std::sqrt(dt - dq));
  plan.continuous_k = dt - plan.continuous_ell;

  const long k_up = static_cast<long>(std::ceil(plan.continuous_k));
  const long k_down = static_cast<long>(std::floor(plan.continuous_k));
  const double obj_up = split_objective(k_up, t - k_up, q, a);
  const double obj_down = split_objective(k_down, t - k_down, q, a);
  require(std::isfinite(obj_up) || std::isfinite(obj_down), ErrorCode::InfeasibleBudget,
          "no integer split satisfies q < ell < k");
  if (obj_up < obj_down || (obj_up == obj_down && k_up > k_down)) {
    plan.k = k_up;
    plan.ell = t - k_up;
    plan.objective = obj_up;
  } else {
    plan.k = k_down;
    plan.ell = t - k_down;
    plan.objective = obj_down;
  }
  return plan;
}

long budget_for_epsilon(long q, double epsilon, BudgetMethod method) {
  require(q >= 1 && epsilon > 0.0, ErrorCode::InvalidSpec, "need q >= 1 and epsilon > 0");
  const double e = 1.0 / epsilon;
  double budget = 0.0;
  if (method == BudgetMethod::GeneralizedNystrom) {
    budget = 2.0 * (e + 1.0) * (e + std::sqrt(e * e + 2.0 * e) + 1.0) * static_cast<double>(q);
  } else {
    budget = (2.0 * e + 2.0) * static_cast<double>(q);
  }
  return static_cast<long>(std::ceil(budget - 1e-12));
}

SketchDimensions ss_dimensions(long r, Field field, double epsilon) {
  require(r >= 1 && epsilon > 0.0, ErrorCode::InvalidSpec, "need r >= 1 and epsilon > 0");
  const long a = alpha(field);
  SketchDimensions dims;
  dims.ell_min = r + 1 + a;
  dims.ell_sufficient = static_cast<long>(
      std::ceil(static_cast<double>(r) / epsilon + static_cast<double>(r + a) - 1e-12));
  return dims;
}

}  // namespace sketchlab
