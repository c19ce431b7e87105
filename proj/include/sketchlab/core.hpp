#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sketchlab {

using Index = Eigen::Index;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatR = Mat<double>;
using MatC = Mat<std::complex<double>>;
using VecR = Vec<double>;

/// Scalar field of a computation. Many of the closed-form error laws shift by
/// one between the real and complex cases, captured by alpha().
enum class Field { Real, Complex };

constexpr int alpha(Field f) { return f == Field::Real ? 1 : 0; }

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

template <class Scalar>
constexpr Field field_of() {
  if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
    return Field::Complex;
  } else {
    static_assert(std::is_same_v<Scalar, double>, "only double and complex<double> scalars");
    return Field::Real;
  }
}

enum class ErrorCode {
  RankDeficient,
  NotPositiveDefinite,
  NotPsd,
  InvalidSpec,
  DimensionMismatch,
  RankExceedsSketch,
  DimensionTooSmall,
  NoAdmissibleQ,
  RankBelowSketch,
  ParameterOrderViolation,
  InfeasibleBudget,
  IoError,
  UsageError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankExceedsSketch: return "RankExceedsSketch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NoAdmissibleQ: return "NoAdmissibleQ";
    case ErrorCode::RankBelowSketch: return "RankBelowSketch";
    case ErrorCode::ParameterOrderViolation: return "ParameterOrderViolation";
    case ErrorCode::InfeasibleBudget: return "InfeasibleBudget";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

/// Sum of squared entry moduli.
template <class Scalar>
double frob_sq(const Mat<Scalar>& m) {
  return m.squaredNorm();
}

}  // namespace sketchlab
