#pragma once

#include "sketchlab/core.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace sketchlab {

/// Identifies one reproducible random stream. Distinct stream indices under
/// the same master seed give statistically independent streams; equal pairs
/// reproduce the same draws bit for bit.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  RngStream with_stream(std::uint64_t index) const { return {master_seed, index}; }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Draws from a stream. All transforms are implemented here (not via
/// std::*_distribution) so draws are identical across standard libraries.
class RandomStream {
 public:
  explicit RandomStream(RngStream stream) {
    std::uint64_t s = stream.master_seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= 0xD1B54A32D192ED03ULL * (stream.stream_index + 1);
    std::uint64_t b = detail::splitmix64(s);
    std::uint64_t c = detail::splitmix64(s);
    std::uint64_t d = detail::splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_open01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Uniform on [-1, 1).
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  /// Standard normal via the Box-Muller transform (two u64 per draw).
  double normal() {
    double u = uniform_open01();
    double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  std::complex<double> normal_complex() {
    double re = normal();
    double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  double rademacher() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

  /// Uniform angle on [0, 2*pi).
  double angle() { return 2.0 * std::numbers::pi * uniform01(); }

  /// Unbiased uniform integer in [0, bound).
  std::uint64_t index(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// k distinct indices from [0, n), uniformly without replacement
  /// (partial Fisher-Yates; resulting order is random).
  std::vector<Index> subset(Index n, Index k) {
    std::vector<Index> pool(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Index> out(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) {
      const Index j = i + static_cast<Index>(index(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
    }
    return out;
  }

  template <class Scalar>
  void fill_gaussian(Mat<Scalar>& m) {
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
          m(i, j) = normal_complex();
        } else {
          m(i, j) = normal();
        }
      }
    }
  }

  template <class Scalar>
  Mat<Scalar> gaussian(Index rows, Index cols) {
    Mat<Scalar> m(rows, cols);
    fill_gaussian(m);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit content hash, used to derive per-cell seeds from a
/// descriptor so the derivation does not depend on enumeration order.
inline std::uint64_t fnv1a(const std::string& text, std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace sketchlab
