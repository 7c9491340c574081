#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qshkit/tensor.hpp"

namespace qshkit {

/// FNV-1a; used to derive stable per-suite seeds.
inline std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Seeded source of random scalars, vectors, matrices and tensors. Rational
/// entries are uniform in {-3,...,3}; float entries uniform in [-1, 1].
template <class T>
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    std::uint64_t h = stable_hash(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    rng_.seed(seq);
  }

  T scalar() {
    if constexpr (Field<T>::exact) {
      return T(small_int(3));
    } else {
      return std::uniform_real_distribution<double>(-1.0, 1.0)(rng_);
    }
  }

  /// Integer in [-r, r].
  long small_int(long r) { return std::uniform_int_distribution<long>(-r, r)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Vec<T> vec(std::size_t n) {
    Vec<T> v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  Vec<T> nonzero_vec(std::size_t n) {
    while (true) {
      Vec<T> v = vec(n);
      for (const auto& x : v)
        if (!Field<T>::is_exact_zero(x)) return v;
    }
  }

  Matrix<T> matrix(std::size_t r, std::size_t c) {
    Matrix<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar();
    return m;
  }

  BilinearMap<T> bilinear(std::size_t d) {
    BilinearMap<T> b(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) b(i, j, k) = scalar();
    return b;
  }

  BilinearMap<T> skew_bilinear(std::size_t d) {
    BilinearMap<T> b(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          b(i, j, k) = scalar();
          b(j, i, k) = -b(i, j, k);
        }
    return b;
  }

  /// c(X,Y,Z) symmetric in all three arguments.
  Tensor3<T> symmetric_trilinear(std::size_t d) {
    Tensor3<T> c(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        for (std::size_t k = j; k < d; ++k) {
          T v = scalar();
          for (auto [a, b, e] : {std::array{i, j, k}, std::array{i, k, j}, std::array{j, i, k}, std::array{j, k, i},
                                 std::array{k, i, j}, std::array{k, j, i}})
            c(a, b, e) = v;
        }
    return c;
  }

  /// s(X,Y,Z) skew in (Y, Z).
  Tensor3<T> skew_last_pair(std::size_t d) {
    Tensor3<T> s(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          s(i, j, k) = scalar();
          s(i, k, j) = -s(i, j, k);
        }
    return s;
  }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qshkit
