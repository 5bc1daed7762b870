#pragma once

#include "ncinv/lie/word.hpp"
#include "ncinv/linalg/matrix.hpp"

#include <random>

namespace ncinv::testing {

// Small seeded generators; every property test draws from one of these so
// failures reproduce exactly.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  Scalar rational() {
    Scalar q(integer(-4, 4), static_cast<unsigned long>(integer(1, 3)));
    q.canonicalize();
    return q;
  }

  Scalar nonzero() {
    for (;;) {
      Scalar q = rational();
      if (sgn(q) != 0) return q;
    }
  }

  Vector vector(std::size_t n, int zero_bias = 0) {
    Vector v(n);
    for (auto& x : v) x = integer(0, zero_bias) == 0 ? rational() : Scalar(0);
    return v;
  }

  Matrix matrix(std::size_t r, std::size_t c, int zero_bias = 0) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(0, zero_bias) == 0 ? rational() : Scalar(0);
    return m;
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(-2, 2);
      if (is_invertible(m)) return m;
    }
  }

  Word word(std::size_t letters, std::size_t len) {
    Word w(len);
    for (auto& x : w) x = static_cast<Letter>(index(letters));
    return w;
  }

  TermMap terms(std::size_t letters, std::size_t len, std::size_t count) {
    TermMap t;
    for (std::size_t i = 0; i < count; ++i) add_term(t, word(letters, len), nonzero());
    return t;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace ncinv::testing
