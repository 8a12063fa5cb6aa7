#pragma once

#include <random>

#include "leibniz/matrix.hpp"

namespace leibniz {

// Deterministic pseudo-random rational data for property tests. mt19937 with
// a fixed seed produces the same stream on every platform, so tests that
// draw from this are reproducible bit for bit. Entries are kept small to
// bound coefficient growth in exact arithmetic.
class RandomSource {
  public:
    explicit RandomSource(std::uint32_t seed) : gen_(seed) {}

    // Numerator in [-bound, bound], denominator in [1, den_bound].
    Rational rational(long bound = 5, long den_bound = 3) {
        long long num = static_cast<long long>(next(2 * static_cast<std::size_t>(bound) + 1)) - bound;
        long long den = 1 + static_cast<long long>(next(static_cast<std::size_t>(den_bound)));
        return make_rational(num, den);
    }

    Vec vector(std::size_t n, long bound = 5, long den_bound = 3) {
        Vec v(n);
        for (auto& x : v) x = rational(bound, den_bound);
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, long bound = 5, long den_bound = 3) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound, den_bound);
        return m;
    }

    // Rejection sampling; a random rational matrix is almost surely
    // invertible, so this terminates after very few draws.
    Matrix invertible_matrix(std::size_t n, long bound = 5, long den_bound = 3) {
        for (;;) {
            Matrix m = matrix(n, n, bound, den_bound);
            if (m.is_invertible()) return m;
        }
    }

  private:
    std::size_t next(std::size_t mod) { return static_cast<std::size_t>(gen_()) % mod; }

    std::mt19937 gen_;
};

}  // namespace leibniz
