#pragma once

#include <cstdint>
#include <random>

#include "liemod/matrix.hpp"

namespace liemod::support {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Vec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}

/// Calls f on every rows x cols matrix with entries in {-1, 0, 1}.
template <class F>
void for_each_small_matrix(std::size_t rows, std::size_t cols, F f) {
    std::size_t n = rows * cols, total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix m(rows, cols);
        std::size_t x = code;
        for (std::size_t i = 0; i < n; ++i) {
            m(i / cols, i % cols) = static_cast<int>(x % 3) - 1;
            x /= 3;
        }
        f(m);
    }
}

}  // namespace liemod::support
