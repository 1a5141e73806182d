#pragma once

// Shared generators and independent oracles for the test suites. Nothing
// here calls into the routines it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "avgroups/intpoly.hpp"
#include "avgroups/lattice.hpp"

namespace avgroups::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Coefficients of up to `digits` decimal digits, random sign.
inline mpz_class random_big(int digits) {
    mpz_class out = 0;
    const int n = static_cast<int>(uniform(1, digits));
    for (int i = 0; i < n; ++i) out = out * 10 + uniform(0, 9);
    return uniform(0, 1) ? out : mpz_class(-out);
}

inline IntPoly random_poly(int max_degree, int digits) {
    std::vector<mpz_class> c(static_cast<std::size_t>(uniform(0, max_degree)) + 1);
    for (auto& x : c) x = random_big(digits);
    return IntPoly(std::move(c));
}

/// f(x) = sum a_i x^i by Horner, with x rational.
inline mpq_class eval_rational(const IntPoly& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeffs()[static_cast<std::size_t>(i)];
    return acc;
}

/// Determinant by fraction-free rational Gaussian elimination.
inline mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            mpq_class f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

inline std::vector<std::vector<mpq_class>> rows_of(const LocalMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.dim(), std::vector<mpq_class>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
    return out;
}

inline std::vector<std::vector<mpq_class>> rows_of(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

/// Number of partitions of m into at most r parts, from the generating
/// function prod_{i=1}^{r} 1/(1 - x^i).
inline long partition_count(int m, int r) {
    std::vector<long> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int s = part; s <= m; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(m)];
}

inline bool is_prime_power_slow(long q) {
    if (q < 2) return false;
    long p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

} // namespace avgroups::testing
