#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>

namespace avgroups {

/// Primes are word-sized throughout; factorization refuses larger factors.
using Prime = std::uint64_t;

bool is_prime(std::uint64_t n);
bool is_prime(const mpz_class& n);

/// Throws NotPrime unless `ell` is prime.
void require_prime(Prime ell);

/// ord_ell(n) for nonzero n. Throws InvalidArgument on zero.
int valuation(const mpz_class& n, Prime ell);
/// ord_ell(num) - ord_ell(den) for nonzero x.
int valuation(const mpq_class& x, Prime ell);

mpz_class prime_power(Prime ell, int exponent);

/// Prime factorization of |n| for n != 0. Trial division, then Pollard-Brent
/// on the cofactor. Throws InvalidArgument if a factor does not fit in 64 bits.
std::map<Prime, int> factorize(const mpz_class& n);

/// (p, e) with q = p^e, e >= 1, or nullopt.
std::optional<std::pair<Prime, int>> as_prime_power(const mpz_class& q);

/// The exact k-th root of n >= 0, or nullopt if n is not a perfect k-th power.
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long k);

} // namespace avgroups
