#include "avgroups/numtheory.hpp"

#include <limits>
#include <string>
#include <vector>

#include "avgroups/error.hpp"

namespace avgroups {

namespace {

constexpr unsigned long kTrialDivisionBound = 100000;

bool fits_u64(const mpz_class& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const mpz_class& n) {
    // Low 64 bits via mpz_export.
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return count == 0 ? 0 : out;
}

mpz_class from_u64(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

// Brent's variant of Pollard rho. n is odd, composite, without small factors.
mpz_class pollard_brent(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    mpz_class diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                mpz_class diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(const mpz_class& n, std::map<Prime, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        if (!fits_u64(n)) {
            throw Error(ErrorCode::InvalidArgument,
                        "prime factor " + n.get_str() + " exceeds 64 bits");
        }
        ++out[to_u64(n)];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

} // namespace

bool is_prime(std::uint64_t n) { return is_prime(from_u64(n)); }

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    // Probabilistic test with 30 repetitions.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

void require_prime(Prime ell) {
    if (!is_prime(ell)) {
        throw Error(ErrorCode::NotPrime, std::to_string(ell) + " is not prime");
    }
}

int valuation(const mpz_class& n, Prime ell) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
    mpz_class rest;
    mpz_class p = from_u64(ell);
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const mpq_class& x, Prime ell) {
    return valuation(x.get_num(), ell) - valuation(x.get_den(), ell);
}

mpz_class prime_power(Prime ell, int exponent) {
    mpz_class out;
    mpz_class p = from_u64(ell);
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

std::map<Prime, int> factorize(const mpz_class& n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
    mpz_class rest = abs(n);
    std::map<Prime, int> out;
    for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++out[p];
        }
    }
    if (rest > 1) {
        if (rest < mpz_class(kTrialDivisionBound) * kTrialDivisionBound) {
            ++out[to_u64(rest)];
        } else {
            factor_large(rest, out);
        }
    }
    return out;
}

std::optional<std::pair<Prime, int>> as_prime_power(const mpz_class& q) {
    if (q < 2) return std::nullopt;
    auto factors = factorize(q);
    if (factors.size() != 1) return std::nullopt;
    return *factors.begin();
}

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long k) {
    if (n < 0 || k == 0) return std::nullopt;
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return root;
}

} // namespace avgroups
