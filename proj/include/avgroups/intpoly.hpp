#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "avgroups/numtheory.hpp"
#include "avgroups/ratpoly.hpp"

namespace avgroups {

/// Exact integer polynomial, coefficients ascending by degree. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// c * t^k
    static IntPoly monomial(const mpz_class& c, unsigned k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    /// Coefficient of t^i; zero past the degree.
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    mpz_class operator()(const mpz_class& x) const;
    IntPoly derivative() const;
    IntPoly pow(unsigned e) const;
    RatPoly to_rational() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
    friend IntPoly operator-(const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// g(t) = f(1 - t) by binomial expansion.
IntPoly substitute_one_minus_t(const IntPoly& f);

/// gcd(f, f') is constant. Throws ZeroPolynomial for f = 0.
bool is_squarefree(const IntPoly& f);

mpz_class eval_at_one(const IntPoly& f);

/// Quotient a / b if b divides a over the rationals and the quotient is
/// integral; nullopt otherwise. b must be nonzero.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Screening record for a candidate Weil polynomial.
struct WeilReport {
    mpz_class q;
    Prime p = 0;
    int q_exponent = 0;
    int g = 0;
    bool prime_power = false;
    bool monic = false;
    bool even_degree = false;
    bool functional_equation = false;
    bool roots_on_circle = false;
    bool squarefree = false;
    mpz_class order_n;
    bool accepted = false;
    std::string reason;
    // Only necessary conditions are screened; Honda-Tate existence is not.
    bool honda_tate_checked = false;
};

/// Requires q >= 2 (InvalidArgument otherwise). Never throws on a bad f;
/// the report carries the verdict.
WeilReport validate_weil(const IntPoly& f, const mpz_class& q);

/// Recovers q from the constant term (a_0 = q^g) and validates against it.
/// Reports a rejection if no such q exists.
WeilReport validate_weil(const IntPoly& f);

/// "9,-2,1" for t^2 - 2t + 9; "0" for the zero polynomial.
std::string to_csv(const IntPoly& f);
/// "t^2-2*t+9"
std::string to_human(const IntPoly& f);

IntPoly parse_csv(std::string_view text);
/// Accepts sums, products, powers and parentheses in the variable t,
/// e.g. "t^2-2*t+9" or "(t^2-2*t+9)*(t+3)^2".
IntPoly parse_human(std::string_view text);
/// Dispatches on whether the text mentions the variable.
IntPoly parse_poly(std::string_view text);

} // namespace avgroups
