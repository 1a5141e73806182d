#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace avgroups {

/// Univariate polynomial over the rationals, ascending coefficients.
/// Used internally for gcds, Sturm chains and characteristic polynomials.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(std::size_t i) const;
    const mpq_class& leading() const { return coeffs_.back(); }

    mpq_class operator()(const mpq_class& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    /// Scaled by a positive rational so the coefficients are coprime integers.
    /// Signs of values are preserved.
    RatPoly primitive() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const mpq_class& c, const RatPoly& a);
    friend RatPoly operator-(const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

private:
    void trim();

    std::vector<mpq_class> coeffs_;
};

/// Euclidean division; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

} // namespace avgroups
