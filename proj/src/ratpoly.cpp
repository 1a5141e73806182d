#include "avgroups/ratpoly.hpp"

#include <algorithm>

#include "avgroups/error.hpp"

namespace avgroups {

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

mpq_class RatPoly::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<mpq_class> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / leading();
    return inv * *this;
}

RatPoly RatPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : coeffs_) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return mpq_class(den_lcm, num_gcd) * *this;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<mpq_class> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly operator*(const mpq_class& c, const RatPoly& a) {
    std::vector<mpq_class> out(a.coeffs_);
    for (auto& x : out) x *= c;
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<mpq_class> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
        mpq_class c = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace avgroups
