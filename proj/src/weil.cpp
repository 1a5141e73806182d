#include <string>

#include "avgroups/error.hpp"
#include "avgroups/intpoly.hpp"

namespace avgroups {

namespace {

// Element A + B*sqrt(q) of Q(sqrt q).
struct QuadraticValue {
    mpq_class rational;
    mpq_class radical;
};

int sign_of(const QuadraticValue& v, const mpz_class& q) {
    const int sa = sgn(v.rational);
    const int sb = sgn(v.radical);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class lhs = v.rational * v.rational;
    mpq_class rhs = v.radical * v.radical * q;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

// p(c * sqrt q) for integer c.
QuadraticValue evaluate_at_scaled_root(const RatPoly& p, long c, const mpz_class& q) {
    QuadraticValue out;
    mpq_class even_power = 1; // (c sqrt q)^i with the sqrt q factor removed
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i % 2 == 0) out.rational += p.coeffs()[i] * even_power;
        else out.radical += p.coeffs()[i] * even_power;
        even_power *= c;
        if (i % 2 == 1) even_power *= q;
    }
    return out;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p.primitive(), p.derivative().primitive()};
    while (!chain.back().is_zero()) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int changes_at_scaled_root(const std::vector<RatPoly>& chain, long c, const mpz_class& q) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign_of(evaluate_at_scaled_root(p, c, q), q));
    return sign_changes(signs);
}

// t^{-g} f(t) written as a polynomial in s = t + q/t, given the functional
// equation a_{g-k} = q^k a_{g+k}.
RatPoly real_companion(const IntPoly& f, int g, const mpz_class& q) {
    const RatPoly s({0, 1});
    RatPoly prev({2});
    RatPoly cur = s;
    RatPoly h({mpq_class(f.coeff(static_cast<std::size_t>(g)))});
    for (int k = 1; k <= g; ++k) {
        h = h + mpq_class(f.coeff(static_cast<std::size_t>(g + k))) * cur;
        RatPoly next = s * cur - mpq_class(q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return h;
}

// All roots of h real and inside [-2 sqrt q, 2 sqrt q].
bool roots_in_real_window(const RatPoly& h, const mpz_class& q) {
    RatPoly distinct = divmod(h, gcd(h, h.derivative())).first;
    if (distinct.degree() <= 0) return true;
    auto chain = sturm_chain(distinct);
    // Sturm counts are right-continuous: V(a) - V(b) counts roots in (a, b].
    int inside = changes_at_scaled_root(chain, -2, q) - changes_at_scaled_root(chain, 2, q);
    if (sign_of(evaluate_at_scaled_root(distinct, -2, q), q) == 0) ++inside;
    return inside == distinct.degree();
}

} // namespace

WeilReport validate_weil(const IntPoly& f, const mpz_class& q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
    WeilReport report;
    report.q = q;
    report.order_n = eval_at_one(f);
    auto fail = [&report](std::string why) {
        if (report.reason.empty()) report.reason = std::move(why);
    };

    if (auto pp = as_prime_power(q)) {
        report.prime_power = true;
        report.p = pp->first;
        report.q_exponent = pp->second;
    } else {
        fail("q = " + q.get_str() + " is not a prime power");
    }

    report.monic = f.is_monic();
    report.even_degree = f.degree() > 0 && f.degree() % 2 == 0;
    report.squarefree = !f.is_zero() && is_squarefree(f);
    if (!report.even_degree) fail("degree must be positive and even");
    if (!report.monic) fail("polynomial is not monic");

    if (report.monic && report.even_degree) {
        const int g = f.degree() / 2;
        report.g = g;
        report.functional_equation = true;
        mpz_class qpow = 1;
        for (int i = g; i >= 0; --i) {
            if (f.coeff(static_cast<std::size_t>(i)) != qpow * f.coeff(static_cast<std::size_t>(2 * g - i))) {
                report.functional_equation = false;
                fail("functional equation a_i = q^(g-i) a_(2g-i) fails at i = " + std::to_string(i));
                break;
            }
            qpow *= q;
        }
        if (report.functional_equation) {
            report.roots_on_circle = roots_in_real_window(real_companion(f, g, q), q);
            if (!report.roots_on_circle) fail("not all complex roots have absolute value sqrt(q)");
        }
    }
    if (report.order_n <= 0) fail("f(1) must be positive");

    report.accepted = report.reason.empty();
    return report;
}

WeilReport validate_weil(const IntPoly& f) {
    if (f.degree() > 0 && f.degree() % 2 == 0 && f.is_monic() && f.coeff(0) > 0) {
        if (auto q = exact_root(f.coeff(0), static_cast<unsigned long>(f.degree() / 2)); q && *q >= 2) {
            return validate_weil(f, *q);
        }
    }
    WeilReport report;
    report.order_n = eval_at_one(f);
    report.monic = f.is_monic();
    report.even_degree = f.degree() > 0 && f.degree() % 2 == 0;
    report.squarefree = !f.is_zero() && is_squarefree(f);
    report.reason = "constant term is not q^g for a prime power q";
    return report;
}

} // namespace avgroups
