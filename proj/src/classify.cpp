#include "avgroups/classify.hpp"

#include <algorithm>
#include <set>

#include "avgroups/error.hpp"

namespace avgroups {

std::vector<LocalGroupType> LocalClassification::passing() const {
    std::vector<LocalGroupType> out;
    for (const auto& c : candidates)
        if (c.passes) out.push_back(c.group);
    return out;
}

LocalClassification classify_local(const IntPoly& shifted, Prime ell) {
    if (shifted.degree() < 1) throw Error(ErrorCode::InvalidArgument, "polynomial must have positive degree");
    ConvexPolygon newton = newton_polygon(shifted, ell);
    const int m = valuation(shifted.coeff(0), ell);
    const int d = shifted.degree();

    LocalClassification out{ell, m, newton, {}};
    for (auto& parts : partitions_bounded(m, d)) {
        ConvexPolygon hodge = hodge_polygon(parts, d);
        bool passes = lies_on_or_above(newton, hodge);
        out.candidates.push_back({LocalGroupType(ell, std::move(parts)), std::move(hodge), passes});
    }
    return out;
}

std::vector<LocalGroupType> polygon_admissible_groups(const IntPoly& shifted, Prime ell) {
    return classify_local(shifted, ell).passing();
}

namespace {

WeilReport check_report(WeilReport report) {
    if (!report.accepted) throw Error(ErrorCode::NotWeil, "not an accepted Weil polynomial: " + report.reason);
    if (!report.squarefree) throw Error(ErrorCode::NotSquarefree, "main theorem requires no multiple roots");
    return report;
}

} // namespace

WeilReport require_classifiable(const IntPoly& f) { return check_report(validate_weil(f)); }

WeilReport require_classifiable(const IntPoly& f, const mpz_class& q) { return check_report(validate_weil(f, q)); }

std::vector<LocalGroupType> realizable_local_groups(const IntPoly& f, Prime ell) {
    require_prime(ell);
    require_classifiable(f);
    return polygon_admissible_groups(substitute_one_minus_t(f), ell);
}

RealizabilityVerdict is_realizable(const IntPoly& f, const GroupType& group) {
    WeilReport report = require_classifiable(f);
    RealizabilityVerdict verdict;
    if (group.order() != report.order_n) {
        verdict.status = RealizabilityVerdict::Status::WrongOrder;
        verdict.message = "wrong order: group has order " + group.order().get_str() + " but f(1) = " + report.order_n.get_str();
        return verdict;
    }
    const IntPoly shifted = substitute_one_minus_t(f);
    const int d = shifted.degree();
    for (const auto& [ell, parts] : group.components()) {
        if (static_cast<int>(parts.size()) > d) {
            verdict.status = RealizabilityVerdict::Status::TooManyGenerators;
            verdict.failing_prime = ell;
            verdict.message = "group not generated by " + std::to_string(d) + " elements at ell = " + std::to_string(ell);
            return verdict;
        }
        ConvexPolygon newton = newton_polygon(shifted, ell);
        if (auto x = first_violation(newton, hodge_polygon(parts, d))) {
            verdict.status = RealizabilityVerdict::Status::PolygonFailure;
            verdict.failing_prime = ell;
            verdict.failing_abscissa = *x;
            verdict.message = "Newton polygon lies below the Hodge polygon at ell = " + std::to_string(ell) +
                              ", x = " + std::to_string(*x);
            return verdict;
        }
    }
    verdict.message = "realizable";
    return verdict;
}

GroupEnumerator::GroupEnumerator(std::vector<std::pair<Prime, std::vector<LocalGroupType>>> factors)
    : factors_(std::move(factors)), odometer_(factors_.size(), 0) {
    for (const auto& f : factors_)
        if (f.second.empty()) done_ = true;
}

std::optional<GroupType> GroupEnumerator::next() {
    if (done_) return std::nullopt;
    std::map<Prime, std::vector<int>> components;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& local = factors_[i].second[odometer_[i]];
        components[local.prime()] = local.parts();
    }
    // Advance the last prime fastest.
    std::size_t i = factors_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++odometer_[i] < factors_[i].second.size()) break;
        odometer_[i] = 0;
    }
    return GroupType(components);
}

GroupEnumerator ClassificationResult::groups() const {
    std::vector<std::pair<Prime, std::vector<LocalGroupType>>> factors;
    for (const auto& [ell, local] : per_prime) factors.emplace_back(ell, local.passing());
    return GroupEnumerator(std::move(factors));
}

ClassificationResult classify_all(const IntPoly& f, const mpz_class& q) {
    ClassificationResult result;
    result.weil = require_classifiable(f, q);
    const IntPoly shifted = substitute_one_minus_t(f);
    result.total_count = 1;
    for (const auto& [ell, exponent] : factorize(result.weil.order_n)) {
        LocalClassification local = classify_local(shifted, ell);
        result.total_count *= static_cast<unsigned long>(local.passing().size());
        result.per_prime.emplace(ell, std::move(local));
    }
    return result;
}

EllipticResult elliptic_groups(const mpz_class& q, const mpz_class& b) {
    if (!as_prime_power(q)) throw Error(ErrorCode::NotWeil, "q = " + q.get_str() + " is not a prime power");
    const mpz_class disc = b * b - 4 * q;
    if (disc > 0) throw Error(ErrorCode::NotWeil, "not a Weil polynomial: b^2 > 4q");
    const mpz_class n = 1 - b + q;

    EllipticResult out;
    if (disc == 0) {
        out.supersingular = true;
        auto n1 = exact_root(n, 2);
        if (!n1) {
            out.note = "N = " + n.get_str() + " is not a perfect square; no group of the form (Z/n1)^2";
            return out;
        }
        std::map<Prime, std::vector<int>> components;
        for (const auto& [ell, e] : factorize(*n1)) components[ell] = {e, e};
        out.groups.emplace_back(components);
        out.note = "b = +/-2 sqrt(q): Frobenius acts as a scalar";
        return out;
    }

    // n1 | n2 and n1 | b - 2, prime by prime: ell^e || n1 with 2e <= ord(N)
    // and e <= ord(b - 2); b = 2 imposes no second bound.
    const mpz_class trace_shift = b - 2;
    std::vector<std::pair<Prime, std::vector<Partition>>> choices;
    for (const auto& [ell, v] : factorize(n)) {
        int cap = v / 2;
        if (trace_shift != 0) cap = std::min(cap, valuation(trace_shift, ell));
        std::vector<Partition> local;
        for (int e = 0; e <= cap; ++e) local.push_back(e == 0 ? Partition{v} : Partition{e, v - e});
        choices.emplace_back(ell, std::move(local));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<std::pair<mpz_class, GroupType>> found;
    for (;;) {
        std::map<Prime, std::vector<int>> components;
        mpz_class n1 = 1;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const Partition& parts = choices[i].second[idx[i]];
            components[choices[i].first] = parts;
            if (parts.size() == 2) n1 *= prime_power(choices[i].first, parts[0]);
        }
        found.emplace_back(n1, GroupType(components));
        std::size_t i = choices.size();
        bool carried_out = true;
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].second.size()) {
                carried_out = false;
                break;
            }
            idx[i] = 0;
        }
        if (carried_out) break;
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [n1, g] : found) out.groups.push_back(std::move(g));
    return out;
}

ConjectureResult conjecture_local_groups(std::span<const IntPoly> factors, Prime ell) {
    require_prime(ell);
    if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "at least one factor is required");
    ConjectureResult out;
    out.ell = ell;
    out.degree_hypothesis = true;

    std::vector<std::vector<LocalGroupType>> per_factor;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const IntPoly& f = factors[j];
        if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "factors must have positive degree");
        if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, "factor " + to_human(f) + " has multiple roots");
        if (j > 0 && !exact_quotient(factors[j - 1], f)) {
            throw Error(ErrorCode::FactorsNotNested, "factors not nested: " + to_human(f) + " does not divide " + to_human(factors[j - 1]));
        }
        if (f.degree() > 2) out.degree_hypothesis = false;
        const IntPoly shifted = substitute_one_minus_t(f);
        if (shifted.coeff(0) == 0) throw Error(ErrorCode::ConstantTermVanishes, "factor " + to_human(f) + " vanishes at 1");
        per_factor.push_back(polygon_admissible_groups(shifted, ell));
    }

    std::set<LocalGroupType> sums;
    std::vector<std::size_t> idx(per_factor.size(), 0);
    const bool any_empty = std::any_of(per_factor.begin(), per_factor.end(), [](const auto& g) { return g.empty(); });
    while (!any_empty) {
        std::vector<int> parts;
        for (std::size_t j = 0; j < per_factor.size(); ++j) {
            const auto& p = per_factor[j][idx[j]].parts();
            parts.insert(parts.end(), p.begin(), p.end());
        }
        sums.emplace(ell, std::move(parts));
        std::size_t j = per_factor.size();
        bool carried_out = true;
        while (j > 0) {
            --j;
            if (++idx[j] < per_factor[j].size()) {
                carried_out = false;
                break;
            }
            idx[j] = 0;
        }
        if (carried_out) break;
    }
    out.groups.assign(sums.begin(), sums.end());

    out.conjectural = factors.size() > 1;
    if (factors.size() == 1) {
        out.note = "single factor: this is the main theorem, not a conjecture";
    } else if (out.degree_hypothesis) {
        out.note = "CONJECTURAL: asserted only when every factor has degree <= 2";
    } else {
        out.note = "CONJECTURAL: a factor has degree > 2, outside the conjectured range; known counterexamples exist";
    }
    return out;
}

} // namespace avgroups
