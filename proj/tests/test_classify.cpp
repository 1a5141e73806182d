#include <doctest.h>

#include <algorithm>
#include <set>

#include "avgroups/classify.hpp"
#include "avgroups/error.hpp"
#include "avgroups/fixtures.hpp"
#include "test_support.hpp"

using namespace avgroups;
using avgroups::testing::is_prime_power_slow;
using avgroups::testing::uniform;

namespace {

std::vector<GroupType> labels(std::initializer_list<const char*> ls) {
    std::vector<GroupType> out;
    for (const char* l : ls) out.push_back(parse_group_label(l));
    return out;
}

std::vector<GroupType> drain(GroupEnumerator it) {
    std::vector<GroupType> out;
    while (auto g = it.next()) out.push_back(*g);
    return out;
}

std::set<GroupType> as_set(const std::vector<GroupType>& v) { return {v.begin(), v.end()}; }

// Z/n1 + Z/n2 with n1 | n2, n1 n2 = N, n1 | b - 2, by scanning divisors of N.
std::set<GroupType> elliptic_by_divisors(long q, long b) {
    const long n = q + 1 - b;
    std::set<GroupType> out;
    for (long n1 = 1; n1 * n1 <= n; ++n1) {
        if (n % (n1 * n1) != 0) continue;
        if ((b - 2) % n1 != 0) continue;
        const long n2 = n / n1;
        GroupType a = parse_group_label("Z/" + std::to_string(n1));
        out.insert(direct_sum(a, parse_group_label("Z/" + std::to_string(n2))));
    }
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("realizable_local_groups examples") {
    IntPoly f{9, -2, 1};
    CHECK(realizable_local_groups(f, 2) == std::vector<LocalGroupType>{LocalGroupType(2, {3}), LocalGroupType(2, {1, 2})});
    CHECK(realizable_local_groups(f, 3) == std::vector<LocalGroupType>{LocalGroupType(3, {})});
    CHECK(realizable_local_groups(IntPoly{5, -1, 1}, 5) == std::vector<LocalGroupType>{LocalGroupType(5, {1})});
    CHECK(code_of([] { realizable_local_groups(IntPoly{9, -6, 1}, 2); }) == ErrorCode::NotSquarefree);
    CHECK(code_of([] { realizable_local_groups(IntPoly{5, -5, 1}, 2); }) == ErrorCode::NotWeil);
    CHECK(code_of([] { realizable_local_groups(IntPoly{9, -2, 1}, 6); }) == ErrorCode::NotPrime);
}

TEST_CASE("is_realizable verdicts") {
    IntPoly f{9, -2, 1};
    CHECK(is_realizable(f, parse_group_label("Z/8")).realizable());
    CHECK(is_realizable(f, parse_group_label("Z/2 + Z/4")).realizable());

    auto three = is_realizable(f, parse_group_label("Z/2 + Z/2 + Z/2"));
    CHECK(three.status == RealizabilityVerdict::Status::TooManyGenerators);
    CHECK(three.failing_prime == Prime{2});
    CHECK(three.message.find("group not generated by 2 elements") != std::string::npos);

    auto wrong = is_realizable(f, parse_group_label("Z/4"));
    CHECK(wrong.status == RealizabilityVerdict::Status::WrongOrder);
    CHECK(wrong.message.find("wrong order") != std::string::npos);

    // f(1-t) = t^2 + t + 8 has Np vertices (0,3),(1,0),(2,0).
    auto poly = is_realizable(IntPoly{9, -3, 1}, parse_group_label("Z/7"));
    CHECK(poly.realizable());
    auto fail = is_realizable(IntPoly{8, -1, 1}, parse_group_label("Z/2 + Z/4"));
    CHECK(fail.status == RealizabilityVerdict::Status::PolygonFailure);
    CHECK(fail.failing_prime == Prime{2});
    CHECK(fail.failing_abscissa == 1);
}

TEST_CASE("classify_all examples") {
    auto r = classify_all(IntPoly{9, -2, 1}, 9);
    CHECK(r.total_count == 2);
    CHECK(r.per_prime.size() == 1);
    CHECK(drain(r.groups()) == labels({"Z/8", "Z/2 + Z/4"}));

    auto r5 = classify_all(IntPoly{5, -1, 1}, 5);
    CHECK(r5.total_count == 1);
    CHECK(drain(r5.groups()) == labels({"Z/5"}));

    CHECK(drain(classify_all(IntPoly{2, 2, 1}, 2).groups()) == labels({"Z/5"}));
    CHECK(code_of([] { classify_all(IntPoly{9, -6, 1}, 9); }) == ErrorCode::NotSquarefree);
    CHECK(code_of([] { classify_all(IntPoly{9, -2, 1}, 3); }) == ErrorCode::NotWeil);
}

TEST_CASE("elliptic_groups examples") {
    auto e96 = elliptic_groups(9, 6);
    CHECK(e96.supersingular);
    CHECK(e96.groups == labels({"Z/2 + Z/2"}));
    CHECK(elliptic_groups(9, 2).groups == labels({"Z/8", "Z/2 + Z/4"}));
    CHECK(elliptic_groups(5, 1).groups == labels({"Z/5"}));
    CHECK(code_of([] { elliptic_groups(9, 7); }) == ErrorCode::NotWeil);
    CHECK(code_of([] { elliptic_groups(6, 1); }) == ErrorCode::NotWeil);
    // N = 1 + 4 + 4 = 9 at b = -4 is 3^2, so (Z/3)^2.
    CHECK(elliptic_groups(4, -4).groups == labels({"Z/3 + Z/3"}));
}

TEST_CASE("elliptic_groups against divisor enumeration and classify_all") {
    for (long q = 2; q <= 40; ++q) {
        if (!is_prime_power_slow(q)) continue;
        for (long b = -12; b <= 12; ++b) {
            if (b * b >= 4 * q) continue;
            CAPTURE(q);
            CAPTURE(b);
            auto ell = elliptic_groups(q, b);
            CHECK_FALSE(ell.supersingular);
            CHECK(as_set(ell.groups) == elliptic_by_divisors(q, b));
            CHECK(ell.groups.size() == as_set(ell.groups).size());
            auto r = classify_all(IntPoly{q, -b, 1}, q);
            CHECK(as_set(drain(r.groups())) == as_set(ell.groups));
        }
    }
}

TEST_CASE("classification invariants on products of elliptic factors") {
    std::vector<std::pair<long, long>> pairs;
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
        for (long b = -5; b <= 5; ++b)
            if (b * b < 4 * q) pairs.emplace_back(q, b);

    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto [q, b1] = pairs[static_cast<std::size_t>(uniform(0, static_cast<long>(pairs.size()) - 1))];
        long b2 = uniform(-5, 5);
        if (b2 * b2 >= 4 * q || b2 == b1) continue;
        IntPoly f = IntPoly{q, -b1, 1} * IntPoly{q, -b2, 1};
        auto r = classify_all(f, q);
        ++checked;
        auto groups = drain(r.groups());
        CHECK(mpz_class(static_cast<unsigned long>(groups.size())) == r.total_count);
        CHECK(as_set(groups).size() == groups.size());
        const IntPoly shifted = substitute_one_minus_t(f);
        for (const auto& g : groups) {
            CHECK(g.order() == r.weil.order_n);
            CHECK(is_realizable(f, g).realizable());
        }
        // The cyclic group of each prime power always passes.
        for (const auto& [ell, local] : r.per_prime) {
            auto passing = local.passing();
            CHECK(std::find(passing.begin(), passing.end(), LocalGroupType(ell, {local.exponent})) != passing.end());
            CHECK(local.candidates.size() == static_cast<std::size_t>(avgroups::testing::partition_count(local.exponent, shifted.degree())));
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("raising the Newton polygon only enlarges the admissible set") {
    // Same valuations except one coefficient pushed up: Np can only rise.
    for (int trial = 0; trial < 200; ++trial) {
        const Prime ell = std::vector<Prime>{2, 3}[static_cast<std::size_t>(uniform(0, 1))];
        const int d = static_cast<int>(uniform(2, 4));
        std::vector<mpz_class> lo(static_cast<std::size_t>(d) + 1);
        lo[0] = prime_power(ell, static_cast<int>(uniform(1, 6)));
        lo[static_cast<std::size_t>(d)] = 1;
        for (int i = 1; i < d; ++i) lo[static_cast<std::size_t>(i)] = prime_power(ell, static_cast<int>(uniform(0, 4))) * (uniform(0, 1) ? 1 : -1);
        std::vector<mpz_class> hi = lo;
        const auto i = static_cast<std::size_t>(uniform(1, d - 1));
        hi[i] *= prime_power(ell, static_cast<int>(uniform(1, 3)));
        auto small = polygon_admissible_groups(IntPoly(lo), ell);
        auto large = polygon_admissible_groups(IntPoly(hi), ell);
        for (const auto& g : small) CHECK(std::find(large.begin(), large.end(), g) != large.end());
    }
}

TEST_CASE("conjecture_local_groups") {
    auto factors = avgroups::fixtures::nonsimple_surface_factors();
    auto res = conjecture_local_groups(factors, 2);
    CHECK(res.conjectural);
    CHECK(res.degree_hypothesis == false);
    CHECK(res.note.find("CONJECTURAL") != std::string::npos);
    std::vector<LocalGroupType> expected;
    for (const char* l : {"Z/4 + Z/32", "Z/4 + Z/2 + Z/16", "Z/4 + Z/4 + Z/8", "Z/4 + Z/2 + Z/2 + Z/8", "Z/4 + Z/2 + Z/4 + Z/4"})
        expected.push_back(parse_group_label(l).local(2));
    std::sort(expected.begin(), expected.end());
    CHECK(res.groups == expected);
    CHECK(std::find(res.groups.begin(), res.groups.end(), LocalGroupType(2, {3, 4})) == res.groups.end());

    IntPoly f{9, -2, 1};
    std::vector<IntPoly> single{f};
    auto one = conjecture_local_groups(single, 2);
    CHECK_FALSE(one.conjectural);
    CHECK(one.groups == realizable_local_groups(f, 2));

    auto coprime = conjecture_local_groups(factors, 3);
    CHECK(coprime.groups == std::vector<LocalGroupType>{LocalGroupType(3, {})});

    std::vector<IntPoly> unnested{IntPoly{3, 1}, IntPoly{9, -2, 1}};
    CHECK(code_of([&] { conjecture_local_groups(unnested, 2); }) == ErrorCode::FactorsNotNested);
    std::vector<IntPoly> repeated{IntPoly{9, 6, 1}};
    CHECK(code_of([&] { conjecture_local_groups(repeated, 2); }) == ErrorCode::NotSquarefree);
    std::vector<IntPoly> none;
    CHECK(code_of([&] { conjecture_local_groups(none, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("GroupEnumerator walks the product with the last prime fastest") {
    GroupEnumerator it({{2, {LocalGroupType(2, {2}), LocalGroupType(2, {1, 1})}},
                        {3, {LocalGroupType(3, {1}), LocalGroupType(3, {})}}});
    auto all = drain(std::move(it));
    CHECK(all.size() == 4);
    CHECK(group_label(all[0]) == "Z/4 + Z/3");
    CHECK(group_label(all[1]) == "Z/4");
    CHECK(group_label(all[2]) == "Z/2 + Z/2 + Z/3");
    CHECK(group_label(all[3]) == "Z/2 + Z/2");
    using Factors = std::vector<std::pair<Prime, std::vector<LocalGroupType>>>;
    CHECK(drain(GroupEnumerator(Factors{})).size() == 1);
    CHECK(drain(GroupEnumerator(Factors{{2, {}}})).empty());
}
