#include <doctest.h>

#include <algorithm>

#include "avgroups/classify.hpp"
#include "avgroups/error.hpp"
#include "avgroups/fixtures.hpp"
#include "avgroups/lattice.hpp"
#include "test_support.hpp"

using namespace avgroups;
using avgroups::testing::determinant;
using avgroups::testing::rows_of;
using avgroups::testing::uniform;

namespace {

IntMatrix random_matrix(std::size_t n, long lo, long hi) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

// Random f(1-t)-shaped polynomial with lead (-1)^d and a_0 of bounded valuation.
IntPoly random_shifted(int d, Prime ell, int max_ord) {
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    long unit;
    do unit = uniform(-9, 9);
    while (unit % static_cast<long>(ell) == 0);
    c[0] = prime_power(ell, static_cast<int>(uniform(0, max_ord))) * unit;
    for (int i = 1; i < d; ++i) c[static_cast<std::size_t>(i)] = prime_power(ell, static_cast<int>(uniform(0, 4))) * uniform(-6, 6);
    c[static_cast<std::size_t>(d)] = d % 2 == 0 ? 1 : -1;
    return IntPoly(std::move(c));
}

RatPoly to_rat(const IntPoly& f) { return f.to_rational(); }

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

TEST_CASE("witness_matrix examples") {
    IntPoly f{8, 0, 1};
    std::vector<int> m12{1, 2}, m03{0, 3};
    CHECK(witness_matrix(f, m12, 2) == LocalMatrix(2, IntMatrix{{0, -4}, {2, 0}}));
    CHECK(witness_matrix(f, m03, 2) == LocalMatrix(2, IntMatrix{{0, -8}, {1, 0}}));

    Witness w = build_witness(f, m12, 2);
    CHECK(w.partial_sums == std::vector<int>{0, 1, 3});
    CHECK(w.corrections == std::vector<mpq_class>{0, 1});

    std::vector<int> zeros{0, 0};
    LocalMatrix unit = witness_matrix(IntPoly{3, 1, 1}, zeros, 2);
    CHECK(smith_local(unit).exponents == std::vector<int>{0, 0});

    std::vector<int> bad_order{1, 1};
    CHECK(code_of([&] { witness_matrix(f, bad_order, 2); }) == ErrorCode::WrongOrder);
    std::vector<int> three{1, 1, 1};
    CHECK(code_of([&] { witness_matrix(f, three, 2); }) == ErrorCode::TooManyGenerators);
    try {
        witness_matrix(IntPoly{8, 1, 1}, m12, 2);
        FAIL("expected polygon failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PolygonConditionViolated);
        CHECK(std::string(e.what()).find("polygon condition violated at s = 1") != std::string::npos);
    }
}

TEST_CASE("smith_local and cokernel_integer examples") {
    CHECK(smith_local(LocalMatrix(2, IntMatrix{{0, -4}, {2, 0}})).exponents == std::vector<int>{1, 2});
    CHECK(smith_local(LocalMatrix(2, IntMatrix{{0, -8}, {1, 0}})).exponents == std::vector<int>{0, 3});
    CHECK(smith_local(LocalMatrix(5, IntMatrix::identity(3))).exponents == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(smith_local(LocalMatrix(2, IntMatrix{{1, 2}, {2, 4}})), Error);

    CHECK(cokernel_integer(fixtures::nonsimple_surface_relations()) == parse_group_label("Z/8 + Z/16"));
    CHECK(cokernel_integer(IntMatrix{{2, 0}, {0, 6}}) == parse_group_label("Z/2 + Z/6"));
    CHECK(cokernel_integer(IntMatrix::identity(4)).is_trivial());
    CHECK(code_of([] { cokernel_integer(IntMatrix{{1, 2}, {2, 4}}); }) == ErrorCode::SingularMatrix);
    CHECK(smith_invariants(IntMatrix{{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4});
    CHECK(smith_invariants(IntMatrix{{1, 2}, {2, 4}}) == std::vector<mpz_class>{1, 0});
}

TEST_CASE("LocalMatrix rejects denominators divisible by ell") {
    LocalMatrix m(3, 2);
    CHECK_NOTHROW(m.set(0, 0, mpq_class(1, 2)));
    CHECK_THROWS_AS(m.set(0, 1, mpq_class(1, 6)), Error);
    CHECK_THROWS_AS(LocalMatrix(4, 2), Error);
    CHECK(LocalMatrix(3, std::vector<std::vector<mpq_class>>{{mpq_class(3, 2), 1}, {0, 1}}).is_integral());
    CHECK_THROWS_AS(LocalMatrix(3, std::vector<std::vector<mpq_class>>{{mpq_class(1, 3), 1}, {0, 1}}), Error);
}

TEST_CASE("witness structure on random admissible data") {
    int built = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const Prime ell = std::vector<Prime>{2, 3, 5}[static_cast<std::size_t>(uniform(0, 2))];
        const int d = static_cast<int>(uniform(2, 4));
        IntPoly f = random_shifted(d, ell, 6);
        if (!is_squarefree(f)) continue;
        const int m = valuation(f.coeff(0), ell);
        for (const auto& g : polygon_admissible_groups(f, ell)) {
            Witness w = build_witness(f, g.parts(), ell);
            ++built;
            const LocalMatrix& M = w.matrix;
            CHECK(M.is_integral());
            CHECK(valuation(determinant(rows_of(M)), ell) == m);
            CHECK(characteristic_polynomial(M) == to_rat(f).monic());
            CHECK(smith_local(M).group() == g);
            CHECK(verify_witness(f, g.parts(), ell));

            // Column j of M expresses x * v_j in the basis, modulo f.
            const RatPoly fr = to_rat(f);
            const RatPoly x(std::vector<mpq_class>{0, 1});
            for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
                RatPoly lhs = divmod(x * w.basis[j], fr).second;
                RatPoly rhs;
                for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) rhs = rhs + M(i, j) * w.basis[i];
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK(built > 200);
}

TEST_CASE("characteristic_polynomial against the determinant") {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
        IntMatrix m = random_matrix(n, -9, 9);
        RatPoly p = characteristic_polynomial(LocalMatrix(7, m));
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.leading() == 1);
        for (long t : {-2L, 0L, 3L}) {
            auto rows = rows_of(m);
            for (std::size_t i = 0; i < n; ++i) {
                for (auto& x : rows[i]) x = -x;
                rows[i][i] += t;
            }
            CHECK(p(mpq_class(t)) == determinant(rows));
        }
    }
}

TEST_CASE("smith_local agrees with the integer cokernel") {
    int nonsingular = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
        IntMatrix m = random_matrix(n, -12, 12);
        const mpq_class det = determinant(rows_of(m));
        if (det == 0) {
            CHECK_THROWS_AS(cokernel_integer(m), Error);
            continue;
        }
        ++nonsingular;
        GroupType g = cokernel_integer(m);
        CHECK(g.order() == abs(det.get_num()));
        auto inv = smith_invariants(m);
        for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
        for (Prime ell : {2ULL, 3ULL, 5ULL, 7ULL}) {
            ElementaryDivisors e = smith_local(LocalMatrix(ell, m));
            CHECK(e.exponents.size() == n);
            CHECK(e.group() == g.local(ell));
        }
    }
    CHECK(nonsingular > 150);
}
