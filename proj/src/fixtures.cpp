#include "avgroups/fixtures.hpp"

#include <algorithm>

#include "avgroups/abgroup.hpp"
#include "avgroups/classify.hpp"
#include "avgroups/error.hpp"
#include "avgroups/polygon.hpp"

namespace avgroups::fixtures {

IntPoly nonsimple_surface_weil_polynomial() {
    return IntPoly{9, -2, 1} * IntPoly{3, 1}.pow(2);
}

std::vector<IntPoly> nonsimple_surface_factors() {
    return {IntPoly{9, -2, 1} * IntPoly{3, 1}, IntPoly{3, 1}};
}

IntMatrix nonsimple_surface_relations() {
    return IntMatrix{
        {4, 0, 4, 8},
        {0, 0, -1, 0},
        {2, 16, 4, 0},
        {-1, 0, 0, 0},
    };
}

namespace {

std::string vertex_list(const ConvexPolygon& p) {
    std::string out;
    for (const auto& v : p.vertices()) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(v.x) + "," + v.y.get_str() + ")";
    }
    return out;
}

template <class Check>
FixtureOutcome attempt(std::string name, Check&& check) {
    FixtureOutcome out{std::move(name), false, {}};
    try {
        auto [ok, detail] = check();
        out.passed = ok;
        out.detail = std::move(detail);
    } catch (const std::exception& e) {
        out.detail = std::string("threw: ") + e.what();
    }
    return out;
}

} // namespace

std::vector<FixtureOutcome> run_all() {
    std::vector<FixtureOutcome> out;

    out.push_back(attempt("hodge polygon of Z/l + Z/l is a straight line", [] {
        std::vector<int> parts{1, 1};
        ConvexPolygon p = hodge_polygon(parts, 2);
        std::string got = vertex_list(p);
        return std::pair{got == "(0,2) (2,0)", got};
    }));

    out.push_back(attempt("hodge polygon of Z/l^2 has a zero slope", [] {
        std::vector<int> parts{2};
        ConvexPolygon p = hodge_polygon(parts, 2);
        std::string got = vertex_list(p);
        return std::pair{got == "(0,2) (1,0) (2,0)", got};
    }));

    out.push_back(attempt("(t-3)^2 over F_9 has only (Z/2)^2", [] {
        IntPoly f{9, -6, 1};
        WeilReport report = validate_weil(f, 9);
        EllipticResult ell = elliptic_groups(9, 6);
        bool ok = report.accepted && !report.squarefree && report.order_n == 4 && ell.groups.size() == 1 &&
                  group_label(ell.groups.front()) == "Z/2 + Z/2";
        bool refused = false;
        try {
            classify_all(f, 9);
        } catch (const Error& e) {
            refused = e.code() == ErrorCode::NotSquarefree;
        }
        std::string detail = ell.groups.empty() ? "no groups" : group_label(ell.groups.front());
        return std::pair{ok && refused, detail};
    }));

    out.push_back(attempt("non-split surface lattice has cokernel Z/8 + Z/16", [] {
        GroupType g = cokernel_integer(nonsimple_surface_relations());
        bool ok = group_label(g) == "Z/8 + Z/16" && g.order() == eval_at_one(nonsimple_surface_weil_polynomial());
        return std::pair{ok, group_label(g)};
    }));

    out.push_back(attempt("Z/8 + Z/16 is not a nested direct sum", [] {
        auto factors = nonsimple_surface_factors();
        ConjectureResult res = conjecture_local_groups(factors, 2);
        LocalGroupType target(2, {3, 4});
        bool absent = std::find(res.groups.begin(), res.groups.end(), target) == res.groups.end();
        bool no_z4 = !subtract_summand(GroupType(target), GroupType(LocalGroupType(2, {2}))).has_value();
        return std::pair{absent && no_z4 && res.groups.size() == 5,
                         std::to_string(res.groups.size()) + " conjectured groups"};
    }));

    return out;
}

} // namespace avgroups::fixtures
