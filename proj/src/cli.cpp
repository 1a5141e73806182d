#include "avgroups/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "avgroups/classify.hpp"
#include "avgroups/error.hpp"
#include "avgroups/fixtures.hpp"
#include "avgroups/json_io.hpp"
#include "avgroups/lattice.hpp"
#include "avgroups/oracle.hpp"

namespace avgroups::cli {

namespace {

using nlohmann::json;
namespace jio = avgroups::json;

mpz_class parse_big(const std::string& text, const char* what) {
    mpz_class out;
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty() || out.set_str(t, 10) != 0) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad integer for ") + what + ": \"" + text + "\"");
    }
    return out;
}

std::vector<IntPoly> parse_factor_list(const std::vector<std::string>& raw) {
    std::vector<IntPoly> out;
    for (const auto& item : raw) {
        std::size_t start = 0;
        for (;;) {
            std::size_t semi = item.find(';', start);
            std::string piece = item.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            if (!piece.empty()) out.push_back(parse_poly(piece));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }
    return out;
}

std::string vertices_text(const ConvexPolygon& p) {
    std::string out;
    for (const auto& v : p.vertices()) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(v.x) + "," + v.y.get_str() + ")";
    }
    return out;
}

std::string groups_text(const std::vector<LocalGroupType>& groups) {
    std::string out;
    for (const auto& g : groups) {
        if (!out.empty()) out += ", ";
        out += group_label(g);
    }
    return out.empty() ? "(none)" : out;
}

json groups_json(const std::vector<LocalGroupType>& groups) {
    json out = json::array();
    for (const auto& g : groups) out.push_back(group_label(g));
    return out;
}

std::uint64_t oracle_budget() {
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, std::string(kBudgetEnv) + " must be a positive integer");
        }
    }
    return kDefaultOracleBudget;
}

Prime require_prime_flag(const Invocation& inv) {
    if (!inv.prime) throw Error(ErrorCode::InvalidArgument, "--prime is required");
    require_prime(*inv.prime);
    return *inv.prime;
}

WeilReport checked_weil(const IntPoly& f, const Invocation& inv) {
    return inv.q.empty() ? require_classifiable(f) : require_classifiable(f, parse_big(inv.q, "--q"));
}

int cmd_validate(const Invocation& inv, std::ostream& out) {
    IntPoly f = parse_poly(inv.poly);
    WeilReport r = validate_weil(f, parse_big(inv.q, "--q"));
    if (inv.format == Format::Json) {
        out << jio::weil_report(r).dump() << "\n";
    } else {
        out << "polynomial: " << to_human(f) << "\n";
        out << "q: " << r.q.get_str();
        if (r.prime_power) out << " = " << r.p << "^" << r.q_exponent;
        out << "\n";
        out << "g: " << r.g << "\n";
        out << "monic: " << std::boolalpha << r.monic << "\n";
        out << "functional equation: " << r.functional_equation << "\n";
        out << "roots on circle: " << r.roots_on_circle << "\n";
        out << "squarefree: " << r.squarefree << "\n";
        out << "f(1): " << r.order_n.get_str() << "\n";
        out << "verdict: " << (r.accepted ? "accepted" : "rejected: " + r.reason) << "\n";
        out << "note: Honda-Tate existence conditions are not checked\n";
    }
    return r.accepted ? kExitOk : kExitFalse;
}

int cmd_classify(const Invocation& inv, std::ostream& out) {
    IntPoly f = parse_poly(inv.poly);
    ClassificationResult r = classify_all(f, parse_big(inv.q, "--q"));
    if (inv.format == Format::Json) {
        out << jio::classification(r, inv.limit).dump() << "\n";
        return kExitOk;
    }
    out << "f(1) = " << r.weil.order_n.get_str() << "\n";
    for (const auto& [ell, local] : r.per_prime) {
        out << "l = " << ell << ": Np " << vertices_text(local.newton) << "\n";
        for (const auto& c : local.candidates) {
            out << "  " << (c.passes ? "[x] " : "[ ] ") << group_label(c.group) << "  Hp " << vertices_text(c.hodge) << "\n";
        }
    }
    out << "total: " << r.total_count.get_str() << "\n";
    GroupEnumerator it = r.groups();
    std::size_t shown = 0;
    while (auto g = it.next()) {
        if (shown == inv.limit) {
            out << "... (truncated at " << inv.limit << ")\n";
            break;
        }
        out << group_label(*g) << "\n";
        ++shown;
    }
    return kExitOk;
}

int cmd_check(const Invocation& inv, std::ostream& out) {
    IntPoly f = parse_poly(inv.poly);
    checked_weil(f, inv);
    GroupType g = parse_group_label(inv.group);
    RealizabilityVerdict v = is_realizable(f, g);
    if (v.status == RealizabilityVerdict::Status::WrongOrder) throw Error(ErrorCode::WrongOrder, v.message);
    if (inv.format == Format::Json) {
        json j = {{"group", jio::group(g)}, {"verdict", v.realizable()}, {"message", v.message}};
        const char* status = "realizable";
        if (v.status == RealizabilityVerdict::Status::TooManyGenerators) status = "too_many_generators";
        if (v.status == RealizabilityVerdict::Status::PolygonFailure) status = "polygon_failure";
        j["status"] = status;
        if (v.failing_prime) j["failing_prime"] = *v.failing_prime;
        if (v.failing_abscissa) j["failing_abscissa"] = *v.failing_abscissa;
        out << j.dump() << "\n";
    } else {
        out << group_label(g) << ": " << (v.realizable() ? "true" : "false") << " (" << v.message << ")\n";
    }
    return v.realizable() ? kExitOk : kExitFalse;
}

int cmd_witness(const Invocation& inv, std::ostream& out) {
    IntPoly f = parse_poly(inv.poly);
    const Prime ell = require_prime_flag(inv);
    IntPoly shifted = f;
    if (!inv.shifted) {
        checked_weil(f, inv);
        shifted = substitute_one_minus_t(f);
    }
    LocalGroupType local = parse_group_label(inv.group).local(ell);
    Witness w = build_witness(shifted, local.parts(), ell);
    ElementaryDivisors divisors = smith_local(w.matrix);
    const bool verified = verify_witness(shifted, local.parts(), ell);
    if (inv.format == Format::Json) {
        json j = jio::witness(w);
        j["polynomial"] = to_csv(shifted);
        j["group"] = group_label(local);
        j["elementary_divisors"] = divisors.exponents;
        j["verified"] = verified;
        out << j.dump() << "\n";
    } else {
        out << "lattice for " << group_label(local) << " under x acting on Q_" << ell << "[x]/(" << to_human(shifted) << ")\n";
        for (std::size_t s = 0; s < w.basis.size(); ++s) {
            out << "  v_" << s << " = ";
            bool first = true;
            for (int i = w.basis[s].degree(); i >= 0; --i) {
                const mpq_class c = w.basis[s].coeff(static_cast<std::size_t>(i));
                if (c == 0) continue;
                if (first) out << (c < 0 ? "-" : "");
                else out << (c < 0 ? " - " : " + ");
                first = false;
                out << mpq_class(abs(c)).get_str() << (i > 0 ? "*x^" + std::to_string(i) : "");
            }
            out << "   M(" << s << ") = " << w.partial_sums[s] << "\n";
        }
        for (std::size_t s = 0; s < w.corrections.size(); ++s) out << "  u_" << s + 1 << " = " << w.corrections[s].get_str() << "\n";
        out << "matrix of x:\n";
        for (std::size_t i = 0; i < w.matrix.dim(); ++i) {
            out << "  [";
            for (std::size_t j = 0; j < w.matrix.dim(); ++j) out << (j ? ", " : "") << w.matrix(i, j).get_str();
            out << "]\n";
        }
        out << "elementary divisor exponents:";
        for (int e : divisors.exponents) out << " " << e;
        out << "\nverified: " << std::boolalpha << verified << "\n";
    }
    return verified ? kExitOk : kExitFalse;
}

int cmd_elliptic(const Invocation& inv, std::ostream& out) {
    EllipticResult r = elliptic_groups(parse_big(inv.q, "--q"), parse_big(inv.b, "--b"));
    if (inv.format == Format::Json) {
        json groups = json::array();
        for (const auto& g : r.groups) groups.push_back(group_label(g));
        out << json{{"groups", groups}, {"supersingular", r.supersingular}, {"note", r.note}}.dump() << "\n";
    } else {
        for (const auto& g : r.groups) out << group_label(g) << "\n";
        if (!r.note.empty()) out << "note: " << r.note << "\n";
    }
    return kExitOk;
}

int cmd_conjecture(const Invocation& inv, std::ostream& out) {
    const Prime ell = require_prime_flag(inv);
    std::vector<IntPoly> factors = parse_factor_list(inv.factors);
    ConjectureResult r = conjecture_local_groups(factors, ell);
    if (inv.format == Format::Json) {
        out << json{{"prime", ell},
                    {"groups", groups_json(r.groups)},
                    {"conjectural", r.conjectural},
                    {"degree_hypothesis", r.degree_hypothesis},
                    {"note", r.note}}
                   .dump()
            << "\n";
    } else {
        if (r.conjectural) out << "CONJECTURAL\n";
        for (const auto& g : r.groups) out << group_label(g) << "\n";
        out << "note: " << r.note << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const Invocation& inv, std::ostream& out) {
    IntPoly f = parse_poly(inv.poly);
    const Prime ell = require_prime_flag(inv);
    IntPoly shifted = f;
    std::vector<LocalGroupType> criterion;
    if (inv.shifted) {
        criterion = polygon_admissible_groups(shifted, ell);
    } else {
        checked_weil(f, inv);
        shifted = substitute_one_minus_t(f);
        criterion = realizable_local_groups(f, ell);
    }
    const int k = inv.bound >= 0 ? inv.bound : valuation(shifted.coeff(0) == 0 ? mpz_class(1) : shifted.coeff(0), ell) + 2;
    const std::uint64_t budget = oracle_budget();
    std::vector<LatticeCokernel> lattices = enumerate_cokernels(shifted, ell, k, budget);
    std::set<LocalGroupType> found;
    for (const auto& c : lattices) found.insert(c.divisors.group());
    std::vector<LocalGroupType> achievable(found.begin(), found.end());
    const bool equal = achievable == criterion;

    std::optional<bool> stable;
    if (inv.check_stability) stable = achievable_groups_bruteforce(shifted, ell, k + 1, budget) == achievable;

    if (inv.format == Format::Json) {
        json j = {{"prime", ell},
                  {"bound", k},
                  {"lattices", lattices.size()},
                  {"achievable", groups_json(achievable)},
                  {"criterion", groups_json(criterion)},
                  {"equal", equal}};
        if (stable) j["stable"] = *stable;
        out << j.dump() << "\n";
    } else {
        out << "invariant lattices of index dividing " << ell << "^" << k << ": " << lattices.size() << "\n";
        out << "achievable: " << groups_text(achievable) << "\n";
        out << "criterion:  " << groups_text(criterion) << "\n";
        out << "equal: " << std::boolalpha << equal << "\n";
        if (stable) out << "stable at k+1: " << *stable << "\n";
    }
    return equal && stable.value_or(true) ? kExitOk : kExitFalse;
}

int cmd_fixtures(const Invocation& inv, std::ostream& out) {
    auto outcomes = fixtures::run_all();
    bool all = true;
    json rows = json::array();
    for (const auto& o : outcomes) {
        all = all && o.passed;
        if (inv.format == Format::Json) {
            rows.push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        } else {
            out << (o.passed ? "PASS  " : "FAIL  ") << o.name << "  [" << o.detail << "]\n";
        }
    }
    if (inv.format == Format::Json) out << json{{"fixtures", rows}, {"all_passed", all}}.dump() << "\n";
    return all ? kExitOk : kExitFalse;
}

} // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
    try {
        if (inv.subcommand == "validate") return cmd_validate(inv, out);
        if (inv.subcommand == "classify") return cmd_classify(inv, out);
        if (inv.subcommand == "check") return cmd_check(inv, out);
        if (inv.subcommand == "witness") return cmd_witness(inv, out);
        if (inv.subcommand == "elliptic") return cmd_elliptic(inv, out);
        if (inv.subcommand == "conjecture") return cmd_conjecture(inv, out);
        if (inv.subcommand == "oracle") return cmd_oracle(inv, out);
        if (inv.subcommand == "fixtures") return cmd_fixtures(inv, out);
        throw Error(ErrorCode::InvalidArgument, "unknown subcommand \"" + inv.subcommand + "\"");
    } catch (const Error& e) {
        if (inv.format == Format::Json) {
            out << json{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return kExitError;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groups of rational points on abelian varieties in an isogeny class"};
    app.require_subcommand(1);
    app.fallthrough();
    Invocation inv;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto poly_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--poly", inv.poly, "Polynomial: \"9,-2,1\" or \"t^2-2*t+9\"");
        if (required) o->required();
    };
    auto* validate = app.add_subcommand("validate", "Screen a candidate Weil polynomial");
    poly_opt(validate, true);
    validate->add_option("--q", inv.q, "Field size")->required();

    auto* classify = app.add_subcommand("classify", "All groups of points in the isogeny class");
    poly_opt(classify, true);
    classify->add_option("--q", inv.q, "Field size")->required();
    classify->add_option("--limit", inv.limit, "Maximum number of full groups to print");

    auto* check = app.add_subcommand("check", "Decide whether a group occurs in the isogeny class");
    poly_opt(check, true);
    check->add_option("--q", inv.q, "Field size");
    check->add_option("--group", inv.group, "Group label, e.g. \"Z/2 + Z/4\"")->required();

    auto* witness = app.add_subcommand("witness", "Build and verify an explicit invariant lattice");
    poly_opt(witness, true);
    witness->add_option("--q", inv.q, "Field size");
    witness->add_option("--group", inv.group, "Group label")->required();
    witness->add_option("--prime", inv.prime, "The prime l")->required();
    witness->add_flag("--shifted", inv.shifted, "The polynomial is already det(E - t), not a Weil polynomial");

    auto* elliptic = app.add_subcommand("elliptic", "Groups of points on elliptic curves with trace b");
    elliptic->add_option("--q", inv.q, "Field size")->required();
    elliptic->add_option("--b", inv.b, "Trace of Frobenius")->required();

    auto* conjecture = app.add_subcommand("conjecture", "Direct sums over nested squarefree factors");
    conjecture->add_option("--factors", inv.factors, "Factors f_1;f_2;... (repeatable)")->required();
    conjecture->add_option("--prime", inv.prime, "The prime l")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force invariant lattice enumeration");
    poly_opt(oracle, true);
    oracle->add_option("--q", inv.q, "Field size");
    oracle->add_option("--prime", inv.prime, "The prime l")->required();
    oracle->add_option("--bound", inv.bound, "Index exponent bound k (default ord + 2)");
    oracle->add_flag("--shifted", inv.shifted, "The polynomial is already det(E - t), not a Weil polynomial");
    oracle->add_flag("--check-stability", inv.check_stability, "Also rerun at k + 1 and compare");

    auto* fixtures = app.add_subcommand("fixtures", "Rerun the regression fixtures");
    fixtures->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }
    inv.format = format == "json" ? Format::Json : Format::Text;
    for (auto* sub : app.get_subcommands()) inv.subcommand = sub->get_name();
    return run(inv, out, err);
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"avgroups"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return main(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace avgroups::cli
