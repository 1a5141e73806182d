#include "avgroups/json_io.hpp"

#include <limits>

#include "avgroups/error.hpp"

namespace avgroups::json {

std::string rational_string(const mpq_class& x) {
    mpq_class c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    mpq_class out;
    if (out.set_str(text, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational \"" + text + "\"");
    if (out.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in \"" + text + "\"");
    out.canonicalize();
    return out;
}

json integer(const mpz_class& n) {
    if (mpz_fits_slong_p(n.get_mpz_t())) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

json polygon(const ConvexPolygon& p) {
    json vertices = json::array();
    for (const auto& v : p.vertices()) vertices.push_back(json::array({v.x, rational_string(v.y)}));
    return {{"vertices", vertices}};
}

ConvexPolygon parse_polygon(const json& j) {
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back({v.at(0).get<std::int64_t>(), parse_rational(v.at(1).get<std::string>())});
    return ConvexPolygon(std::move(vertices));
}

json group(const GroupType& g) {
    json components = json::object();
    for (const auto& [ell, parts] : g.components()) components[std::to_string(ell)] = parts;
    return {{"label", group_label(g)}, {"order", integer(g.order())}, {"components", components}};
}

GroupType parse_group(const json& j) {
    std::map<Prime, std::vector<int>> components;
    for (const auto& [key, parts] : j.at("components").items()) {
        components[std::stoull(key)] = parts.get<std::vector<int>>();
    }
    GroupType g(components);
    if (j.contains("order") && integer(g.order()) != j.at("order")) {
        throw Error(ErrorCode::MalformedGroup, "group order does not match its components");
    }
    return g;
}

json weil_report(const WeilReport& r) {
    return {
        {"q", integer(r.q)},
        {"p", r.p},
        {"q_exponent", r.q_exponent},
        {"g", r.g},
        {"prime_power", r.prime_power},
        {"monic", r.monic},
        {"even_degree", r.even_degree},
        {"functional_equation", r.functional_equation},
        {"roots_on_circle", r.roots_on_circle},
        {"squarefree", r.squarefree},
        {"order_n", integer(r.order_n)},
        {"verdict", r.accepted ? "accepted" : "rejected"},
        {"reason", r.reason},
        {"honda_tate_checked", r.honda_tate_checked},
    };
}

json local_matrix(const LocalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(rational_string(m(i, j)));
        rows.push_back(row);
    }
    return {{"prime", m.prime()}, {"rows", rows}};
}

json witness(const Witness& w) {
    json corrections = json::array();
    for (const auto& u : w.corrections) corrections.push_back(rational_string(u));
    json basis = json::array();
    for (const auto& v : w.basis) {
        json coeffs = json::array();
        for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(v.degree(), 0)); ++i) coeffs.push_back(rational_string(v.coeff(i)));
        basis.push_back(coeffs);
    }
    return {
        {"matrix", local_matrix(w.matrix)},
        {"parts", w.parts},
        {"partial_sums", w.partial_sums},
        {"corrections", corrections},
        {"basis", basis},
    };
}

json classification(const ClassificationResult& r, std::size_t limit) {
    json per_prime = json::object();
    for (const auto& [ell, local] : r.per_prime) {
        json candidates = json::array();
        for (const auto& c : local.candidates) {
            candidates.push_back({
                {"group", group_label(c.group)},
                {"parts", c.group.parts()},
                {"hodge", polygon(c.hodge)},
                {"passes", c.passes},
            });
        }
        per_prime[std::to_string(ell)] = {
            {"exponent", local.exponent},
            {"newton", polygon(local.newton)},
            {"candidates", candidates},
        };
    }
    json groups = json::array();
    GroupEnumerator it = r.groups();
    bool truncated = false;
    while (auto g = it.next()) {
        if (groups.size() >= limit) {
            truncated = true;
            break;
        }
        groups.push_back(group_label(*g));
    }
    return {
        {"weil", weil_report(r.weil)},
        {"per_prime", per_prime},
        {"total_count", integer(r.total_count)},
        {"groups", groups},
        {"truncated", truncated},
    };
}

} // namespace avgroups::json
