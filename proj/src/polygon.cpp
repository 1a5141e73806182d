#include "avgroups/polygon.hpp"

#include <algorithm>
#include <string>

#include "avgroups/error.hpp"

namespace avgroups {

namespace {

// Sign of the turn a -> b -> c; positive means b lies strictly below chord ac.
int turn(const Vertex& a, const Vertex& b, const Vertex& c) {
    mpq_class cross = mpq_class(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * mpq_class(c.x - a.x);
    return sgn(cross);
}

} // namespace

ConvexPolygon::ConvexPolygon(std::vector<Vertex> vertices) {
    if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "polygon needs at least one vertex");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].x <= vertices[i - 1].x)
            throw Error(ErrorCode::InvalidArgument, "polygon abscissae must strictly increase");
    }
    for (auto& v : vertices) {
        v.y.canonicalize();
        while (vertices_.size() >= 2) {
            int t = turn(vertices_[vertices_.size() - 2], vertices_.back(), v);
            if (t > 0) break;
            if (t < 0) throw Error(ErrorCode::InvalidArgument, "polygon is not lower convex");
            vertices_.pop_back();
        }
        vertices_.push_back(std::move(v));
    }
}

std::vector<mpq_class> ConvexPolygon::slopes() const {
    std::vector<mpq_class> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        out.push_back((vertices_[i].y - vertices_[i - 1].y) / mpq_class(vertices_[i].x - vertices_[i - 1].x));
    return out;
}

mpq_class ConvexPolygon::value_at(const mpq_class& x) const {
    if (x < left().x || x > right().x) throw Error(ErrorCode::InvalidArgument, "abscissa outside polygon span");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const Vertex& a = vertices_[i - 1];
        const Vertex& b = vertices_[i];
        if (x <= b.x) return a.y + (b.y - a.y) * (x - a.x) / mpq_class(b.x - a.x);
    }
    return left().y;
}

ConvexPolygon newton_polygon(const IntPoly& poly, Prime ell) {
    require_prime(ell);
    if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
    if (poly.coeff(0) == 0) throw Error(ErrorCode::ConstantTermVanishes, "constant term vanishes");
    // Andrew's monotone chain, lower half only; zero coefficients are absent.
    std::vector<Vertex> hull;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        if (poly.coeffs()[i] == 0) continue;
        Vertex v{static_cast<std::int64_t>(i), mpq_class(valuation(poly.coeffs()[i], ell))};
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), v) <= 0) hull.pop_back();
        hull.push_back(std::move(v));
    }
    return ConvexPolygon(std::move(hull));
}

ConvexPolygon hodge_polygon(std::span<const int> parts, int r) {
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "Hodge polygon width must be positive");
    std::vector<int> m;
    for (int p : parts) {
        if (p < 0) throw Error(ErrorCode::InvalidArgument, "group exponents must be nonnegative");
        if (p > 0) m.push_back(p);
    }
    if (static_cast<int>(m.size()) > r) {
        throw Error(ErrorCode::TooManyGenerators,
                    "group not generated by " + std::to_string(r) + " elements");
    }
    std::sort(m.begin(), m.end());
    m.insert(m.begin(), static_cast<std::size_t>(r) - m.size(), 0);

    std::vector<Vertex> vertices;
    long height = 0;
    for (int p : m) height += p;
    for (int i = 0; i <= r; ++i) {
        vertices.push_back({i, mpq_class(height)});
        if (i < r) height -= m[static_cast<std::size_t>(r - 1 - i)];
    }
    return ConvexPolygon(std::move(vertices));
}

std::optional<std::int64_t> first_violation(const ConvexPolygon& upper, const ConvexPolygon& lower) {
    if (upper.left().x != lower.left().x || upper.right().x != lower.right().x) {
        throw Error(ErrorCode::SpanMismatch, "polygons span different abscissa ranges");
    }
    for (std::int64_t x = upper.left().x; x <= upper.right().x; ++x) {
        if (upper.value_at(x) < lower.value_at(x)) return x;
    }
    return std::nullopt;
}

bool lies_on_or_above(const ConvexPolygon& upper, const ConvexPolygon& lower) {
    return !first_violation(upper, lower).has_value();
}

bool endpoints_match(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.left() == b.left() && a.right() == b.right();
}

} // namespace avgroups
