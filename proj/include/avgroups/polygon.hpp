#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "avgroups/intpoly.hpp"
#include "avgroups/numtheory.hpp"

namespace avgroups {

struct Vertex {
    std::int64_t x = 0;
    mpq_class y;

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }
};

/// Lower-convex piecewise-linear path over [x_0, x_n]. Collinear interior
/// vertices are merged on construction, so stored slopes strictly increase.
class ConvexPolygon {
public:
    /// Throws InvalidArgument unless x strictly increases and the path is convex.
    explicit ConvexPolygon(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& left() const { return vertices_.front(); }
    const Vertex& right() const { return vertices_.back(); }
    std::vector<mpq_class> slopes() const;

    /// Piecewise-linear interpolation; x must lie in the span.
    mpq_class value_at(const mpq_class& x) const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Lower convex hull of {(i, ord_ell(Q_i)) : Q_i != 0}.
ConvexPolygon newton_polygon(const IntPoly& poly, Prime ell);

/// Vertices (i, m_1 + ... + m_{r-i}) for the parts zero-padded to r entries.
/// Throws TooManyGenerators if more than r parts are nonzero.
ConvexPolygon hodge_polygon(std::span<const int> parts, int r);

/// First integer abscissa where `upper` dips below `lower`, if any.
/// Throws SpanMismatch when the spans differ.
std::optional<std::int64_t> first_violation(const ConvexPolygon& upper, const ConvexPolygon& lower);

bool lies_on_or_above(const ConvexPolygon& upper, const ConvexPolygon& lower);

bool endpoints_match(const ConvexPolygon& a, const ConvexPolygon& b);

} // namespace avgroups
