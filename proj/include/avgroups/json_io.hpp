#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "avgroups/abgroup.hpp"
#include "avgroups/classify.hpp"
#include "avgroups/intpoly.hpp"
#include "avgroups/lattice.hpp"
#include "avgroups/polygon.hpp"

namespace avgroups::json {

using nlohmann::json;

/// Always "num/den", e.g. "3/1", "-3/2".
std::string rational_string(const mpq_class& x);
mpq_class parse_rational(const std::string& text);

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
json integer(const mpz_class& n);

json polygon(const ConvexPolygon& p);
ConvexPolygon parse_polygon(const json& j);

/// {"label", "order", "components": {"2": [1, 2]}}
json group(const GroupType& g);
GroupType parse_group(const json& j);

json weil_report(const WeilReport& r);
json local_matrix(const LocalMatrix& m);
json witness(const Witness& w);

/// Streams at most `limit` full groups; sets "truncated" when more exist.
json classification(const ClassificationResult& r, std::size_t limit);

} // namespace avgroups::json
