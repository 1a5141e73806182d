#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "avgroups/abgroup.hpp"
#include "avgroups/intpoly.hpp"
#include "avgroups/polygon.hpp"

namespace avgroups {

struct LocalCandidate {
    LocalGroupType group;
    ConvexPolygon hodge;
    bool passes = false;
};

/// Every ell-group of the right order with at most deg(shifted) generators,
/// tested against the Newton polygon of the shifted polynomial.
struct LocalClassification {
    Prime ell = 0;
    int exponent = 0; // ord_ell(shifted(0))
    ConvexPolygon newton;
    std::vector<LocalCandidate> candidates;

    std::vector<LocalGroupType> passing() const;
};

/// Lattice-level criterion on any polynomial with nonzero constant term:
/// partitions of ord_ell(shifted(0)) into at most deg(shifted) parts whose
/// Hodge polygon lies on or below Np_ell(shifted).
LocalClassification classify_local(const IntPoly& shifted, Prime ell);
std::vector<LocalGroupType> polygon_admissible_groups(const IntPoly& shifted, Prime ell);

/// Throws NotWeil or NotSquarefree unless f is an accepted, squarefree Weil
/// polynomial; returns its report.
WeilReport require_classifiable(const IntPoly& f);
WeilReport require_classifiable(const IntPoly& f, const mpz_class& q);

/// ell-primary groups of points realized in the isogeny class of f.
std::vector<LocalGroupType> realizable_local_groups(const IntPoly& f, Prime ell);

struct RealizabilityVerdict {
    enum class Status { Realizable, WrongOrder, TooManyGenerators, PolygonFailure };
    Status status = Status::Realizable;
    std::optional<Prime> failing_prime;
    std::optional<std::int64_t> failing_abscissa;
    std::string message;

    bool realizable() const { return status == Status::Realizable; }
};

RealizabilityVerdict is_realizable(const IntPoly& f, const GroupType& group);

/// Lazy Cartesian product of per-prime lists. Single consumer.
class GroupEnumerator {
public:
    explicit GroupEnumerator(std::vector<std::pair<Prime, std::vector<LocalGroupType>>> factors);

    std::optional<GroupType> next();

private:
    std::vector<std::pair<Prime, std::vector<LocalGroupType>>> factors_;
    std::vector<std::size_t> odometer_;
    bool done_ = false;
};

struct ClassificationResult {
    WeilReport weil;
    std::map<Prime, LocalClassification> per_prime;
    mpz_class total_count;

    GroupEnumerator groups() const;
};

ClassificationResult classify_all(const IntPoly& f, const mpz_class& q);

struct EllipticResult {
    std::vector<GroupType> groups;
    bool supersingular = false; // b^2 = 4q
    std::string note;
};

/// Groups Z/n1 + Z/n2 of the elliptic class with trace b over F_q.
EllipticResult elliptic_groups(const mpz_class& q, const mpz_class& b);

struct ConjectureResult {
    Prime ell = 0;
    std::vector<LocalGroupType> groups;
    bool conjectural = true;
    bool degree_hypothesis = false; // every deg f_j <= 2
    std::string note;
};

/// Direct sums G_1 + ... + G_s with each G_j passing the polygon test for
/// f_j(1-t) at width deg f_j. Factors must be squarefree and nested
/// (f_j divides f_{j-1}).
ConjectureResult conjecture_local_groups(std::span<const IntPoly> factors, Prime ell);

} // namespace avgroups
