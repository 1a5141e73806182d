#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "avgroups/numtheory.hpp"

namespace avgroups {

/// Ascending positive exponents m_1 <= ... <= m_r.
using Partition = std::vector<int>;

/// Partitions of m into at most max_parts positive parts, each ascending.
/// Ordered by number of parts, then lexicographically.
std::vector<Partition> partitions_bounded(int m, int max_parts);

/// Shortlex comparison matching the enumeration order above.
bool shortlex_less(const Partition& a, const Partition& b);

/// Zero-padded on the left to exactly r entries. Throws TooManyGenerators.
std::vector<int> pad_parts(const Partition& parts, int r);

/// The ell-group Z/ell^{m_1} + ... + Z/ell^{m_r}, stored without zero parts.
class LocalGroupType {
public:
    LocalGroupType(Prime ell, std::vector<int> exponents);

    Prime prime() const { return ell_; }
    const Partition& parts() const { return parts_; }
    int exponent_sum() const;
    std::size_t rank() const { return parts_.size(); }
    mpz_class order() const;
    bool is_trivial() const { return parts_.empty(); }

    std::vector<int> padded(int r) const { return pad_parts(parts_, r); }

    friend bool operator==(const LocalGroupType&, const LocalGroupType&) = default;
    friend bool operator<(const LocalGroupType& a, const LocalGroupType& b) {
        if (a.ell_ != b.ell_) return a.ell_ < b.ell_;
        return shortlex_less(a.parts_, b.parts_);
    }

private:
    Prime ell_;
    Partition parts_;
};

/// A finite abelian group as its primary components.
class GroupType {
public:
    GroupType() = default;
    /// Drops trivial components; partitions are sorted and zeros removed.
    explicit GroupType(const std::map<Prime, std::vector<int>>& components);
    explicit GroupType(const LocalGroupType& local);

    const std::map<Prime, Partition>& components() const { return components_; }
    /// The ell-primary component (possibly trivial).
    LocalGroupType local(Prime ell) const;
    mpz_class order() const;
    bool is_trivial() const { return components_.empty(); }

    friend bool operator==(const GroupType&, const GroupType&) = default;
    friend bool operator<(const GroupType& a, const GroupType& b);

private:
    std::map<Prime, Partition> components_;
};

GroupType direct_sum(const GroupType& a, const GroupType& b);

/// Complement of s in g when the cyclic factors of s are a sub-multiset of
/// those of g at every prime.
std::optional<GroupType> subtract_summand(const GroupType& g, const GroupType& s);

/// "Z/2 + Z/4 + Z/3", ascending by prime then exponent; "0" when trivial.
std::string group_label(const GroupType& g);
std::string group_label(const LocalGroupType& g);

/// Inverse of group_label. Factors may appear in any order and "Z/n" with
/// composite n is split into its primary parts ("Z/6" = "Z/2 + Z/3").
GroupType parse_group_label(std::string_view text);

} // namespace avgroups
