#include "avgroups/abgroup.hpp"

#include <algorithm>
#include <cctype>

#include "avgroups/error.hpp"

namespace avgroups {

namespace {

// Ascending partitions of `remaining` into exactly `count` parts, each >= min_part.
void exact_parts(int remaining, int count, int min_part, Partition& prefix, std::vector<Partition>& out) {
    if (count == 0) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    if (count == 1) {
        if (remaining >= min_part) {
            prefix.push_back(remaining);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (int p = min_part; p * count <= remaining; ++p) {
        prefix.push_back(p);
        exact_parts(remaining - p, count - 1, p, prefix, out);
        prefix.pop_back();
    }
}

Partition canonical(std::vector<int> exponents) {
    Partition out;
    for (int e : exponents) {
        if (e < 0) throw Error(ErrorCode::InvalidArgument, "group exponents must be nonnegative");
        if (e > 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Partition> partitions_bounded(int m, int max_parts) {
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "cannot partition a negative integer");
    if (m == 0) return {Partition{}};
    std::vector<Partition> out;
    Partition prefix;
    for (int count = 1; count <= std::min(m, max_parts); ++count) exact_parts(m, count, 1, prefix, out);
    return out;
}

bool shortlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<int> pad_parts(const Partition& parts, int r) {
    std::vector<int> nonzero;
    for (int p : parts)
        if (p != 0) nonzero.push_back(p);
    if (static_cast<int>(nonzero.size()) > r) {
        throw Error(ErrorCode::TooManyGenerators, "group not generated by " + std::to_string(r) + " elements");
    }
    std::sort(nonzero.begin(), nonzero.end());
    std::vector<int> out(static_cast<std::size_t>(r) - nonzero.size(), 0);
    out.insert(out.end(), nonzero.begin(), nonzero.end());
    return out;
}

LocalGroupType::LocalGroupType(Prime ell, std::vector<int> exponents)
    : ell_(ell), parts_(canonical(std::move(exponents))) {}

int LocalGroupType::exponent_sum() const {
    int sum = 0;
    for (int p : parts_) sum += p;
    return sum;
}

mpz_class LocalGroupType::order() const { return prime_power(ell_, exponent_sum()); }

GroupType::GroupType(const std::map<Prime, std::vector<int>>& components) {
    for (const auto& [ell, exps] : components) {
        Partition parts = canonical(exps);
        if (!parts.empty()) components_.emplace(ell, std::move(parts));
    }
}

GroupType::GroupType(const LocalGroupType& local) {
    if (!local.is_trivial()) components_.emplace(local.prime(), local.parts());
}

LocalGroupType GroupType::local(Prime ell) const {
    auto it = components_.find(ell);
    return it == components_.end() ? LocalGroupType(ell, {}) : LocalGroupType(ell, it->second);
}

mpz_class GroupType::order() const {
    mpz_class out = 1;
    for (const auto& [ell, parts] : components_) out *= LocalGroupType(ell, parts).order();
    return out;
}

bool operator<(const GroupType& a, const GroupType& b) {
    auto ia = a.components_.begin();
    auto ib = b.components_.begin();
    for (; ia != a.components_.end() && ib != b.components_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return shortlex_less(ia->second, ib->second);
    }
    return ia == a.components_.end() && ib != b.components_.end();
}

GroupType direct_sum(const GroupType& a, const GroupType& b) {
    std::map<Prime, std::vector<int>> merged;
    for (const auto& [ell, parts] : a.components()) merged[ell] = parts;
    for (const auto& [ell, parts] : b.components()) merged[ell].insert(merged[ell].end(), parts.begin(), parts.end());
    return GroupType(merged);
}

std::optional<GroupType> subtract_summand(const GroupType& g, const GroupType& s) {
    std::map<Prime, std::vector<int>> rest;
    for (const auto& [ell, parts] : g.components()) rest[ell] = parts;
    for (const auto& [ell, parts] : s.components()) {
        auto it = rest.find(ell);
        if (it == rest.end()) return std::nullopt;
        for (int p : parts) {
            auto pos = std::find(it->second.begin(), it->second.end(), p);
            if (pos == it->second.end()) return std::nullopt;
            it->second.erase(pos);
        }
    }
    return GroupType(rest);
}

std::string group_label(const GroupType& g) {
    if (g.is_trivial()) return "0";
    std::string out;
    for (const auto& [ell, parts] : g.components()) {
        for (int e : parts) {
            if (!out.empty()) out += " + ";
            out += "Z/" + prime_power(ell, e).get_str();
        }
    }
    return out;
}

std::string group_label(const LocalGroupType& g) { return group_label(GroupType(g)); }

GroupType parse_group_label(std::string_view text) {
    auto bad = [&](const std::string& why) -> Error {
        return Error(ErrorCode::MalformedGroup, "malformed group \"" + std::string(text) + "\": " + why);
    };
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw bad("empty input");
    if (compact == "0") return {};

    std::map<Prime, std::vector<int>> components;
    std::size_t start = 0;
    for (;;) {
        std::size_t plus = compact.find('+', start);
        std::string token = compact.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (token.size() < 3 || (token[0] != 'Z' && token[0] != 'z') || token[1] != '/') throw bad("expected Z/n");
        std::string digits = token.substr(2);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw bad("bad modulus \"" + digits + "\"");
        mpz_class n(digits, 10);
        if (n == 0) throw bad("modulus must be positive");
        for (const auto& [ell, e] : factorize(n)) components[ell].push_back(e);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return GroupType(components);
}

} // namespace avgroups
