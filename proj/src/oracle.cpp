#include "avgroups/oracle.hpp"

#include <set>
#include <string>

#include "avgroups/error.hpp"

namespace avgroups {

IntMatrix companion_matrix(const IntPoly& f) {
    const int d = f.degree();
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "companion matrix needs positive degree");
    const mpz_class& lead = f.leading();
    if (lead != 1 && lead != -1) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be +1 or -1");
    const auto n = static_cast<std::size_t>(d);
    IntMatrix out(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) out(j + 1, j) = 1;
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = -f.coeff(i) * lead;
    return out;
}

std::optional<IntMatrix> restricted_action(const IntMatrix& e, const IntMatrix& hnf) {
    const std::size_t n = hnf.rows();
    IntMatrix image = e * hnf;
    IntMatrix coeffs(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<mpz_class> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = image(i, col);
        for (std::size_t r = n; r-- > 0;) {
            if (!mpz_divisible_p(w[r].get_mpz_t(), hnf(r, r).get_mpz_t())) return std::nullopt;
            mpz_class c = w[r] / hnf(r, r);
            coeffs(r, col) = c;
            if (c != 0)
                for (std::size_t i = 0; i <= r; ++i) w[i] -= c * hnf(i, r);
        }
    }
    return coeffs;
}

bool recheck_invariance(const IntMatrix& e, const IntMatrix& hnf, Prime ell) {
    const std::size_t n = hnf.rows();
    IntMatrix image = e * hnf;
    // Augmented [H | E H], reduced to [I | H^{-1} E H].
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = hnf(i, j);
            aug[i][n + j] = image(i, j);
        }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug[p][k] == 0) ++p;
        if (p == n) return false;
        std::swap(aug[p], aug[k]);
        const mpq_class pivot = aug[k][k];
        for (auto& x : aug[k]) x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug[i][k] == 0) continue;
            const mpq_class factor = aug[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= factor * aug[k][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < 2 * n; ++j)
            if (aug[i][j] != 0 && valuation(aug[i][j], ell) < 0) return false;
    return true;
}

namespace {

// Calls visit(H) for every canonical HNF with ell-power diagonal and
// exponent sum <= k.
template <class Visit>
void for_each_hnf(std::size_t n, Prime ell, int k, Visit&& visit) {
    std::vector<int> exps(n, 0);
    auto visit_offdiagonal = [&]() {
        IntMatrix h(n, n);
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        std::vector<mpz_class> bounds;
        for (std::size_t i = 0; i < n; ++i) {
            h(i, i) = prime_power(ell, exps[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (exps[i] == 0) continue;
                slots.emplace_back(i, j);
                bounds.push_back(h(i, i));
            }
        }
        for (;;) {
            visit(h);
            std::size_t s = slots.size();
            bool carried_out = true;
            while (s > 0) {
                --s;
                auto [i, j] = slots[s];
                if (++h(i, j) < bounds[s]) {
                    carried_out = false;
                    break;
                }
                h(i, j) = 0;
            }
            if (carried_out) return;
        }
    };
    // Diagonal exponent tuples in lexicographic order.
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == n) {
            visit_offdiagonal();
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    recurse(recurse, 0, k);
}

} // namespace

std::vector<SublatticeBasis> enumerate_invariant_sublattices(const IntMatrix& e, Prime ell, int k, std::uint64_t budget) {
    require_prime(ell);
    if (e.rows() != e.cols() || e.rows() == 0) throw Error(ErrorCode::InvalidArgument, "operator must be a nonempty square matrix");
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "index bound must be nonnegative");
    const std::size_t n = e.rows();
    const mpz_class cost = prime_power(ell, static_cast<int>(n) * k);
    if (cost > mpz_class(std::to_string(budget))) {
        throw Error(ErrorCode::BudgetExceeded, "search size ell^(d*k) = " + cost.get_str() + " exceeds the budget " +
                                                   std::to_string(budget) + " (d = " + std::to_string(n) +
                                                   ", k = " + std::to_string(k) + ")");
    }
    std::vector<SublatticeBasis> out;
    for_each_hnf(n, ell, k, [&](const IntMatrix& h) {
        if (!restricted_action(e, h)) return;
        mpz_class index = 1;
        for (std::size_t i = 0; i < n; ++i) index *= h(i, i);
        out.push_back({h, index});
    });
    return out;
}

std::vector<LatticeCokernel> enumerate_cokernels(const IntPoly& f_shifted, Prime ell, int k, std::uint64_t budget) {
    if (f_shifted.coeff(0) == 0) throw Error(ErrorCode::ConstantTermVanishes, "constant term vanishes");
    if (!is_squarefree(f_shifted)) throw Error(ErrorCode::NotSquarefree, "oracle requires no multiple roots");
    const IntMatrix e = companion_matrix(f_shifted);
    std::vector<LatticeCokernel> out;
    for (auto& lattice : enumerate_invariant_sublattices(e, ell, k, budget)) {
        IntMatrix action = *restricted_action(e, lattice.hnf);
        ElementaryDivisors divisors = smith_local(LocalMatrix(ell, action));
        out.push_back({std::move(lattice), std::move(divisors)});
    }
    return out;
}

std::vector<LocalGroupType> achievable_groups_bruteforce(const IntPoly& f_shifted, Prime ell, int k, std::uint64_t budget) {
    std::set<LocalGroupType> found;
    for (const auto& c : enumerate_cokernels(f_shifted, ell, k, budget)) found.insert(c.divisors.group());
    return {found.begin(), found.end()};
}

} // namespace avgroups
