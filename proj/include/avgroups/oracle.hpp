#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "avgroups/abgroup.hpp"
#include "avgroups/intpoly.hpp"
#include "avgroups/lattice.hpp"

namespace avgroups {

/// Default cap on ell^(d*k) for exhaustive searches.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Column-style Hermite normal form: upper triangular, positive diagonal,
/// 0 <= H(i, j) < H(i, i) for j > i. Columns generate the sublattice.
struct SublatticeBasis {
    IntMatrix hnf;
    mpz_class index;
};

/// Multiplication by x on the basis 1, x, ..., x^{d-1} of Z[x]/f.
/// The leading coefficient must be +1 or -1.
IntMatrix companion_matrix(const IntPoly& f);

/// C with E H = H C if the columns of E H lie in the lattice spanned by H,
/// by back substitution through the triangular basis.
std::optional<IntMatrix> restricted_action(const IntMatrix& e, const IntMatrix& hnf);

/// Independent invariance check: solves H C = E H by rational Gauss-Jordan
/// and tests the solution for ell-integrality.
bool recheck_invariance(const IntMatrix& e, const IntMatrix& hnf, Prime ell);

/// All E-invariant sublattices of Z^d with index dividing ell^k.
/// Throws BudgetExceeded when ell^(d*k) exceeds the budget.
std::vector<SublatticeBasis> enumerate_invariant_sublattices(const IntMatrix& e, Prime ell, int k,
                                                             std::uint64_t budget = kDefaultOracleBudget);

struct LatticeCokernel {
    SublatticeBasis lattice;
    ElementaryDivisors divisors;
};

/// Cokernel of the companion action restricted to every enumerated lattice.
std::vector<LatticeCokernel> enumerate_cokernels(const IntPoly& f_shifted, Prime ell, int k,
                                                 std::uint64_t budget = kDefaultOracleBudget);

/// Deduplicated cokernel types, sorted as by partitions_bounded.
std::vector<LocalGroupType> achievable_groups_bruteforce(const IntPoly& f_shifted, Prime ell, int k,
                                                         std::uint64_t budget = kDefaultOracleBudget);

} // namespace avgroups
