#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "avgroups/abgroup.hpp"
#include "avgroups/intpoly.hpp"
#include "avgroups/numtheory.hpp"
#include "avgroups/ratpoly.hpp"

namespace avgroups {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<std::vector<mpz_class>>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Square matrix over the integers localized at ell: rational entries whose
/// denominators are prime to ell.
class LocalMatrix {
public:
    LocalMatrix(Prime ell, std::size_t n);
    LocalMatrix(Prime ell, const IntMatrix& m);
    LocalMatrix(Prime ell, const std::vector<std::vector<mpq_class>>& rows);

    Prime prime() const { return ell_; }
    std::size_t dim() const { return n_; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    /// Throws InvalidArgument if the denominator is divisible by ell.
    void set(std::size_t i, std::size_t j, mpq_class value);

    /// Every entry has nonnegative ell-valuation.
    bool is_integral() const;

    friend bool operator==(const LocalMatrix&, const LocalMatrix&) = default;

private:
    Prime ell_;
    std::size_t n_;
    std::vector<mpq_class> data_;
};

/// Valuations e_1 <= ... <= e_d of the elementary divisors.
struct ElementaryDivisors {
    Prime ell = 0;
    std::vector<int> exponents;

    LocalGroupType group() const { return LocalGroupType(ell, exponents); }
};

/// The lattice T spanned by v_0..v_{d-1} in Q_ell[x]/f(x) and the matrix of
/// multiplication by x on that basis. Here f(t) = det(E - t) = sum a_i t^i.
struct Witness {
    LocalMatrix matrix;
    std::vector<int> parts;              // padded ascending, d entries
    std::vector<int> partial_sums;       // M(0..d)
    std::vector<mpq_class> corrections;  // u_1..u_d
    std::vector<RatPoly> basis;          // v_0..v_{d-1} as polynomials in x
};

/// Throws PolygonConditionViolated when ell^{M(s)} does not divide a_{d-s},
/// WrongOrder when the parts do not sum to ord_ell(a_0), TooManyGenerators
/// when more than d parts are nonzero.
Witness build_witness(const IntPoly& f, std::span<const int> parts, Prime ell);
LocalMatrix witness_matrix(const IntPoly& f, std::span<const int> parts, Prime ell);

/// Row reduction over the localization, pivoting on the entry of least
/// valuation (first in row-major order on ties). Throws SingularMatrix.
ElementaryDivisors smith_local(const LocalMatrix& m);

/// Invariant factors d_1 | d_2 | ... | d_n (nonnegative) of an integer
/// square matrix.
std::vector<mpz_class> smith_invariants(const IntMatrix& m);

/// Z^n modulo the column span of m. Throws SingularMatrix.
GroupType cokernel_integer(const IntMatrix& m);

/// Builds the witness for (f_shifted, parts) and checks its cokernel.
/// Throws NotSquarefree plus the build_witness preconditions.
bool verify_witness(const IntPoly& f_shifted, std::span<const int> parts, Prime ell);

/// det(t I - m), ascending.
RatPoly characteristic_polynomial(const LocalMatrix& m);

} // namespace avgroups
