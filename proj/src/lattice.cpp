#include "avgroups/lattice.hpp"

#include <algorithm>
#include <string>

#include "avgroups/error.hpp"

namespace avgroups {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<mpz_class>>& columns) {
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    IntMatrix out(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != n) throw Error(ErrorCode::InvalidArgument, "columns of unequal length");
        for (std::size_t i = 0; i < n; ++i) out(i, j) = columns[j][i];
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not match");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

LocalMatrix::LocalMatrix(Prime ell, std::size_t n) : ell_(ell), n_(n), data_(n * n) { require_prime(ell); }

LocalMatrix::LocalMatrix(Prime ell, const IntMatrix& m) : LocalMatrix(ell, m.rows()) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "local matrices are square");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) data_[i * n_ + j] = m(i, j);
}

LocalMatrix::LocalMatrix(Prime ell, const std::vector<std::vector<mpq_class>>& rows) : LocalMatrix(ell, rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw Error(ErrorCode::InvalidArgument, "local matrices are square");
        for (std::size_t j = 0; j < n_; ++j) set(i, j, rows[i][j]);
    }
}

void LocalMatrix::set(std::size_t i, std::size_t j, mpq_class value) {
    value.canonicalize();
    if (mpz_divisible_ui_p(value.get_den_mpz_t(), ell_)) {
        throw Error(ErrorCode::InvalidArgument, "entry " + value.get_str() + " is not in the localization at " + std::to_string(ell_));
    }
    data_[i * n_ + j] = std::move(value);
}

bool LocalMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [this](const mpq_class& x) {
        return x == 0 || valuation(x, ell_) >= 0;
    });
}

// ---------------------------------------------------------------------------

Witness build_witness(const IntPoly& f, std::span<const int> parts, Prime ell) {
    require_prime(ell);
    const int d = f.degree();
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "witness needs a polynomial of positive degree");
    if (f.coeff(0) == 0) throw Error(ErrorCode::ConstantTermVanishes, "constant term vanishes");
    const mpz_class& lead = f.leading();
    if (valuation(lead, ell) != 0) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be prime to ell");

    std::vector<int> padded = pad_parts(Partition(parts.begin(), parts.end()), d);
    std::vector<int> partial(static_cast<std::size_t>(d) + 1, 0);
    for (int s = 1; s <= d; ++s) partial[s] = partial[s - 1] + padded[static_cast<std::size_t>(s - 1)];
    const int m = valuation(f.coeff(0), ell);
    if (partial[d] != m) {
        throw Error(ErrorCode::WrongOrder, "parts sum to " + std::to_string(partial[d]) + " but ord(a_0) = " + std::to_string(m));
    }
    auto a = [&](int i) { return f.coeff(static_cast<std::size_t>(i)); };
    for (int s = 1; s <= d; ++s) {
        if (a(d - s) != 0 && valuation(a(d - s), ell) < partial[s]) {
            throw Error(ErrorCode::PolygonConditionViolated, "polygon condition violated at s = " + std::to_string(s) +
                                                                 ": ell^" + std::to_string(partial[s]) + " does not divide a_" +
                                                                 std::to_string(d - s));
        }
    }

    Witness w{LocalMatrix(ell, static_cast<std::size_t>(d)), padded, partial, {}, {}};
    // x v_{s-1} = ell^{m_s} v_s - (a_{d-s} / ell^{M(s-1)}) * v_0 / a_d, and v_d = 0.
    for (int s = 1; s <= d; ++s) {
        const auto col = static_cast<std::size_t>(s - 1);
        if (s < d) w.matrix.set(static_cast<std::size_t>(s), col, mpq_class(prime_power(ell, padded[col])));
        mpq_class correction(a(d - s), prime_power(ell, partial[s - 1]) * lead);
        correction.canonicalize();
        w.matrix.set(0, col, w.matrix(0, col) - correction);
        w.corrections.emplace_back(a(d - s), prime_power(ell, partial[s]));
        w.corrections.back().canonicalize();
    }
    for (int s = 0; s < d; ++s) {
        std::vector<mpq_class> v(static_cast<std::size_t>(s) + 1);
        v[static_cast<std::size_t>(s)] = lead;
        for (int j = 1; j <= s; ++j) v[static_cast<std::size_t>(s - j)] = a(d - j);
        w.basis.push_back(mpq_class(1, prime_power(ell, partial[s])) * RatPoly(std::move(v)));
    }
    return w;
}

LocalMatrix witness_matrix(const IntPoly& f, std::span<const int> parts, Prime ell) {
    return build_witness(f, parts, ell).matrix;
}

ElementaryDivisors smith_local(const LocalMatrix& input) {
    const Prime ell = input.prime();
    const std::size_t n = input.dim();
    std::vector<mpq_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = input(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };

    ElementaryDivisors out{ell, {}};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = n, pc = n;
        int best = 0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (at(i, j) == 0) continue;
                int v = valuation(at(i, j), ell);
                if (pr == n || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
        if (pr != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pr, j));
        if (pc != k)
            for (std::size_t i = 0; i < n; ++i) std::swap(at(i, k), at(i, pc));
        const mpq_class pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            const mpq_class factor = at(i, k) / pivot; // ell-integral by minimality
            for (std::size_t j = k; j < n; ++j) at(i, j) -= factor * at(k, j);
        }
        // Column operations would only clear row k beyond the pivot.
        out.exponents.push_back(best);
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

std::vector<mpz_class> smith_invariants(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidArgument, "Smith form is implemented for square matrices");
    const std::size_t n = input.rows();
    IntMatrix a = input;
    std::vector<mpz_class> diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            std::size_t pr = n, pc = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n) {
                diag.resize(n, 0);
                return diag;
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
                if (q != 0)
                    for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
                if (a(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
                if (q != 0)
                    for (std::size_t i = k; i < n; ++i) a(i, j) -= q * a(i, k);
                if (a(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row k and retry.
            std::size_t bad = n;
            for (std::size_t i = k + 1; i < n && bad == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = k; j < n; ++j) a(k, j) += a(bad, j);
        }
        diag.push_back(abs(a(k, k)));
    }
    return diag;
}

GroupType cokernel_integer(const IntMatrix& m) {
    std::map<Prime, std::vector<int>> components;
    for (const auto& d : smith_invariants(m)) {
        if (d == 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
        for (const auto& [ell, e] : factorize(d)) components[ell].push_back(e);
    }
    return GroupType(components);
}

bool verify_witness(const IntPoly& f_shifted, std::span<const int> parts, Prime ell) {
    if (f_shifted.is_zero() || !is_squarefree(f_shifted)) {
        throw Error(ErrorCode::NotSquarefree, "witness construction requires no multiple roots");
    }
    Witness w = build_witness(f_shifted, parts, ell);
    if (!w.matrix.is_integral()) return false;
    return smith_local(w.matrix).exponents == w.parts;
}

RatPoly characteristic_polynomial(const LocalMatrix& m) {
    // Faddeev-LeVerrier; exact over Q.
    const std::size_t n = m.dim();
    std::vector<mpq_class> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<mpq_class> acc(n * n); // M_k
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<mpq_class> next(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class sum = 0;
                for (std::size_t l = 0; l < n; ++l) sum += m(i, l) * acc[l * n + j];
                next[i * n + j] = sum;
            }
        for (std::size_t i = 0; i < n; ++i) next[i * n + i] += coeffs[n - k + 1];
        acc = std::move(next);
        mpq_class trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) trace += m(i, l) * acc[l * n + i];
        coeffs[n - k] = -trace / static_cast<unsigned long>(k);
    }
    return RatPoly(std::move(coeffs));
}

} // namespace avgroups
