#include "ksba/linalg.hpp"

#include "ksba/errors.hpp"

#include <utility>

namespace ksba {

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to integers; returns the multiplier.
mpz_class integral_row(const std::vector<Rational>& row, IntRow& out) {
    mpz_class l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    out.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].numerator() * (l / row[j].denominator());
    return l;
}

// In-place Bareiss elimination over the first `cols_pivot` columns.
// Returns false if a zero pivot column is met. `swaps` counts row exchanges.
bool bareiss(std::vector<IntRow>& a, std::size_t n, int& swaps) {
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return false;
            std::swap(a[k], a[p]);
            ++swaps;
        }
        const std::size_t width = a[k].size();
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

}  // namespace

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw DimensionMismatch("row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw NotSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            m.a_[i * m.n_ + j] = rows[i][j];
        }
    }
    return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(r);
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= n_ || j >= n_) throw DimensionMismatch("index out of range");
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
}

SymMatrix SymMatrix::principal(const std::vector<std::size_t>& idx) const {
    SymMatrix s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[i] >= n_ || idx[j] >= n_) throw DimensionMismatch("index out of range");
            s.a_[i * s.n_ + j] = (*this)(idx[i], idx[j]);
        }
    }
    return s;
}

SymMatrix SymMatrix::leading(std::size_t k) const {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return principal(idx);
}

std::vector<Rational> SymMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != n_) throw DimensionMismatch("vector length");
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!a_[i * n_ + j].is_zero()) y[i] += a_[i * n_ + j] * x[j];
        }
    }
    return y;
}

Rational SymMatrix::bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    auto my = apply(y);
    Rational s;
    for (std::size_t i = 0; i < n_; ++i) s += x[i] * my[i];
    return s;
}

Rational SymMatrix::quadratic(const std::vector<Rational>& x) const { return bilinear(x, x); }

Rational determinant(const SymMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<IntRow> a(n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
        scale *= integral_row(row, a[i]);
    }
    int swaps = 0;
    if (!bareiss(a, n, swaps)) return 0;
    mpz_class det = a[n - 1][n - 1];
    if (swaps % 2 != 0) det = -det;
    return Rational(det, scale);
}

std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b) {
    const std::size_t n = m.size();
    if (b.size() != n) throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()));
    std::vector<IntRow> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
        row[n] = b[i];
        integral_row(row, a[i]);
    }
    int swaps = 0;
    if (!bareiss(a, n, swaps)) throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(a[ii][j]) * x[j];
        x[ii] = s / Rational(a[ii][ii]);
    }
    return x;
}

bool is_negative_definite(const SymMatrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Rational d = determinant(m.leading(k));
        if (k % 2 == 1) d = -d;
        if (d.sign() <= 0) return false;
    }
    return true;
}

std::int64_t branch_determinant(const std::vector<std::int64_t>& weights) {
    if (weights.empty()) throw EmptyBranch("branch has no curves");
    // p_k = c_k p_{k-1} - p_{k-2}
    std::int64_t prev = 1;
    std::int64_t cur = weights[0];
    for (std::size_t i = 1; i < weights.size(); ++i) {
        std::int64_t prod = 0;
        std::int64_t next = 0;
        if (__builtin_mul_overflow(weights[i], cur, &prod) || __builtin_sub_overflow(prod, prev, &next)) {
            throw Overflow("branch determinant exceeds 64 bits");
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace ksba
