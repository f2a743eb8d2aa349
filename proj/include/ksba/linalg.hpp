#pragma once

#include "ksba/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ksba {

/// Square symmetric matrix over the rationals. Writes keep (i,j) and (j,i) equal.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n) {}

    /// Throws NotSymmetric or DimensionMismatch.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v);

    /// Principal submatrix on the given index list (in that order).
    [[nodiscard]] SymMatrix principal(const std::vector<std::size_t>& idx) const;
    [[nodiscard]] SymMatrix leading(std::size_t k) const;

    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& x) const;
    [[nodiscard]] Rational quadratic(const std::vector<Rational>& x) const;
    [[nodiscard]] Rational bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

/// Determinant by fraction-free elimination. The empty matrix has determinant 1.
Rational determinant(const SymMatrix& m);

/// Unique solution of M x = b. Throws SingularMatrix or DimensionMismatch.
std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b);

/// Sylvester criterion: (-1)^k det(M_k) > 0 for every leading minor.
bool is_negative_definite(const SymMatrix& m);

/// Continuant of a chain with diagonal weights c_i and off-diagonal -1.
/// Throws EmptyBranch on an empty list and Overflow past int64.
std::int64_t branch_determinant(const std::vector<std::int64_t>& weights);

}  // namespace ksba
