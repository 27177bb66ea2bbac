#ifndef QCLIFFORD_LINALG_HPP
#define QCLIFFORD_LINALG_HPP

#include "qclifford/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qclifford {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rational> operator*(const std::vector<Rational>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<Rational> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const Rational& v = (*this)(r, c);
                if (!v.is_zero() && !x[c].is_zero()) y[r] += v * x[c];
            }
        return y;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place Gauss-Jordan reduction to reduced row echelon form, restricted
/// to the first `pivot_cols` columns (remaining columns are carried along as
/// right-hand sides). Returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        const Rational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::vector<std::size_t> rref(RationalMatrix& m) { return rref(m, m.cols()); }

/// Basis of {x : A x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> null_space(RationalMatrix a) {
    const std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(RationalMatrix a) { return rref(a).size(); }

/// Precomputed inverse of a nonsingular square matrix; reused across
/// right-hand sides.
class SquareSolver {
public:
    explicit SquareSolver(const RationalMatrix& a) : n_(a.rows()) {
        if (a.rows() != a.cols()) throw std::invalid_argument("SquareSolver needs a square matrix");
        RationalMatrix aug(n_, 2 * n_);
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) aug(r, c) = a(r, c);
            aug(r, n_ + r) = 1;
        }
        if (rref(aug, n_).size() != n_) throw std::runtime_error("linear system is singular");
        inv_ = RationalMatrix(n_, n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) inv_(r, c) = aug(r, n_ + c);
    }

    std::size_t size() const { return n_; }
    std::vector<Rational> solve(const std::vector<Rational>& b) const { return inv_ * b; }

private:
    std::size_t n_;
    RationalMatrix inv_;
};

/// A x = b with a unique solution expected.
struct LinearSystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;

    std::vector<Rational> solve() const {
        if (matrix.rows() != rhs.size()) throw std::invalid_argument("right-hand side size mismatch");
        RationalMatrix aug(matrix.rows(), matrix.cols() + 1);
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            for (std::size_t c = 0; c < matrix.cols(); ++c) aug(r, c) = matrix(r, c);
            aug(r, matrix.cols()) = rhs[r];
        }
        auto pivots = rref(aug, matrix.cols());
        if (pivots.size() != matrix.cols()) throw std::runtime_error("linear system has no unique solution");
        for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
            if (!aug(r, matrix.cols()).is_zero()) throw std::runtime_error("linear system is inconsistent");
        std::vector<Rational> x(matrix.cols());
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, matrix.cols());
        return x;
    }
};

} // namespace qclifford

#endif // QCLIFFORD_LINALG_HPP
