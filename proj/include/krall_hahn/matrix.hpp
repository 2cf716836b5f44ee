#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krall_hahn/rational_function.hpp"

namespace kh {

// Dense row-major matrix. Only the element operations used by the determinant
// and solver routines below are required of T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Copy with row r and column c deleted.
    Matrix minor(std::size_t r, std::size_t c) const {
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<RationalFunction>;

namespace detail {

template <class T>
T cofactor_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == T(0)) continue;
        T term = m(0, j) * cofactor_det(m.minor(0, j));
        if (j % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

// Fraction-free Bareiss elimination; every division is exact.
inline Polynomial bareiss_det(Matrix<Polynomial> m) {
    const std::size_t n = m.rows();
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Polynomial();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = Polynomial();
        }
        prev = m(k, k);
    }
    Polynomial d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace detail

// Exact determinant of a square matrix of polynomials: cofactor expansion up to
// 5x5, Bareiss above. The 0x0 determinant is 1.
inline Polynomial poly_det(const Matrix<Polynomial>& m) {
    if (!m.square()) throw Error("poly_det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() <= 5) return detail::cofactor_det(m);
    return detail::bareiss_det(m);
}

// Determinant of a matrix whose entries must all be polynomials.
inline Polynomial poly_det(const PolyMatrix& m) {
    if (!m.square()) throw Error("poly_det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    Matrix<Polynomial> p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_polynomial())
                throw NonExactDivision("poly_det: entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a polynomial",
                                       divmod(m(i, j).numerator(), m(i, j).denominator()).remainder.str());
            p(i, j) = m(i, j).numerator();
        }
    return poly_det(p);
}

// Determinant of a rational-function matrix: each row is multiplied by the
// product of its distinct denominators, the polynomial determinant is taken and
// the row factors are divided back out.
inline RationalFunction rational_det(const PolyMatrix& m) {
    if (!m.square()) throw Error("rational_det: non-square matrix");
    Matrix<Polynomial> p(m.rows(), m.cols());
    Polynomial scale(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial row_den(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Polynomial& d = m(i, j).denominator();
            Polynomial g = gcd(row_den, d);
            row_den = row_den * divide_exact(d, g);
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            p(i, j) = m(i, j).numerator() * divide_exact(row_den, m(i, j).denominator());
        scale = scale * row_den;
    }
    return RationalFunction(poly_det(p), scale);
}

// Determinant over Q by Gaussian elimination.
inline Rational det(Matrix<Rational> m) {
    if (!m.square()) throw Error("det: non-square matrix");
    const std::size_t n = m.rows();
    Rational out(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            out = -out;
        }
        out *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return out;
}

struct LinearSolution {
    std::size_t rank = 0;
    bool consistent = false;
    // One particular solution (free variables set to zero) when consistent.
    std::vector<Rational> solution;
    std::size_t nullity = 0;
};

// Exact reduced row echelon solve of A x = rhs over Q.
inline LinearSolution solve_linear(Matrix<Rational> a, std::vector<Rational> rhs) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (rhs.size() != rows) throw Error("solve_linear: right-hand side has wrong length");
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
            std::swap(rhs[r], rhs[p]);
        }
        Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    LinearSolution out;
    out.rank = r;
    out.nullity = cols - r;
    out.consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) { out.consistent = false; break; }
    if (out.consistent) {
        out.solution.assign(cols, Rational(0));
        for (std::size_t i = 0; i < r; ++i) out.solution[pivot_cols[i]] = rhs[i];
    }
    return out;
}

}  // namespace kh
