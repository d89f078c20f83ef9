#pragma once

#include <vector>

#include "csurf/rational.hpp"

namespace csurf {

// Small dense matrix over an exact ring/field T.  T must be constructible
// from int and support +, -, *, ==.  Field routines additionally use /.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, T(0)) {}

    T& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
    const T& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        CSURF_REQUIRE(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        CSURF_REQUIRE(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        CSURF_REQUIRE(x.cols == y.rows, "matrix shape mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& xv = x(i, k);
                if (xv == T(0)) continue;
                for (int j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + xv * y(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& s, const Mat& x) {
        Mat r(x.rows, x.cols);
        for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = s * x.a[k];
        return r;
    }
    Mat operator-() const {
        Mat r(rows, cols);
        for (size_t k = 0; k < a.size(); ++k) r.a[k] = T(0) - a[k];
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    bool is_zero() const {
        for (const auto& v : a)
            if (!(v == T(0))) return false;
        return true;
    }
};

// Gauss-Jordan solve A X = B over a field; returns false when A is singular.
template <class T>
bool solve_field(Mat<T> A, Mat<T> B, Mat<T>& X) {
    CSURF_REQUIRE(A.rows == A.cols && A.rows == B.rows, "solve shape mismatch");
    int n = A.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!(A(r, col) == T(0))) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
            for (int j = 0; j < B.cols; ++j) std::swap(B(piv, j), B(col, j));
        }
        T inv = T(1) / A(col, col);
        for (int j = 0; j < n; ++j) A(col, j) = A(col, j) * inv;
        for (int j = 0; j < B.cols; ++j) B(col, j) = B(col, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || A(r, col) == T(0)) continue;
            T f = A(r, col);
            for (int j = 0; j < n; ++j) A(r, j) = A(r, j) - f * A(col, j);
            for (int j = 0; j < B.cols; ++j) B(r, j) = B(r, j) - f * B(col, j);
        }
    }
    X = std::move(B);
    return true;
}

template <class T>
Mat<T> inverse_field(const Mat<T>& A) {
    Mat<T> X;
    CSURF_REQUIRE(solve_field(A, Mat<T>::identity(A.rows), X), "singular matrix");
    return X;
}

template <class T>
T det_field(Mat<T> A) {
    CSURF_REQUIRE(A.rows == A.cols, "determinant of non-square matrix");
    int n = A.rows;
    T det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!(A(r, col) == T(0))) {
                piv = r;
                break;
            }
        if (piv < 0) return T(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
            det = T(0) - det;
        }
        det = det * A(col, col);
        T inv = T(1) / A(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (A(r, col) == T(0)) continue;
            T f = A(r, col) * inv;
            for (int j = col; j < n; ++j) A(r, j) = A(r, j) - f * A(col, j);
        }
    }
    return det;
}

// Exact integer determinant (Bareiss fraction-free elimination).
Int det_bareiss(Mat<Int> A);

// Basis of the lattice {n in Z^c : C n = 0} as columns of the result.
// The basis spans the full (saturated) kernel lattice.
Mat<Int> kernel_basis(const Mat<Int>& C);

// Z-basis of the lattice spanned by the rows of M (unimodular row
// reduction); the result has full row rank.
Mat<Int> row_lattice_basis(Mat<Int> M);

// Standard symplectic form [[0, I], [-I, 0]] of size 2g x 2g.
Mat<Int> standard_J(int g);

}  // namespace csurf
