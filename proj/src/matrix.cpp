#include "csurf/matrix.hpp"

namespace csurf {

Int det_bareiss(Mat<Int> A) {
    CSURF_REQUIRE(A.rows == A.cols, "determinant of non-square matrix");
    int n = A.rows;
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (A(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                A(i, j) = v / prev;  // exact by Bareiss
            }
        prev = A(k, k);
    }
    return sign > 0 ? A(n - 1, n - 1) : Int(-A(n - 1, n - 1));
}

Mat<Int> kernel_basis(const Mat<Int>& C) {
    int rows = C.rows, cols = C.cols;
    Mat<Int> M = C;
    Mat<Int> U = Mat<Int>::identity(cols);

    auto col_axpy = [&](Mat<Int>& X, int dst, int src, const Int& f) {
        for (int i = 0; i < X.rows; ++i) X(i, dst) += f * X(i, src);
    };
    auto col_swap = [&](Mat<Int>& X, int a, int b) {
        for (int i = 0; i < X.rows; ++i) std::swap(X(i, a), X(i, b));
    };

    int lead = 0;  // next column to place a pivot in
    for (int row = 0; row < rows && lead < cols; ++row) {
        // eliminate across columns lead..cols-1 using gcd column operations
        while (true) {
            int nz = -1;
            for (int j = lead; j < cols; ++j)
                if (M(row, j) != 0) {
                    nz = j;
                    break;
                }
            if (nz < 0) break;
            // move a nonzero to the lead column, then reduce others mod it
            if (nz != lead) {
                col_swap(M, nz, lead);
                col_swap(U, nz, lead);
            }
            bool clean = true;
            for (int j = lead + 1; j < cols; ++j) {
                if (M(row, j) == 0) continue;
                Int q = floor_div(M(row, j), M(row, lead));
                if (q != 0) {
                    col_axpy(M, j, lead, -q);
                    col_axpy(U, j, lead, -q);
                }
                if (M(row, j) != 0) clean = false;
            }
            if (clean) break;
            // smallest remainder becomes the new pivot candidate
            int best = lead;
            for (int j = lead; j < cols; ++j)
                if (M(row, j) != 0 && (M(row, best) == 0 || int_abs(M(row, j)) < int_abs(M(row, best))))
                    best = j;
            if (best != lead) {
                col_swap(M, best, lead);
                col_swap(U, best, lead);
            }
        }
        if (M(row, lead) != 0) ++lead;
    }
    // columns lead..cols-1 of U span the kernel
    Mat<Int> K(cols, cols - lead);
    for (int j = lead; j < cols; ++j)
        for (int i = 0; i < cols; ++i) K(i, j - lead) = U(i, j);
    return K;
}

Mat<Int> row_lattice_basis(Mat<Int> M) {
    int r = 0;
    for (int col = 0; col < M.cols && r < M.rows; ++col) {
        while (true) {
            int best = -1;
            for (int i = r; i < M.rows; ++i)
                if (M(i, col) != 0 && (best < 0 || int_abs(M(i, col)) < int_abs(M(best, col))))
                    best = i;
            if (best < 0) break;
            if (best != r)
                for (int j = 0; j < M.cols; ++j) std::swap(M(best, j), M(r, j));
            bool clean = true;
            for (int i = r + 1; i < M.rows; ++i) {
                if (M(i, col) == 0) continue;
                Int q = floor_div(M(i, col), M(r, col));
                if (q != 0)
                    for (int j = 0; j < M.cols; ++j) M(i, j) -= q * M(r, j);
                if (M(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M(r, col) != 0) ++r;
    }
    Mat<Int> out(r, M.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < M.cols; ++j) out(i, j) = M(i, j);
    return out;
}

Mat<Int> standard_J(int g) {
    Mat<Int> J(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        J(i, g + i) = 1;
        J(g + i, i) = -1;
    }
    return J;
}

}  // namespace csurf
