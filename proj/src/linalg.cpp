#include "weil/linalg.hpp"

namespace weil {

FMatrix mat_mul(const FMatrix& A, const FMatrix& B) {
    if (A.cols != B.rows || A.field != B.field)
        throw std::invalid_argument("shape mismatch");
    const auto& F = *A.field;
    FMatrix C(A.field, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const uint32_t aik = A.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

FMatrix mat_transpose(const FMatrix& A) {
    FMatrix T(A.field, A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

FMatrix mat_add(const FMatrix& A, const FMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("shape mismatch");
    FMatrix C(A.field, A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.field->add(A.a[i], B.a[i]);
    return C;
}

FMatrix mat_sub(const FMatrix& A, const FMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("shape mismatch");
    FMatrix C(A.field, A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.field->sub(A.a[i], B.a[i]);
    return C;
}

std::vector<uint32_t> vec_mat(const std::vector<uint32_t>& x, const FMatrix& A) {
    if (static_cast<int>(x.size()) != A.rows) throw std::invalid_argument("shape mismatch");
    const auto& F = *A.field;
    std::vector<uint32_t> y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < A.cols; ++j)
            y[j] = F.add(y[j], F.mul(x[i], A.at(i, j)));
    }
    return y;
}

FMatrix rref(FMatrix A) {
    const auto& F = *A.field;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(piv, j));
        const uint32_t s = F.inv(A.at(r, c));
        for (int j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(s, A.at(r, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || !A.at(i, c)) continue;
            const uint32_t f = A.at(i, c);
            for (int j = 0; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        ++r;
    }
    A.rows = r;
    A.a.resize(static_cast<size_t>(r) * A.cols);
    return A;
}

int mat_rank(const FMatrix& A) { return rref(A).rows; }

FMatrix left_kernel(const FMatrix& A) {
    // x*A = 0  <=>  A^T x^T = 0; row-reduce A^T and read off free columns.
    FMatrix T = mat_transpose(A);
    const auto& F = *A.field;
    const int n = A.rows;  // unknowns
    FMatrix R = T;
    // Gaussian elimination tracking pivot columns of T (i.e. coordinates of x).
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < R.rows; ++c) {
        int piv = -1;
        for (int i = r; i < R.rows; ++i)
            if (R.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < R.cols; ++j) std::swap(R.at(r, j), R.at(piv, j));
        const uint32_t s = F.inv(R.at(r, c));
        for (int j = 0; j < R.cols; ++j) R.at(r, j) = F.mul(s, R.at(r, j));
        for (int i = 0; i < R.rows; ++i) {
            if (i == r || !R.at(i, c)) continue;
            const uint32_t f = R.at(i, c);
            for (int j = 0; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    FMatrix K(A.field, 0, n);
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<uint32_t> x(n, 0);
        x[c] = 1;
        for (int i = 0; i < r; ++i) x[pivot_col[i]] = F.neg(R.at(i, c));
        K.a.insert(K.a.end(), x.begin(), x.end());
        ++K.rows;
    }
    return rref(K);
}

bool solve_left(const FMatrix& A, const std::vector<uint32_t>& y,
                std::vector<uint32_t>& x) {
    // x*A = y  <=>  A^T x^T = y^T: eliminate on the augmented [A^T | y^T].
    const auto& F = *A.field;
    FMatrix aug(A.field, A.cols, A.rows + 1);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) aug.at(j, i) = A.at(i, j);
    for (int j = 0; j < A.cols; ++j) aug.at(j, A.rows) = y[j];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < A.rows && r < aug.rows; ++c) {
        int piv = -1;
        for (int i = r; i < aug.rows; ++i)
            if (aug.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(r, j), aug.at(piv, j));
        const uint32_t s = F.inv(aug.at(r, c));
        for (int j = 0; j < aug.cols; ++j) aug.at(r, j) = F.mul(s, aug.at(r, j));
        for (int i = 0; i < aug.rows; ++i) {
            if (i == r || !aug.at(i, c)) continue;
            const uint32_t f = aug.at(i, c);
            for (int j = 0; j < aug.cols; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < aug.rows; ++i)
        if (aug.at(i, A.rows)) return false;
    for (int i = 0; i < r; ++i) {
        bool all_zero = true;
        for (int c = 0; c < A.rows; ++c)
            if (aug.at(i, c)) {
                all_zero = false;
                break;
            }
        if (all_zero && aug.at(i, A.rows)) return false;
    }
    x.assign(A.rows, 0);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug.at(i, A.rows);
    return true;
}

FMatrix mat_inverse(const FMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("shape mismatch");
    const auto& F = *A.field;
    const int n = A.rows;
    FMatrix aug(A.field, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (aug.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("singular input");
        for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(c, j), aug.at(piv, j));
        const uint32_t s = F.inv(aug.at(c, c));
        for (int j = 0; j < 2 * n; ++j) aug.at(c, j) = F.mul(s, aug.at(c, j));
        for (int i = 0; i < n; ++i) {
            if (i == c || !aug.at(i, c)) continue;
            const uint32_t f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(c, j)));
        }
    }
    FMatrix inv(A.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

uint32_t mat_det(FMatrix A) {
    if (A.rows != A.cols) throw std::invalid_argument("shape mismatch");
    const auto& F = *A.field;
    const int n = A.rows;
    uint32_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (A.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(A.at(c, j), A.at(piv, j));
            det = F.neg(det);
        }
        det = F.mul(det, A.at(c, c));
        const uint32_t s = F.inv(A.at(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (!A.at(i, c)) continue;
            const uint32_t f = F.mul(A.at(i, c), s);
            for (int j = c; j < n; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(c, j)));
        }
    }
    return det;
}

}  // namespace weil
