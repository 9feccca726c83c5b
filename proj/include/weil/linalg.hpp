#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "weil/field.hpp"

namespace weil {

/// Dense matrix over GF(q), row-major.  Vectors are rows and act on the
/// left: the image of x under the map with matrix M is x * M.
struct FMatrix {
    FieldPtr field;
    int rows = 0, cols = 0;
    std::vector<uint32_t> a;

    FMatrix() = default;
    FMatrix(FieldPtr f, int r, int c)
        : field(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static FMatrix identity(FieldPtr f, int n) {
        FMatrix m(std::move(f), n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const FMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

FMatrix mat_mul(const FMatrix& A, const FMatrix& B);
FMatrix mat_transpose(const FMatrix& A);
FMatrix mat_add(const FMatrix& A, const FMatrix& B);
FMatrix mat_sub(const FMatrix& A, const FMatrix& B);

/// Row vector times matrix.
std::vector<uint32_t> vec_mat(const std::vector<uint32_t>& x, const FMatrix& A);

/// Reduced row echelon form; zero rows are dropped, so the result's rows
/// are a canonical basis of the row space.
FMatrix rref(FMatrix A);

int mat_rank(const FMatrix& A);

/// Basis (RREF) of { x : x * A = 0 }.
FMatrix left_kernel(const FMatrix& A);

/// A particular solution of x * A = y with free coordinates taken as zero.
/// Returns false if the system is inconsistent.
bool solve_left(const FMatrix& A, const std::vector<uint32_t>& y,
                std::vector<uint32_t>& x);

/// Inverse of a square matrix; throws std::domain_error on singular input.
FMatrix mat_inverse(const FMatrix& A);

uint32_t mat_det(FMatrix A);

}  // namespace weil
