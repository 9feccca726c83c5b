#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "weil/cyclotomic.hpp"
#include "weil/field.hpp"
#include "weil/linalg.hpp"

namespace weil {

/// The symplectic space (V, phi): V = GF(q)^{2n} of row vectors with a
/// nondegenerate alternating form given by `gram`: phi(x, y) = x gram y^T.
/// The standard space uses the block Gram [[0, I], [-I, 0]] on the basis
/// e_1..e_n, f_1..f_n.
class SympSpace {
public:
    static SympSpace standard(FieldPtr f, int n);
    /// Space with an explicit antisymmetric invertible Gram (used by the
    /// alternate trace-form constructions).
    static SympSpace from_gram(FieldPtr f, FMatrix gram);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    const FMatrix& gram() const { return gram_; }
    bool is_standard() const { return standard_; }

    uint32_t phi(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) const;

    /// Vector <-> integer index, base-q digits of the coordinates.
    uint32_t encode(const std::vector<uint32_t>& v) const;
    std::vector<uint32_t> decode(uint32_t idx) const;
    uint32_t point_count() const { return points_; }  // q^{2n}

    bool operator==(const SympSpace& o) const {
        return field_ == o.field_ && n_ == o.n_ && gram_ == o.gram_;
    }

private:
    FieldPtr field_;
    int n_ = 0;
    FMatrix gram_;
    uint32_t points_ = 0;
    bool standard_ = false;
};

/// f(x, y) = psi(phi(x, y)), the factor set of the twisted group algebra.
CycNumber f_pair(const SympSpace& sp, const std::vector<uint32_t>& x,
                 const std::vector<uint32_t>& y);

class GroupElement {
public:
    /// Validates the symplectic condition mat * gram * mat^T = gram.
    GroupElement(const SympSpace& space, FMatrix mat);

    static GroupElement identity(const SympSpace& space);
    static GroupElement minus_identity(const SympSpace& space);

    const SympSpace& space() const { return *space_; }
    const FMatrix& mat() const { return mat_; }

    std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const {
        return vec_mat(x, mat_);
    }
    uint32_t apply_index(uint32_t idx) const;

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    bool operator==(const GroupElement& o) const { return mat_ == o.mat_; }
    bool is_identity() const;
    bool is_involution() const;  // g^2 = 1, g != 1

    /// Base-q packing of the matrix entries; unique per element for the
    /// group sizes this library enumerates.
    uint64_t key() const;

private:
    const SympSpace* space_;
    FMatrix mat_;
};

bool is_symplectic(const SympSpace& space, const FMatrix& mat);

/// gram * mat^T * gram^{-1}: phi(x^m, y) = phi(x, y^{ad(m)}).
FMatrix adjoint(const SympSpace& space, const FMatrix& mat);

/// A subspace in canonical (reduced row echelon) form, so equality of
/// subspaces is equality of the stored bases.
class Subspace {
public:
    Subspace(const SympSpace& space, const FMatrix& spanning_rows);

    const SympSpace& space() const { return *space_; }
    const FMatrix& basis() const { return basis_; }
    int dim() const { return basis_.rows; }

    bool contains(const std::vector<uint32_t>& v) const;
    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

    /// All q^dim member vectors, in coefficient-enumeration order.
    std::vector<std::vector<uint32_t>> elements() const;
    /// Coordinates of v on the echelon basis; v must lie in the subspace.
    std::vector<uint32_t> coordinates(const std::vector<uint32_t>& v) const;

private:
    const SympSpace* space_;
    FMatrix basis_;
};

Subspace moved_space(const GroupElement& g);  // V^{g-1} = row space of (mat - 1)
Subspace fixed_space(const GroupElement& g);  // V_g = ker(mat - 1)
Subspace perp(const Subspace& u);
Subspace intersect(const Subspace& a, const Subspace& b);

/// The theta form of g on V^{g-1} together with its symmetric part and
/// quadratic form, all as Gram matrices on the echelon basis of V^{g-1}.
struct ThetaData {
    Subspace moved;
    FMatrix theta;  // Theta_g(y_i, y_j)
    FMatrix b_sym;  // (theta + theta^T)/2

    /// Q_g(y) for y given by coordinates on the moved-space basis.
    uint32_t q_of(const std::vector<uint32_t>& coords) const;
    /// Q_g(v) for an ambient vector v in the moved space.
    uint32_t q_of_vector(const std::vector<uint32_t>& v) const;
};

ThetaData theta_data(const GroupElement& g);

/// Inverse construction: the unique g with V^{g-1} = U and Theta_g = T.
/// T is given on the echelon basis of U; throws
/// std::invalid_argument("not a theta form") if T is degenerate or its
/// skew part is not -phi/2 on U.
GroupElement group_from_theta(const Subspace& u, const FMatrix& t);

/// The transvection v -> v - gamma^{-1} phi(v, c) c.
GroupElement transvection(const SympSpace& space, const std::vector<uint32_t>& c,
                          uint32_t gamma);

/// Every element of Sp(V), generated as the closure of the transvections.
/// Only available under the enumeration cap (Sp(2,3), Sp(2,5), Sp(2,7),
/// Sp(4,3) by default); throws std::invalid_argument("group too large").
std::vector<GroupElement> enumerate_group(const SympSpace& space,
                                          uint64_t cap = 60000);

/// Pseudo-uniform random element: a seeded random product of transvections.
GroupElement random_element(const SympSpace& space, std::mt19937& rng);

/// All canonical line representatives of V (first nonzero coordinate 1).
std::vector<std::vector<uint32_t>> line_representatives(const SympSpace& space);

}  // namespace weil
