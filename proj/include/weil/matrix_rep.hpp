#pragma once

#include <string>
#include <utility>

#include "weil/algebra.hpp"

namespace weil {

/// Dense matrix over K = Q(zeta_p).
struct CMatrix {
    int p = 0;
    int rows = 0, cols = 0;
    std::vector<CycNumber> e;

    CMatrix() = default;
    CMatrix(int p_, int r, int c)
        : p(p_), rows(r), cols(c), e(static_cast<size_t>(r) * c, CycNumber(p_)) {}

    CycNumber& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const CycNumber& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static CMatrix identity(int p, int n);
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix scaled(const CycNumber& s) const;
    bool operator==(const CMatrix& o) const;
    CycNumber trace() const;
};

/// Exact determinant by fraction-free (Bareiss-style) elimination over the
/// cyclotomic ring, with exact divisions by the previous pivot.
CycNumber cyc_det(CMatrix m);

/// A pair of complementary Lagrangian subspaces (W, W*) of a standard
/// symplectic space, together with the W* row/column ordering P, -P, 0
/// used for all matrix realizations.  Membership of a in P is decided by
/// integer-encoding(a) < integer-encoding(-a).
class LagrangianFrame {
public:
    LagrangianFrame(const SympSpace& space, FMatrix w_basis, FMatrix wstar_basis);

    /// W = span(e_1..e_n), W* = span(f_1..f_n).
    static LagrangianFrame standard(const SympSpace& space);
    /// Roles exchanged: W = span(f_1..f_n), W* = span(e_1..e_n).
    static LagrangianFrame swapped(const SympSpace& space);

    const SympSpace& space() const { return *space_; }
    int size() const { return static_cast<int>(order_.size()); }  // q^n
    int half() const { return (size() - 1) / 2; }                 // |P|

    /// W* members as ambient vectors, arranged P, -P, 0.
    const std::vector<std::vector<uint32_t>>& order() const { return order_; }
    /// Index of a W* vector in the ordering; -1 if v is not in W*.
    int position(uint32_t v_encoding) const;

    const FMatrix& w_basis() const { return w_basis_; }
    const FMatrix& wstar_basis() const { return wstar_basis_; }
    const std::vector<std::vector<uint32_t>>& w_elements() const { return w_elems_; }

    /// Decompose x = w + d with w in W, d in W*.
    std::pair<std::vector<uint32_t>, std::vector<uint32_t>> split(
        const std::vector<uint32_t>& x) const;
    /// Coordinates of a W* vector on the W* basis.
    std::vector<uint32_t> wstar_coords(const std::vector<uint32_t>& d) const;

    /// e_0 = q^{-n} sum over w in W of (w).
    AlgebraElement e0() const;

private:
    const SympSpace* space_;
    FMatrix w_basis_, wstar_basis_;
    FMatrix decomp_;  // inverse of [w_basis; wstar_basis]
    std::vector<std::vector<uint32_t>> order_;
    std::vector<std::vector<uint32_t>> w_elems_;
    std::vector<int> pos_;  // encoding -> order index, -1 outside W*
};

/// The matrix unit e_ab = (-a) e_0 (b), a and b given as order indices.
AlgebraElement matrix_unit(const LagrangianFrame& frame, int a, int b);

struct RepMatrix {
    const LagrangianFrame* frame;
    CMatrix m;
};

/// The image of an algebra element under the isomorphism A = M_{q^n}(K)
/// defined by the frame's matrix units.  Uses the row-monomial expansion:
/// a term (x) with x = w + d contributes f(2a+d, x) at entry (a, a+d).
RepMatrix to_matrix(const AlgebraElement& a, const LagrangianFrame& frame);

/// [j] for j = q^{-n} s(-1): the permutation matrix of a -> -a.
RepMatrix j_matrix(const LagrangianFrame& frame);

bool commutes_with_j(const RepMatrix& m);

/// Centralizer block maps.  Both check membership in the centralizer of
/// [j] and throw std::invalid_argument("not in centralizer") otherwise.
/// With blocks [[A,B,b],[B,A,b],[a,a,alpha]]: flat = A - B and
/// sharp = [[A+B, 2b],[a, alpha]].
CMatrix flat_block(const RepMatrix& m);
CMatrix sharp_block(const RepMatrix& m);

/// eta(g) = (det s(g)^flat)^2 (det s(g))^{-1}, computed from explicit
/// matrices in the given frame.
CycNumber eta_det(const GroupElement& g, const LagrangianFrame& frame);

/// eta(g) = rho^{-dim V^{g-1}} chi(Theta_g): the closed form from the
/// theta data, frame-independent.
CycNumber eta_closed(const GroupElement& g);

/// Same value computed with rho replaced by -rho (the nonsquare-scaled
/// algebra); used for the primed characters.
CycNumber eta_closed_primed(const GroupElement& g);

struct WeilValues {
    CycNumber eta, omega, omega_minus, omega_plus;
    CycNumber eta_primed, omega_primed, omega_minus_primed, omega_plus_primed;
};

/// omega = q^n eta, omega_- = (omega(g) - delta^n omega(-g))/2,
/// omega_+ = omega - omega_-; primed values from the -rho evaluation.
WeilValues weil_values(const GroupElement& g);

/// eta for W-stabilizing g: chi(det g*) divided by the diagonal character
/// sum over W intersect V^{g-1}.  Throws
/// std::invalid_argument("W not g-invariant") if W^g != W.
CycNumber eta_w_stable(const GroupElement& g, const LagrangianFrame& frame);

/// sigma(g) = (-1)^{|P^g intersect -P|} for an invertible map on W* given
/// in W*-basis coordinates; equals chi(det).  Throws
/// std::domain_error("singular input") on singular input.
int sigma_sign(const FMatrix& gstar, const LagrangianFrame& frame);

struct IdentityCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
};

/// Evaluates every applicable closed-form character identity for g against
/// weil_values and reports pass/fail for each.
std::vector<IdentityCheck> special_identities(const GroupElement& g);

/// Multiplicative order of g (the enumerable groups are small).
long element_order(const GroupElement& g);

/// Semisimple iff the order of g is prime to p.
bool is_semisimple(const GroupElement& g);

}  // namespace weil
