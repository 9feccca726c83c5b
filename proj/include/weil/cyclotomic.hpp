#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "weil/field.hpp"

namespace weil {

/// An element of K = Q(zeta_p), zeta_p a primitive p-th root of unity,
/// stored as exact rational coordinates on the basis 1, zeta, ..., zeta^{p-2}.
/// Reduction modulo the p-th cyclotomic polynomial keeps the representation
/// canonical, so equality is coordinate-wise.
class CycNumber {
public:
    explicit CycNumber(int p) : p_(p), c_(p - 1) {}

    static CycNumber integer(int p, const mpq_class& v);
    static CycNumber zeta_pow(int p, long k);

    int p() const { return p_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; only meaningful when is_rational().
    const mpq_class& rational() const { return c_[0]; }

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber operator*(const mpq_class& s) const;
    CycNumber& operator+=(const CycNumber& o);
    bool operator==(const CycNumber& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    /// Multiplicative inverse, by solving the (p-1)x(p-1) rational system
    /// for multiplication by *this.  Throws std::domain_error("division by
    /// zero") on zero.
    CycNumber inverse() const;

    CycNumber pow(long k) const;

    /// Complex conjugation: the ring automorphism zeta -> zeta^{p-1}.
    CycNumber conj() const;

    /// |z|^2 = z * conj(z), exact.
    CycNumber norm_sq() const { return *this * conj(); }

    /// Multiply by zeta^k in place (k any integer).
    void add_zeta_pow(long k, const mpq_class& coeff);

    /// Canonical display, e.g. "1 + 2*z" or "-1/3".
    std::string str() const;

    /// Coordinates as "num/den" strings (the JSON wire form).
    std::vector<std::string> coord_strings() const;

private:
    int p_;
    std::vector<mpq_class> c_;
};

/// The canonical additive character psi(a) = zeta^{tr(a)}.
CycNumber psi(const FieldDesc& f, uint32_t a);

/// The Gauss sum rho = sum over alpha in GF(q) of psi(alpha^2).
/// Satisfies rho^2 = delta * q.
CycNumber rho(const FieldDesc& f);

/// A quadratic form Q(x) = x * gram * x^T (gram symmetric, dim x dim,
/// entries encoded field elements) with an optional affine part l(x) = x . l.
struct QuadraticFormDesc {
    FieldPtr field;
    int dim = 0;
    std::vector<uint32_t> gram;    // row-major dim*dim, symmetric
    std::vector<uint32_t> linear;  // length dim, or empty for l = 0

    uint32_t eval(const std::vector<uint32_t>& x) const;  // Q(x) + l(x)
    uint32_t eval_quadratic(const std::vector<uint32_t>& x) const;  // Q(x) only
};

/// Direct summation of psi(Q(x) + l(x)) over all q^dim vectors.
/// dim is capped (default 6): throws std::invalid_argument("dimension limit").
CycNumber quad_psi_sum_brute(const QuadraticFormDesc& form, int dim_cap = 6);

/// Closed-form evaluation of the same sum:
///   0 when the affine part is nonzero on the radical of Q, and
///   psi(-Q(y0)) * chi(Q) * rho^rank * q^(dim - rank) otherwise,
/// where l(x) = 2 B(x, y0) and chi(Q) = chi(det Q'), chi(0) = 1.
CycNumber quad_psi_sum_closed(const QuadraticFormDesc& form);

}  // namespace weil
