#pragma once

#include <map>

#include "weil/symplectic.hpp"

namespace weil {

/// A member of the symplectic algebra A: the twisted group ring of the
/// additive group of V over K, with factor set f(x,y) = psi(phi(x,y)) and
/// multiplication (x)(y) = f(x,y)(x+y).  Terms are kept sparse; zero
/// coefficients are never stored.
class AlgebraElement {
public:
    explicit AlgebraElement(const SympSpace& space) : space_(&space) {}

    static AlgebraElement basis(const SympSpace& space, uint32_t v_index);
    static AlgebraElement one(const SympSpace& space) { return basis(space, 0); }

    const SympSpace& space() const { return *space_; }
    const std::map<uint32_t, CycNumber>& terms() const { return terms_; }

    /// Coefficient of (v); zero if absent.
    CycNumber coeff(uint32_t v_index) const;
    void set_coeff(uint32_t v_index, CycNumber c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const CycNumber& s) const;
    bool operator==(const AlgebraElement& o) const;
    bool is_zero() const { return terms_.empty(); }

private:
    const SympSpace* space_;
    std::map<uint32_t, CycNumber> terms_;
};

/// The algebra automorphism induced by g: (v) -> (v^g), extended linearly.
AlgebraElement apply_g(const AlgebraElement& a, const GroupElement& g);

/// s(g) = sum over y in V^{g-1} of psi(Q_g(y)) (y): the unique invertible
/// element with (0)-coefficient 1 conjugating (x) to (x^g).
AlgebraElement s_of(const GroupElement& g);

/// s(g)^{-1} = |V^{g-1}|^{-1} * sum psi(-Q_g(y)) (y).
AlgebraElement s_inverse(const GroupElement& g);

/// The cocycle: s(g)s(h) = mu(g,h) s(gh), computed as the (0)-coefficient
/// sum over V^{g-1} intersect V^{h-1} of psi(Q_g + Q_h).
CycNumber mu(const GroupElement& g, const GroupElement& h);

}  // namespace weil
