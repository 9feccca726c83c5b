#pragma once

#include "weil/symplectic.hpp"

namespace weil {

/// A symplectic plane over GF(q) realized on E = GF(q^2) with the trace
/// form phi(x, y) = tr_{E/GF(q)}(eps * x * y^q), where eps^q = -eps.
/// Multiplication by any norm-one element z (z^{q+1} = 1) is symplectic;
/// these maps form a cyclic subgroup Z of order q+1 (the "circle").
struct CircleSpace {
    FieldPtr base;  // GF(q)
    FieldPtr ext;   // GF(q^2), basis {1, t} over the base
    uint32_t eps;   // eps^q = -eps, eps != 0
    SympSpace space;
    std::vector<uint32_t> norm_one;  // Z, all z with z^{q+1} = 1

    /// x -> z*x as a 2x2 matrix over GF(q); requires z in Z.
    GroupElement multiplication_by(uint32_t z) const;

    /// The sign character of Z: z^{(q+1)/2} as +/-1.
    int chi_z(uint32_t z) const;

    /// Order of z in Z.
    int order_of(uint32_t z) const;

    /// Vector in the plane <-> element of E (coordinates on {1, t}).
    uint32_t to_ext(const std::vector<uint32_t>& v) const;
    std::vector<uint32_t> from_ext(uint32_t x) const;
};

/// Builds the circle construction; q must be an odd prime.
CircleSpace make_circle_space(int q);

/// The split-torus element diag(z, z^{-1}) of the standard plane: (x, y) ->
/// (zx, z^{-1}y).  Requires z != 0.
GroupElement split_torus_element(const SympSpace& space, uint32_t z);

}  // namespace weil
