#pragma once

#include "weil/symplectic.hpp"

namespace weil {

/// One transvection v -> v - gamma^{-1} phi(v, c) c.  (c, gamma) and
/// (lambda*c, lambda^2*gamma) denote the same map; specs are canonicalized
/// so the first nonzero coordinate of c is 1.
struct TransvectionSpec {
    std::vector<uint32_t> c;
    uint32_t gamma = 0;

    GroupElement to_group(const SympSpace& space) const;
    bool operator==(const TransvectionSpec& o) const {
        return c == o.c && gamma == o.gamma;
    }
};

TransvectionSpec canonical_spec(const SympSpace& space,
                                const std::vector<uint32_t>& c, uint32_t gamma);

/// Minimal-length factorization of g into transvections: the product of
/// the returned specs, in order, is g.  Length is dim V^{g-1}, plus one
/// when g is an involution != 1; the identity is the empty product.
std::vector<TransvectionSpec> factor(const GroupElement& g);

struct FactorizationReport {
    bool product_matches = false;
    bool length_minimal = false;
    int length = 0;
    int expected_length = 0;

    bool ok() const { return product_matches && length_minimal; }
};

/// Multiplies seq back out, compares with g, and checks the length bound.
FactorizationReport verify_factorization(const GroupElement& g,
                                         const std::vector<TransvectionSpec>& seq);

}  // namespace weil
