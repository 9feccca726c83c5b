#include "weil/constructions.hpp"

namespace weil {

namespace {

// Relative trace E = GF(q^2) -> GF(q), q prime: x + x^q.  The prime
// subfield is encoded by the constants, so the result encoding is shared
// by both fields.
uint32_t rel_trace(const FieldDesc& ext, int q, uint32_t x) {
    return ext.add(x, ext.pow(x, q));
}

}  // namespace

GroupElement CircleSpace::multiplication_by(uint32_t z) const {
    const int q = base->q();
    if (z == 0 || ext->pow(z, q + 1) != 1)
        throw std::invalid_argument("not in the circle");
    FMatrix m(base, 2, 2);
    const uint32_t b1 = 1, bt = static_cast<uint32_t>(q);
    const uint32_t r0 = ext->mul(b1, z), r1 = ext->mul(bt, z);
    m.at(0, 0) = r0 % q;
    m.at(0, 1) = r0 / q;
    m.at(1, 0) = r1 % q;
    m.at(1, 1) = r1 / q;
    return {space, std::move(m)};
}

int CircleSpace::chi_z(uint32_t z) const {
    const int q = base->q();
    return ext->pow(z, (q + 1) / 2) == 1 ? 1 : -1;
}

int CircleSpace::order_of(uint32_t z) const {
    int ord = 1;
    uint32_t x = z;
    while (x != 1) {
        x = ext->mul(x, z);
        ++ord;
    }
    return ord;
}

uint32_t CircleSpace::to_ext(const std::vector<uint32_t>& v) const {
    return v[0] + v[1] * static_cast<uint32_t>(base->q());
}

std::vector<uint32_t> CircleSpace::from_ext(uint32_t x) const {
    const uint32_t q = static_cast<uint32_t>(base->q());
    return {x % q, x / q};
}

CircleSpace make_circle_space(int q) {
    FieldPtr base = FieldDesc::make(q, 1);  // rejects even/composite q
    FieldPtr ext = FieldDesc::make(q, 2);

    uint32_t eps = 0;
    for (uint32_t x = 1; x < static_cast<uint32_t>(ext->q()); ++x)
        if (ext->pow(x, q) == ext->neg(x)) {
            eps = x;
            break;
        }
    if (eps == 0) throw std::logic_error("no antisymmetric scalar found");

    // Gram of tr(eps * x * y^q) on the base-field basis {1, t}.
    const uint32_t basis[2] = {1, static_cast<uint32_t>(q)};
    FMatrix gram(base, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            gram.at(i, j) = rel_trace(
                *ext, q, ext->mul(ext->mul(eps, basis[i]), ext->pow(basis[j], q)));

    CircleSpace c;
    c.base = std::move(base);
    c.ext = std::move(ext);
    c.eps = eps;
    c.space = SympSpace::from_gram(c.base, std::move(gram));
    for (uint32_t z = 1; z < static_cast<uint32_t>(c.ext->q()); ++z)
        if (c.ext->pow(z, q + 1) == 1) c.norm_one.push_back(z);
    return c;
}

GroupElement split_torus_element(const SympSpace& space, uint32_t z) {
    if (space.n() != 1 || !space.is_standard())
        throw std::invalid_argument("shape mismatch");
    if (z == 0) throw std::domain_error("division by zero");
    FMatrix m(space.field(), 2, 2);
    m.at(0, 0) = z;
    m.at(1, 1) = space.field()->inv(z);
    return {space, std::move(m)};
}

}  // namespace weil
