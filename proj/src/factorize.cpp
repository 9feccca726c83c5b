#include "weil/factorize.hpp"

#include <algorithm>

namespace weil {

GroupElement TransvectionSpec::to_group(const SympSpace& space) const {
    return transvection(space, c, gamma);
}

TransvectionSpec canonical_spec(const SympSpace& space,
                                const std::vector<uint32_t>& c, uint32_t gamma) {
    if (gamma == 0) throw std::invalid_argument("degenerate transvection");
    const auto& F = *space.field();
    uint32_t lead = 0;
    for (uint32_t v : c)
        if (v != 0) {
            lead = v;
            break;
        }
    if (lead == 0) throw std::invalid_argument("degenerate transvection");
    const uint32_t s = F.inv(lead);
    TransvectionSpec spec;
    spec.c.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) spec.c[i] = F.mul(c[i], s);
    spec.gamma = F.mul(gamma, F.mul(s, s));
    return spec;
}

namespace {

// Line representatives (first nonzero coordinate 1) inside a subspace,
// in ambient encoding order.
std::vector<std::vector<uint32_t>> subspace_lines(const Subspace& u) {
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> reps;
    for (const auto& v : u.elements()) {
        uint32_t lead = 0;
        for (uint32_t x : v)
            if (x != 0) {
                lead = x;
                break;
            }
        if (lead == 1) reps.emplace_back(u.space().encode(v), v);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<std::vector<uint32_t>> out;
    out.reserve(reps.size());
    for (auto& [e, v] : reps) out.push_back(std::move(v));
    return out;
}

void factor_into(const GroupElement& g, std::vector<TransvectionSpec>& out) {
    const auto& sp = g.space();
    const auto& F = *sp.field();
    if (g.is_identity()) return;

    const ThetaData td = theta_data(g);
    const int r = td.moved.dim();

    if (r == 1 && !g.is_involution()) {
        std::vector<uint32_t> c(td.moved.basis().a.begin(), td.moved.basis().a.end());
        out.push_back(canonical_spec(sp, c, td.theta.at(0, 0)));
        return;
    }

    if (g.is_involution()) {
        // g * h^{-1} is never an involution, so the general branch applies
        // to it; g = (g h^{-1}) h has length dim V^{g-1} + 1.
        const auto lines = subspace_lines(td.moved);
        const auto& c = lines.front();
        const GroupElement h = transvection(sp, c, 1);
        factor_into(g * h.inverse(), out);
        out.push_back(canonical_spec(sp, c, 1));
        return;
    }

    // Non-involution, r >= 2: find a line <c> of the moved space with
    // Q(c) != 0 whose theta-right-complement Y still carries a nonzero Q,
    // split off the transvection with gram Theta|<c>, and recurse.
    for (const auto& c : subspace_lines(td.moved)) {
        if (td.q_of_vector(c) == 0) continue;
        const auto c_coords = td.moved.coordinates(c);

        bool q_alive_on_y = false;
        for (const auto& y : td.moved.elements()) {
            const auto y_coords = td.moved.coordinates(y);
            uint32_t theta_cy = 0;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    theta_cy = F.add(
                        theta_cy,
                        F.mul(F.mul(c_coords[i], td.theta.at(i, j)), y_coords[j]));
            if (theta_cy == 0 && td.q_of_vector(y) != 0) {
                q_alive_on_y = true;
                break;
            }
        }
        if (!q_alive_on_y) continue;

        // Theta of g restricted to <c>, on the echelon basis of <c>.
        const Subspace line(sp, [&] {
            FMatrix m(sp.field(), 1, sp.dim());
            for (int i = 0; i < sp.dim(); ++i) m.at(0, i) = c[i];
            return m;
        }());
        const auto e = line.basis();
        std::vector<uint32_t> e0(e.a.begin(), e.a.end());
        FMatrix t(sp.field(), 1, 1);
        const auto ec = td.moved.coordinates(e0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                t.at(0, 0) = F.add(
                    t.at(0, 0), F.mul(F.mul(ec[i], td.theta.at(i, j)), ec[j]));

        const GroupElement h = group_from_theta(line, t);
        const GroupElement k = h.inverse() * g;
        if (moved_space(k).dim() != r - 1)
            throw std::logic_error("split did not reduce the moved space");
        out.push_back(canonical_spec(sp, e0, t.at(0, 0)));
        factor_into(k, out);
        return;
    }
    throw std::logic_error("no admissible splitting line found");
}

}  // namespace

std::vector<TransvectionSpec> factor(const GroupElement& g) {
    std::vector<TransvectionSpec> out;
    factor_into(g, out);
    return out;
}

FactorizationReport verify_factorization(const GroupElement& g,
                                         const std::vector<TransvectionSpec>& seq) {
    const auto& sp = g.space();
    GroupElement prod = GroupElement::identity(sp);
    for (const auto& s : seq) prod = prod * s.to_group(sp);

    FactorizationReport rep;
    rep.length = static_cast<int>(seq.size());
    rep.expected_length =
        moved_space(g).dim() + (g.is_involution() ? 1 : 0);
    rep.product_matches = prod == g;
    rep.length_minimal = rep.length == rep.expected_length;
    return rep;
}

}  // namespace weil
