#include "weil/algebra.hpp"

namespace weil {

AlgebraElement AlgebraElement::basis(const SympSpace& space, uint32_t v_index) {
    AlgebraElement a(space);
    a.terms_.emplace(v_index, CycNumber::integer(space.field()->p(), 1));
    return a;
}

CycNumber AlgebraElement::coeff(uint32_t v_index) const {
    auto it = terms_.find(v_index);
    return it == terms_.end() ? CycNumber(space_->field()->p()) : it->second;
}

void AlgebraElement::set_coeff(uint32_t v_index, CycNumber c) {
    if (c.is_zero())
        terms_.erase(v_index);
    else
        terms_.insert_or_assign(v_index, std::move(c));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!(*space_ == *o.space_)) throw std::invalid_argument("space mismatch");
    AlgebraElement r = *this;
    for (const auto& [v, c] : o.terms_) r.set_coeff(v, r.coeff(v) + c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (!(*space_ == *o.space_)) throw std::invalid_argument("space mismatch");
    AlgebraElement r = *this;
    for (const auto& [v, c] : o.terms_) r.set_coeff(v, r.coeff(v) - c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (!(*space_ == *o.space_)) throw std::invalid_argument("space mismatch");
    const auto& sp = *space_;
    const auto& F = *sp.field();
    std::map<uint32_t, CycNumber> acc;
    for (const auto& [xi, cx] : terms_) {
        const auto x = sp.decode(xi);
        for (const auto& [yi, cy] : o.terms_) {
            const auto y = sp.decode(yi);
            std::vector<uint32_t> xy(sp.dim());
            for (int k = 0; k < sp.dim(); ++k) xy[k] = F.add(x[k], y[k]);
            const uint32_t target = sp.encode(xy);
            CycNumber term = cx * cy * psi(F, sp.phi(x, y));
            auto it = acc.find(target);
            if (it == acc.end())
                acc.emplace(target, std::move(term));
            else
                it->second += term;
        }
    }
    AlgebraElement r(sp);
    for (auto& [v, c] : acc)
        if (!c.is_zero()) r.terms_.emplace(v, std::move(c));
    return r;
}

AlgebraElement AlgebraElement::operator*(const CycNumber& s) const {
    AlgebraElement r(*space_);
    if (s.is_zero()) return r;
    for (const auto& [v, c] : terms_) r.terms_.emplace(v, c * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return *space_ == *o.space_ && terms_ == o.terms_;
}

AlgebraElement apply_g(const AlgebraElement& a, const GroupElement& g) {
    AlgebraElement r(a.space());
    for (const auto& [v, c] : a.terms()) r.set_coeff(g.apply_index(v), c);
    return r;
}

AlgebraElement s_of(const GroupElement& g) {
    const auto& sp = g.space();
    const auto td = theta_data(g);
    AlgebraElement s(sp);
    for (const auto& y : td.moved.elements())
        s.set_coeff(sp.encode(y), psi(*sp.field(), td.q_of_vector(y)));
    return s;
}

AlgebraElement s_inverse(const GroupElement& g) {
    const auto& sp = g.space();
    const auto td = theta_data(g);
    long count = 1;
    for (int i = 0; i < td.moved.dim(); ++i) count *= sp.field()->q();
    AlgebraElement s(sp);
    const mpq_class scale(1, count);
    for (const auto& y : td.moved.elements())
        s.set_coeff(sp.encode(y),
                    psi(*sp.field(), sp.field()->neg(td.q_of_vector(y))) * scale);
    return s;
}

CycNumber mu(const GroupElement& g, const GroupElement& h) {
    if (!(g.space() == h.space())) throw std::invalid_argument("space mismatch");
    const auto& sp = g.space();
    const auto tg = theta_data(g);
    const auto th = theta_data(h);
    const Subspace common = intersect(tg.moved, th.moved);
    CycNumber acc(sp.field()->p());
    for (const auto& y : common.elements())
        acc += psi(*sp.field(),
                   sp.field()->add(tg.q_of_vector(y), th.q_of_vector(y)));
    return acc;
}

}  // namespace weil
