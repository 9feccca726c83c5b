#include "weil/matrix_rep.hpp"

#include <algorithm>

namespace weil {

CMatrix CMatrix::identity(int p, int n) {
    CMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycNumber::integer(p, 1);
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols != o.rows || p != o.p) throw std::invalid_argument("shape mismatch");
    CMatrix r(p, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const CycNumber& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("shape mismatch");
    CMatrix r(p, rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("shape mismatch");
    CMatrix r(p, rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

CMatrix CMatrix::scaled(const CycNumber& s) const {
    CMatrix r(p, rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * s;
    return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
    return rows == o.rows && cols == o.cols && e == o.e;
}

CycNumber CMatrix::trace() const {
    CycNumber t(p);
    for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

CycNumber cyc_det(CMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("shape mismatch");
    const int n = m.rows;
    if (n == 0) return CycNumber::integer(m.p, 1);
    bool negate = false;
    CycNumber prev = CycNumber::integer(m.p, 1);
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return CycNumber(m.p);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            negate = !negate;
        }
        const CycNumber prev_inv = prev.inverse();
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) =
                    (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) * prev_inv;
        prev = m.at(k, k);
    }
    CycNumber det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

LagrangianFrame::LagrangianFrame(const SympSpace& space, FMatrix w_basis,
                                 FMatrix wstar_basis)
    : space_(&space), w_basis_(rref(std::move(w_basis))), wstar_basis_(rref(std::move(wstar_basis))) {
    const int n = space.n();
    if (w_basis_.rows != n || wstar_basis_.rows != n)
        throw std::invalid_argument("not Lagrangian: wrong dimension");
    auto check_isotropic = [&](const FMatrix& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<uint32_t> vi(b.a.begin() + static_cast<size_t>(i) * b.cols,
                                         b.a.begin() + static_cast<size_t>(i + 1) * b.cols);
                std::vector<uint32_t> vj(b.a.begin() + static_cast<size_t>(j) * b.cols,
                                         b.a.begin() + static_cast<size_t>(j + 1) * b.cols);
                if (space.phi(vi, vj) != 0)
                    throw std::invalid_argument("not Lagrangian: not isotropic");
            }
    };
    check_isotropic(w_basis_);
    check_isotropic(wstar_basis_);

    FMatrix stacked(space.field(), 2 * n, 2 * n);
    std::copy(w_basis_.a.begin(), w_basis_.a.end(), stacked.a.begin());
    std::copy(wstar_basis_.a.begin(), wstar_basis_.a.end(),
              stacked.a.begin() + static_cast<size_t>(n) * 2 * n);
    decomp_ = mat_inverse(stacked);  // throws if W, W* not complementary

    // P ordering: nonzero a in W* with encoding(a) < encoding(-a), sorted by
    // encoding; -P aligned entry-by-entry; 0 last.
    const Subspace wstar(space, wstar_basis_);
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> pos_half;
    for (const auto& a : wstar.elements()) {
        const uint32_t enc = space.encode(a);
        std::vector<uint32_t> neg(a.size());
        for (size_t i = 0; i < a.size(); ++i) neg[i] = space.field()->neg(a[i]);
        if (enc != 0 && enc < space.encode(neg)) pos_half.emplace_back(enc, a);
    }
    std::sort(pos_half.begin(), pos_half.end());
    for (const auto& [enc, a] : pos_half) order_.push_back(a);
    for (const auto& [enc, a] : pos_half) {
        std::vector<uint32_t> neg(a.size());
        for (size_t i = 0; i < a.size(); ++i) neg[i] = space.field()->neg(a[i]);
        order_.push_back(std::move(neg));
    }
    order_.emplace_back(space.dim(), 0);

    pos_.assign(space.point_count(), -1);
    for (size_t i = 0; i < order_.size(); ++i)
        pos_[space.encode(order_[i])] = static_cast<int>(i);

    w_elems_ = Subspace(space, w_basis_).elements();
}

LagrangianFrame LagrangianFrame::standard(const SympSpace& space) {
    if (!space.is_standard())
        throw std::invalid_argument("frames require the standard gram");
    const int n = space.n();
    FMatrix w(space.field(), n, 2 * n), ws(space.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        w.at(i, i) = 1;
        ws.at(i, n + i) = 1;
    }
    return {space, std::move(w), std::move(ws)};
}

LagrangianFrame LagrangianFrame::swapped(const SympSpace& space) {
    if (!space.is_standard())
        throw std::invalid_argument("frames require the standard gram");
    const int n = space.n();
    FMatrix w(space.field(), n, 2 * n), ws(space.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        w.at(i, n + i) = 1;
        ws.at(i, i) = 1;
    }
    return {space, std::move(w), std::move(ws)};
}

int LagrangianFrame::position(uint32_t v_encoding) const { return pos_[v_encoding]; }

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> LagrangianFrame::split(
    const std::vector<uint32_t>& x) const {
    const auto& F = *space_->field();
    const int n = space_->n();
    const std::vector<uint32_t> coeffs = vec_mat(x, decomp_);
    std::vector<uint32_t> w(space_->dim(), 0), d(space_->dim(), 0);
    for (int k = 0; k < n; ++k) {
        if (coeffs[k])
            for (int j = 0; j < space_->dim(); ++j)
                w[j] = F.add(w[j], F.mul(coeffs[k], w_basis_.at(k, j)));
        if (coeffs[n + k])
            for (int j = 0; j < space_->dim(); ++j)
                d[j] = F.add(d[j], F.mul(coeffs[n + k], wstar_basis_.at(k, j)));
    }
    return {std::move(w), std::move(d)};
}

std::vector<uint32_t> LagrangianFrame::wstar_coords(const std::vector<uint32_t>& d) const {
    const std::vector<uint32_t> coeffs = vec_mat(d, decomp_);
    return {coeffs.begin() + space_->n(), coeffs.end()};
}

AlgebraElement LagrangianFrame::e0() const {
    AlgebraElement e(*space_);
    const mpq_class scale(1, size());
    const CycNumber c = CycNumber::integer(space_->field()->p(), scale);
    for (const auto& w : w_elems_) e.set_coeff(space_->encode(w), c);
    return e;
}

AlgebraElement matrix_unit(const LagrangianFrame& frame, int a, int b) {
    const auto& sp = frame.space();
    const auto& F = *sp.field();
    std::vector<uint32_t> av = frame.order()[a];
    for (auto& v : av) v = F.neg(v);
    return AlgebraElement::basis(sp, sp.encode(av)) * frame.e0() *
           AlgebraElement::basis(sp, sp.encode(frame.order()[b]));
}

RepMatrix to_matrix(const AlgebraElement& a, const LagrangianFrame& frame) {
    if (!(a.space() == frame.space())) throw std::invalid_argument("space mismatch");
    const auto& sp = frame.space();
    const auto& F = *sp.field();
    const int N = frame.size();
    CMatrix m(F.p(), N, N);
    for (const auto& [xi, c] : a.terms()) {
        const auto x = sp.decode(xi);
        const auto [w, d] = frame.split(x);
        for (int i = 0; i < N; ++i) {
            const auto& av = frame.order()[i];
            std::vector<uint32_t> bv(av.size());
            for (size_t k = 0; k < av.size(); ++k) bv[k] = F.add(av[k], d[k]);
            const int j = frame.position(sp.encode(bv));
            std::vector<uint32_t> ab(av.size());
            for (size_t k = 0; k < av.size(); ++k) ab[k] = F.add(av[k], bv[k]);
            m.at(i, j) += c * psi(F, sp.phi(ab, x));
        }
    }
    return {&frame, std::move(m)};
}

RepMatrix j_matrix(const LagrangianFrame& frame) {
    const auto& sp = frame.space();
    const auto& F = *sp.field();
    const int N = frame.size();
    CMatrix m(F.p(), N, N);
    for (int i = 0; i < N; ++i) {
        std::vector<uint32_t> neg = frame.order()[i];
        for (auto& v : neg) v = F.neg(v);
        m.at(i, frame.position(sp.encode(neg))) = CycNumber::integer(F.p(), 1);
    }
    return {&frame, std::move(m)};
}

bool commutes_with_j(const RepMatrix& m) {
    const CMatrix j = j_matrix(*m.frame).m;
    return j * m.m == m.m * j;
}

CMatrix flat_block(const RepMatrix& m) {
    if (!commutes_with_j(m)) throw std::invalid_argument("not in centralizer");
    const int h = m.frame->half();
    CMatrix r(m.m.p, h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            r.at(i, j) = m.m.at(i, j) - m.m.at(i, h + j);  // A - B
    return r;
}

CMatrix sharp_block(const RepMatrix& m) {
    if (!commutes_with_j(m)) throw std::invalid_argument("not in centralizer");
    const int h = m.frame->half();
    const int p = m.m.p;
    CMatrix r(p, h + 1, h + 1);
    const CycNumber two = CycNumber::integer(p, 2);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) r.at(i, j) = m.m.at(i, j) + m.m.at(i, h + j);
        r.at(i, h) = m.m.at(i, 2 * h) * two;  // 2b
    }
    for (int j = 0; j < h; ++j) r.at(h, j) = m.m.at(2 * h, j);  // a
    r.at(h, h) = m.m.at(2 * h, 2 * h);                          // alpha
    return r;
}

CycNumber eta_det(const GroupElement& g, const LagrangianFrame& frame) {
    const RepMatrix sm = to_matrix(s_of(g), frame);
    const CycNumber d = cyc_det(sm.m);
    const CycNumber dflat = cyc_det(flat_block(sm));
    return dflat * dflat * d.inverse();
}

CycNumber eta_closed(const GroupElement& g) {
    const auto& F = *g.space().field();
    const ThetaData td = theta_data(g);
    const int r = td.moved.dim();
    if (r == 0) return CycNumber::integer(F.p(), 1);
    CycNumber v = rho(F).pow(-r);
    if (F.chi(mat_det(td.theta)) < 0) v = -v;
    return v;
}

CycNumber eta_closed_primed(const GroupElement& g) {
    const auto& F = *g.space().field();
    const ThetaData td = theta_data(g);
    const int r = td.moved.dim();
    if (r == 0) return CycNumber::integer(F.p(), 1);
    CycNumber v = (-rho(F)).pow(-r);
    if (F.chi(mat_det(td.theta)) < 0) v = -v;
    return v;
}

WeilValues weil_values(const GroupElement& g) {
    const auto& sp = g.space();
    const auto& F = *sp.field();
    const int p = F.p();
    long qn = 1;
    for (int i = 0; i < sp.n(); ++i) qn *= F.q();
    const mpq_class qn_q(qn);
    const int dn = sp.n() % 2 == 0 ? 1 : F.delta();  // delta^n
    const GroupElement neg_g = GroupElement::minus_identity(sp) * g;

    WeilValues w{CycNumber(p), CycNumber(p), CycNumber(p), CycNumber(p),
                 CycNumber(p), CycNumber(p), CycNumber(p), CycNumber(p)};
    w.eta = eta_closed(g);
    w.omega = w.eta * qn_q;
    CycNumber omega_neg = eta_closed(neg_g) * qn_q;
    if (dn < 0) omega_neg = -omega_neg;
    w.omega_minus = (w.omega - omega_neg) * mpq_class(1, 2);
    w.omega_plus = w.omega - w.omega_minus;

    w.eta_primed = eta_closed_primed(g);
    w.omega_primed = w.eta_primed * qn_q;
    CycNumber omega_neg_p = eta_closed_primed(neg_g) * qn_q;
    if (dn < 0) omega_neg_p = -omega_neg_p;
    w.omega_minus_primed = (w.omega_primed - omega_neg_p) * mpq_class(1, 2);
    w.omega_plus_primed = w.omega_primed - w.omega_minus_primed;
    return w;
}

CycNumber eta_w_stable(const GroupElement& g, const LagrangianFrame& frame) {
    const auto& sp = g.space();
    const auto& F = *sp.field();
    const int n = sp.n();
    const Subspace w_space(sp, frame.w_basis());
    for (int i = 0; i < n; ++i) {
        std::vector<uint32_t> wi(frame.w_basis().a.begin() + static_cast<size_t>(i) * sp.dim(),
                                 frame.w_basis().a.begin() + static_cast<size_t>(i + 1) * sp.dim());
        if (!w_space.contains(g.apply(wi)))
            throw std::invalid_argument("W not g-invariant");
    }

    // g* on W* = V/W: W*-component of the image of each W*-basis vector.
    FMatrix gstar(sp.field(), n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<uint32_t> fi(frame.wstar_basis().a.begin() + static_cast<size_t>(i) * sp.dim(),
                                 frame.wstar_basis().a.begin() + static_cast<size_t>(i + 1) * sp.dim());
        const auto [wpart, dpart] = frame.split(g.apply(fi));
        const auto coords = frame.wstar_coords(dpart);
        for (int j = 0; j < n; ++j) gstar.at(i, j) = coords[j];
    }

    const ThetaData td = theta_data(g);
    const Subspace common = intersect(w_space, td.moved);
    CycNumber denom(F.p());
    for (const auto& y : common.elements()) denom += psi(F, td.q_of_vector(y));

    CycNumber result = denom.inverse();
    if (F.chi(mat_det(gstar)) < 0) result = -result;
    return result;
}

int sigma_sign(const FMatrix& gstar, const LagrangianFrame& frame) {
    const auto& sp = frame.space();
    if (mat_det(gstar) == 0) throw std::domain_error("singular input");
    const int h = frame.half();
    int count = 0;
    for (int i = 0; i < h; ++i) {
        const auto coords = frame.wstar_coords(frame.order()[i]);
        const auto img_coords = vec_mat(coords, gstar);
        const auto img = vec_mat(img_coords, frame.wstar_basis());
        const int pos = frame.position(sp.encode(img));
        if (pos >= h && pos < 2 * h) ++count;
    }
    return count % 2 == 0 ? 1 : -1;
}

long element_order(const GroupElement& g) {
    long ord = 1;
    GroupElement x = g;
    while (!x.is_identity()) {
        x = x * g;
        ++ord;
        if (ord > 10000000) throw std::logic_error("runaway order computation");
    }
    return ord;
}

bool is_semisimple(const GroupElement& g) {
    return element_order(g) % g.space().field()->p() != 0;
}

std::vector<IdentityCheck> special_identities(const GroupElement& g) {
    const auto& sp = g.space();
    const auto& F = *sp.field();
    const int p = F.p();
    const int n = sp.n();
    const int dn = n % 2 == 0 ? 1 : F.delta();
    long qn = 1;
    for (int i = 0; i < n; ++i) qn *= F.q();

    const WeilValues w = weil_values(g);
    const ThetaData td = theta_data(g);
    const int r = td.moved.dim();
    std::vector<IdentityCheck> out;

    {
        // omega(g^{-1}) omega(g) = |V_g| = q^{2n - dim V^{g-1}}
        IdentityCheck c{"omega(g^-1)*omega(g) = |V_g|", true, false};
        long fixed = 1;
        for (int i = 0; i < 2 * n - r; ++i) fixed *= F.q();
        c.pass = weil_values(g.inverse()).omega * w.omega ==
                 CycNumber::integer(p, fixed);
        out.push_back(c);
    }
    if (g.is_involution() || g.is_identity()) {
        IdentityCheck c{"involution omega = delta^m q^(n-m)", true, false};
        const int m = r / 2;
        long qnm = 1, qm = 1;
        for (int i = 0; i < n - m; ++i) qnm *= F.q();
        for (int i = 0; i < m; ++i) qm *= F.q();
        const int dm = m % 2 == 0 ? 1 : F.delta();
        c.pass = w.omega == CycNumber::integer(p, dm * qnm) &&
                 w.omega_minus ==
                     CycNumber::integer(p, mpq_class(dm * (qnm - qm), 2));
        out.push_back(c);
    } else {
        out.push_back({"involution omega = delta^m q^(n-m)", false, true});
    }
    if (r == 1) {
        IdentityCheck c{"transvection eta = rho^-1 chi(gamma)", true, false};
        CycNumber expect = rho(F).inverse();
        if (F.chi(td.theta.at(0, 0)) < 0) expect = -expect;
        const CycNumber minus_half = CycNumber::integer(p, mpq_class(-1, 2));
        c.pass = w.eta == expect &&
                 w.omega_minus == expect * mpq_class(qn, 2) + minus_half;
        out.push_back(c);
    } else {
        out.push_back({"transvection eta = rho^-1 chi(gamma)", false, true});
    }
    {
        const FMatrix gm1 =
            mat_sub(g.mat(), FMatrix::identity(sp.field(), sp.dim()));
        const uint32_t det = mat_det(gm1);
        if (det != 0) {
            IdentityCheck c{"g-1 invertible omega = delta^n chi(det(g-1))", true, false};
            c.pass = w.omega == CycNumber::integer(p, dn * F.chi(det));
            out.push_back(c);
        } else {
            out.push_back({"g-1 invertible omega = delta^n chi(det(g-1))", false, true});
        }
    }
    if (is_semisimple(g)) {
        IdentityCheck c{"semisimple omega = omega'", true, false};
        c.pass = w.omega == w.omega_primed;
        out.push_back(c);
    } else {
        out.push_back({"semisimple omega = omega'", false, true});
    }
    return out;
}

}  // namespace weil
