#include "weil/symplectic.hpp"

#include <unordered_set>

namespace weil {

SympSpace SympSpace::standard(FieldPtr f, int n) {
    FMatrix gram(f, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        gram.at(i, n + i) = 1;
        gram.at(n + i, i) = f->neg(1);
    }
    SympSpace sp = from_gram(std::move(f), std::move(gram));
    sp.standard_ = true;
    return sp;
}

SympSpace SympSpace::from_gram(FieldPtr f, FMatrix gram) {
    if (gram.rows != gram.cols || gram.rows % 2 != 0)
        throw std::invalid_argument("shape mismatch");
    for (int i = 0; i < gram.rows; ++i) {
        if (gram.at(i, i) != 0) throw std::invalid_argument("gram not alternating");
        for (int j = 0; j < i; ++j)
            if (gram.at(i, j) != f->neg(gram.at(j, i)))
                throw std::invalid_argument("gram not antisymmetric");
    }
    if (mat_det(gram) == 0) throw std::invalid_argument("gram degenerate");
    SympSpace sp;
    sp.n_ = gram.rows / 2;
    sp.field_ = std::move(f);
    sp.points_ = 1;
    for (int i = 0; i < gram.rows; ++i) sp.points_ *= sp.field_->q();
    sp.gram_ = std::move(gram);
    return sp;
}

uint32_t SympSpace::phi(const std::vector<uint32_t>& x,
                        const std::vector<uint32_t>& y) const {
    const auto& F = *field_;
    uint32_t acc = 0;
    for (int i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim(); ++j)
            acc = F.add(acc, F.mul(F.mul(x[i], gram_.at(i, j)), y[j]));
    }
    return acc;
}

uint32_t SympSpace::encode(const std::vector<uint32_t>& v) const {
    uint32_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * field_->q() + v[i];
    return idx;
}

std::vector<uint32_t> SympSpace::decode(uint32_t idx) const {
    std::vector<uint32_t> v(dim());
    for (int i = 0; i < dim(); ++i) {
        v[i] = idx % field_->q();
        idx /= field_->q();
    }
    return v;
}

CycNumber f_pair(const SympSpace& sp, const std::vector<uint32_t>& x,
                 const std::vector<uint32_t>& y) {
    return psi(*sp.field(), sp.phi(x, y));
}

bool is_symplectic(const SympSpace& space, const FMatrix& mat) {
    if (mat.rows != space.dim() || mat.cols != space.dim() ||
        mat.field != space.field())
        throw std::invalid_argument("shape mismatch");
    return mat_mul(mat_mul(mat, space.gram()), mat_transpose(mat)) == space.gram();
}

FMatrix adjoint(const SympSpace& space, const FMatrix& mat) {
    return mat_mul(mat_mul(space.gram(), mat_transpose(mat)),
                   mat_inverse(space.gram()));
}

GroupElement::GroupElement(const SympSpace& space, FMatrix mat)
    : space_(&space), mat_(std::move(mat)) {
    if (!is_symplectic(space, mat_))
        throw std::invalid_argument("matrix not symplectic");
}

GroupElement GroupElement::identity(const SympSpace& space) {
    return {space, FMatrix::identity(space.field(), space.dim())};
}

GroupElement GroupElement::minus_identity(const SympSpace& space) {
    FMatrix m(space.field(), space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) m.at(i, i) = space.field()->neg(1);
    return {space, std::move(m)};
}

uint32_t GroupElement::apply_index(uint32_t idx) const {
    return space_->encode(apply(space_->decode(idx)));
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (!(*space_ == *o.space_)) throw std::invalid_argument("space mismatch");
    // x^{gh} = (x g) h, so the matrix of gh is mat(g) * mat(h)
    return {*space_, mat_mul(mat_, o.mat_)};
}

GroupElement GroupElement::inverse() const {
    return {*space_, adjoint(*space_, mat_)};  // g^ad = g^{-1} on Sp(V)
}

bool GroupElement::is_identity() const {
    return mat_ == FMatrix::identity(space_->field(), space_->dim());
}

bool GroupElement::is_involution() const {
    return !is_identity() && (*this * *this).is_identity();
}

uint64_t GroupElement::key() const {
    uint64_t k = 0;
    for (uint32_t v : mat_.a) k = k * space_->field()->q() + v;
    return k;
}

Subspace::Subspace(const SympSpace& space, const FMatrix& spanning_rows)
    : space_(&space), basis_(rref(spanning_rows)) {
    if (basis_.cols != space.dim()) throw std::invalid_argument("shape mismatch");
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
    FMatrix ext(space_->field(), basis_.rows + 1, basis_.cols);
    ext.a = basis_.a;
    ext.a.insert(ext.a.end(), v.begin(), v.end());
    return mat_rank(ext) == basis_.rows;
}

std::vector<std::vector<uint32_t>> Subspace::elements() const {
    const int q = space_->field()->q();
    const auto& F = *space_->field();
    long total = 1;
    for (int i = 0; i < dim(); ++i) total *= q;
    std::vector<std::vector<uint32_t>> out;
    out.reserve(total);
    for (long idx = 0; idx < total; ++idx) {
        std::vector<uint32_t> v(space_->dim(), 0);
        long t = idx;
        for (int i = 0; i < dim(); ++i) {
            const uint32_t c = static_cast<uint32_t>(t % q);
            t /= q;
            if (!c) continue;
            for (int j = 0; j < space_->dim(); ++j)
                v[j] = F.add(v[j], F.mul(c, basis_.at(i, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<uint32_t> Subspace::coordinates(const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> coords;
    if (!solve_left(basis_, v, coords))
        throw std::invalid_argument("vector not in subspace");
    return coords;
}

Subspace moved_space(const GroupElement& g) {
    FMatrix m = mat_sub(g.mat(), FMatrix::identity(g.space().field(), g.space().dim()));
    return {g.space(), m};
}

Subspace fixed_space(const GroupElement& g) {
    FMatrix m = mat_sub(g.mat(), FMatrix::identity(g.space().field(), g.space().dim()));
    return {g.space(), left_kernel(m)};
}

Subspace perp(const Subspace& u) {
    // x in U^perp  <=>  basis * gram * x^T = 0  <=>  x * (basis*gram)^T = 0
    const auto& sp = u.space();
    if (u.dim() == 0)
        return {sp, FMatrix::identity(sp.field(), sp.dim())};
    FMatrix bg = mat_mul(u.basis(), sp.gram());
    return {sp, left_kernel(mat_transpose(bg))};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    return perp(Subspace(a.space(),
                         [&] {
                             FMatrix m = perp(a).basis();
                             const FMatrix n = perp(b).basis();
                             m.a.insert(m.a.end(), n.a.begin(), n.a.end());
                             m.rows += n.rows;
                             return m;
                         }()));
}

uint32_t ThetaData::q_of(const std::vector<uint32_t>& coords) const {
    const auto& F = *moved.space().field();
    uint32_t acc = 0;
    for (int i = 0; i < b_sym.rows; ++i) {
        if (!coords[i]) continue;
        for (int j = 0; j < b_sym.cols; ++j)
            acc = F.add(acc, F.mul(F.mul(coords[i], b_sym.at(i, j)), coords[j]));
    }
    return acc;
}

uint32_t ThetaData::q_of_vector(const std::vector<uint32_t>& v) const {
    return q_of(moved.coordinates(v));
}

ThetaData theta_data(const GroupElement& g) {
    const auto& sp = g.space();
    const auto& F = *sp.field();
    Subspace moved = moved_space(g);
    const int r = moved.dim();
    FMatrix gm1 = mat_sub(g.mat(), FMatrix::identity(sp.field(), sp.dim()));

    // For each echelon basis vector y_i pick a preimage x_i with
    // x_i (g-1) = y_i (free coordinates zero); the result is independent of
    // the choice because V_g = (V^{g-1})^perp.
    std::vector<std::vector<uint32_t>> pre(r);
    for (int i = 0; i < r; ++i) {
        std::vector<uint32_t> y(moved.basis().a.begin() + static_cast<size_t>(i) * sp.dim(),
                                moved.basis().a.begin() + static_cast<size_t>(i + 1) * sp.dim());
        if (!solve_left(gm1, y, pre[i]))
            throw std::logic_error("moved-space vector without preimage");
    }

    FMatrix theta(sp.field(), r, r);
    for (int i = 0; i < r; ++i) {
        std::vector<uint32_t> yi(moved.basis().a.begin() + static_cast<size_t>(i) * sp.dim(),
                                 moved.basis().a.begin() + static_cast<size_t>(i + 1) * sp.dim());
        for (int j = 0; j < r; ++j) theta.at(i, j) = sp.phi(yi, pre[j]);
    }

    FMatrix b_sym(sp.field(), r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b_sym.at(i, j) = F.half(F.add(theta.at(i, j), theta.at(j, i)));

    return ThetaData{std::move(moved), std::move(theta), std::move(b_sym)};
}

GroupElement group_from_theta(const Subspace& u, const FMatrix& t) {
    const auto& sp = u.space();
    const auto& F = *sp.field();
    const int r = u.dim();
    if (t.rows != r || t.cols != r) throw std::invalid_argument("shape mismatch");
    if (r == 0) return GroupElement::identity(sp);
    if (mat_det(t) == 0) throw std::invalid_argument("not a theta form");
    // skew part must be -phi/2 on U: t_ij - t_ji = -phi(u_i, u_j)
    std::vector<std::vector<uint32_t>> ub(r);
    for (int i = 0; i < r; ++i)
        ub[i].assign(u.basis().a.begin() + static_cast<size_t>(i) * sp.dim(),
                     u.basis().a.begin() + static_cast<size_t>(i + 1) * sp.dim());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (F.sub(t.at(i, j), t.at(j, i)) != F.neg(sp.phi(ub[i], ub[j])))
                throw std::invalid_argument("not a theta form");

    // Solve T(u_i, z(v)) = phi(u_i, v) for z(v) = sum_k c_k u_k:
    // T c^T = w where w_i = phi(u_i, v).  Then v^g = v + z(v).
    const FMatrix t_inv = mat_inverse(t);
    FMatrix mat = FMatrix::identity(sp.field(), sp.dim());
    for (int row = 0; row < sp.dim(); ++row) {
        std::vector<uint32_t> v(sp.dim(), 0);
        v[row] = 1;
        std::vector<uint32_t> w(r);
        for (int i = 0; i < r; ++i) w[i] = sp.phi(ub[i], v);
        // c = t^{-1} w in the column sense: c_k = sum_i (t^{-1})_{k i} ... use
        // solve: t_{ik} c_k = w_i  =>  c = w * (t^{-1})^T
        for (int k = 0; k < r; ++k) {
            uint32_t ck = 0;
            for (int i = 0; i < r; ++i) ck = F.add(ck, F.mul(t_inv.at(k, i), w[i]));
            if (!ck) continue;
            for (int j = 0; j < sp.dim(); ++j)
                mat.at(row, j) = F.add(mat.at(row, j), F.mul(ck, ub[k][j]));
        }
    }
    return {sp, std::move(mat)};
}

GroupElement transvection(const SympSpace& space, const std::vector<uint32_t>& c,
                          uint32_t gamma) {
    const auto& F = *space.field();
    bool c_zero = true;
    for (uint32_t v : c) c_zero = c_zero && v == 0;
    if (c_zero || gamma == 0) throw std::invalid_argument("degenerate transvection");
    const uint32_t gi = F.inv(gamma);
    FMatrix mat = FMatrix::identity(space.field(), space.dim());
    for (int row = 0; row < space.dim(); ++row) {
        std::vector<uint32_t> v(space.dim(), 0);
        v[row] = 1;
        const uint32_t coef = F.neg(F.mul(gi, space.phi(v, c)));
        if (!coef) continue;
        for (int j = 0; j < space.dim(); ++j)
            mat.at(row, j) = F.add(mat.at(row, j), F.mul(coef, c[j]));
    }
    return {space, std::move(mat)};
}

std::vector<std::vector<uint32_t>> line_representatives(const SympSpace& space) {
    std::vector<std::vector<uint32_t>> reps;
    for (uint32_t idx = 1; idx < space.point_count(); ++idx) {
        std::vector<uint32_t> v = space.decode(idx);
        int lead = -1;
        for (int i = 0; i < space.dim(); ++i)
            if (v[i]) {
                lead = i;
                break;
            }
        if (v[lead] == 1) reps.push_back(std::move(v));
    }
    return reps;
}

namespace {

std::vector<GroupElement> transvection_generators(const SympSpace& space) {
    std::vector<GroupElement> gens;
    for (const auto& c : line_representatives(space))
        for (uint32_t gamma = 1; gamma < static_cast<uint32_t>(space.field()->q()); ++gamma)
            gens.push_back(transvection(space, c, gamma));
    return gens;
}

}  // namespace

std::vector<GroupElement> enumerate_group(const SympSpace& space, uint64_t cap) {
    // |Sp(2n,q)| = q^{n^2} prod_{i=1..n} (q^{2i} - 1)
    const int q = space.field()->q();
    const int n = space.n();
    uint64_t order = 1;
    for (int i = 0; i < n * n; ++i) order *= q;
    uint64_t pw = 1;
    for (int i = 1; i <= n; ++i) {
        pw *= static_cast<uint64_t>(q) * q;
        order *= pw - 1;
    }
    if (order > cap) throw std::invalid_argument("group too large");

    const auto gens = transvection_generators(space);
    std::vector<GroupElement> elems = {GroupElement::identity(space)};
    std::unordered_set<uint64_t> seen = {elems[0].key()};
    for (size_t head = 0; head < elems.size(); ++head) {
        const GroupElement cur = elems[head];
        for (const auto& gen : gens) {
            GroupElement next = cur * gen;
            if (seen.insert(next.key()).second) elems.push_back(std::move(next));
        }
    }
    if (elems.size() != order) throw std::logic_error("closure size mismatch");
    return elems;
}

GroupElement random_element(const SympSpace& space, std::mt19937& rng) {
    const auto lines = line_representatives(space);
    const int q = space.field()->q();
    GroupElement g = GroupElement::identity(space);
    const int len = 16 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
        const auto& c = lines[rng() % lines.size()];
        const uint32_t gamma = 1 + rng() % (q - 1);
        g = g * transvection(space, c, gamma);
    }
    return g;
}

}  // namespace weil
