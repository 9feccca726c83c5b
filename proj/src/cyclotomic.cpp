#include "weil/cyclotomic.hpp"

#include <sstream>

#include "weil/linalg.hpp"

namespace weil {

CycNumber CycNumber::integer(int p, const mpq_class& v) {
    CycNumber z(p);
    z.c_[0] = v;
    z.c_[0].canonicalize();
    return z;
}

CycNumber CycNumber::zeta_pow(int p, long k) {
    CycNumber z(p);
    z.add_zeta_pow(k, 1);
    return z;
}

void CycNumber::add_zeta_pow(long k, const mpq_class& coeff) {
    long r = k % p_;
    if (r < 0) r += p_;
    if (r < p_ - 1) {
        c_[r] += coeff;
    } else {
        // zeta^{p-1} = -1 - zeta - ... - zeta^{p-2}
        for (auto& ci : c_) ci -= coeff;
    }
}

bool CycNumber::is_zero() const {
    for (const auto& ci : c_)
        if (ci != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber r = *this;
    r += o;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CycNumber r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycNumber CycNumber::operator-() const {
    CycNumber r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycNumber CycNumber::operator*(const mpq_class& s) const {
    CycNumber r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
        r.c_[i] = c_[i] * s;
        r.c_[i].canonicalize();
    }
    return r;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CycNumber r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.add_zeta_pow(static_cast<long>(i + j), c_[i] * o.c_[j]);
        }
    }
    for (auto& ci : r.c_) ci.canonicalize();
    return r;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // Solve M w = e0 over Q, where M is the matrix of multiplication by
    // *this on the basis 1, zeta, ..., zeta^{p-2} (columns = images).
    const int n = p_ - 1;
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1));
    for (int j = 0; j < n; ++j) {
        const CycNumber col = *this * CycNumber::zeta_pow(p_, j);
        for (int i = 0; i < n; ++i) aug[i][j] = col.c_[i];
    }
    aug[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (aug[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("division by zero");
        std::swap(aug[c], aug[piv]);
        const mpq_class s = aug[c][c];
        for (int j = c; j <= n; ++j) aug[c][j] /= s;
        for (int i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            const mpq_class f = aug[i][c];
            for (int j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    CycNumber w(p_);
    for (int i = 0; i < n; ++i) {
        w.c_[i] = aug[i][n];
        w.c_[i].canonicalize();
    }
    return w;
}

CycNumber CycNumber::pow(long k) const {
    CycNumber base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    CycNumber r = CycNumber::integer(p_, 1);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

CycNumber CycNumber::conj() const {
    CycNumber r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        r.add_zeta_pow(-static_cast<long>(i), c_[i]);
    }
    for (auto& ci : r.c_) ci.canonicalize();
    return r;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::string> CycNumber::coord_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& ci : c_) {
        std::ostringstream os;
        os << ci.get_num() << "/" << ci.get_den();
        out.push_back(os.str());
    }
    return out;
}

CycNumber psi(const FieldDesc& f, uint32_t a) {
    return CycNumber::zeta_pow(f.p(), f.trace(a));
}

CycNumber rho(const FieldDesc& f) {
    CycNumber r(f.p());
    for (int a = 0; a < f.q(); ++a) r += psi(f, f.mul(a, a));
    return r;
}

uint32_t QuadraticFormDesc::eval_quadratic(const std::vector<uint32_t>& x) const {
    const auto& F = *field;
    uint32_t acc = 0;
    for (int i = 0; i < dim; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim; ++j)
            acc = F.add(acc, F.mul(F.mul(x[i], gram[static_cast<size_t>(i) * dim + j]), x[j]));
    }
    return acc;
}

uint32_t QuadraticFormDesc::eval(const std::vector<uint32_t>& x) const {
    const auto& F = *field;
    uint32_t acc = eval_quadratic(x);
    if (!linear.empty())
        for (int i = 0; i < dim; ++i) acc = F.add(acc, F.mul(x[i], linear[i]));
    return acc;
}

CycNumber quad_psi_sum_brute(const QuadraticFormDesc& form, int dim_cap) {
    if (form.dim > dim_cap) throw std::invalid_argument("dimension limit");
    const auto& F = *form.field;
    const int q = F.q();
    CycNumber acc(F.p());
    std::vector<uint32_t> x(form.dim, 0);
    long total = 1;
    for (int i = 0; i < form.dim; ++i) total *= q;
    for (long idx = 0; idx < total; ++idx) {
        long t = idx;
        for (int i = 0; i < form.dim; ++i) {
            x[i] = static_cast<uint32_t>(t % q);
            t /= q;
        }
        acc += psi(F, form.eval(x));
    }
    return acc;
}

CycNumber quad_psi_sum_closed(const QuadraticFormDesc& form) {
    const auto& F = *form.field;
    const int p = F.p();
    if (form.dim == 0) return CycNumber::integer(p, 1);

    FMatrix G(form.field, form.dim, form.dim);
    G.a = form.gram;
    const int rank = mat_rank(G);

    // Complement of the radical: extend a basis of rad Q by standard basis
    // vectors; the form induced on the quotient is represented there.
    FMatrix rad = left_kernel(G);
    FMatrix span = rad;
    std::vector<int> comp;
    for (int c = 0; c < form.dim && static_cast<int>(comp.size()) < rank; ++c) {
        FMatrix ext(form.field, span.rows + 1, form.dim);
        ext.a = span.a;
        std::vector<uint32_t> unit(form.dim, 0);
        unit[c] = 1;
        ext.a.insert(ext.a.end(), unit.begin(), unit.end());
        if (mat_rank(ext) > span.rows) {
            comp.push_back(c);
            span = rref(ext);
        }
    }

    int chi_q = 1;  // chi(0) = 1 for the zero form
    if (rank > 0) {
        FMatrix Gq(form.field, rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                Gq.at(i, j) = G.at(comp[i], comp[j]);
        chi_q = F.chi(mat_det(Gq));
    }

    long q_power = 1;
    for (int i = 0; i < form.dim - rank; ++i) q_power *= F.q();

    uint32_t psi_arg = 0;
    if (!form.linear.empty()) {
        // l must vanish on rad Q; otherwise the sum is 0.
        for (int i = 0; i < rad.rows; ++i) {
            uint32_t v = 0;
            for (int j = 0; j < form.dim; ++j)
                v = F.add(v, F.mul(rad.at(i, j), form.linear[j]));
            if (v) return CycNumber(p);
        }
        // Solve l(x) = 2 B(x, y0), i.e. y0 * G = l/2 (G is the polarization).
        std::vector<uint32_t> half_l(form.dim);
        for (int j = 0; j < form.dim; ++j) half_l[j] = F.half(form.linear[j]);
        std::vector<uint32_t> y0;
        if (!solve_left(mat_transpose(G), half_l, y0))
            throw std::logic_error("affine part inconsistent despite vanishing on radical");
        psi_arg = F.neg(form.eval_quadratic(y0));
    }

    CycNumber result = psi(F, psi_arg) * rho(F).pow(rank) * mpq_class(q_power);
    if (chi_q < 0) result = -result;
    return result;
}

}  // namespace weil
