#include "weil/field.hpp"

#include <algorithm>
#include <map>

namespace weil {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            a[da - dm + i] = ((a[da - dm + i] - c * m[i]) % p + p * p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

Poly decode_poly(uint32_t v, int p) {
    Poly c;
    while (v) {
        c.push_back(static_cast<int>(v % p));
        v /= p;
    }
    return c;
}

uint32_t encode_poly(const Poly& c, int p) {
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

// Brute factor search: m (monic, degree e) is reducible iff some monic
// polynomial of degree 1..e/2 divides it.
bool is_irreducible(const Poly& m, int p) {
    const int e = static_cast<int>(m.size()) - 1;
    if (e == 1) return true;
    for (int d = 1; d <= e / 2; ++d) {
        uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint32_t lo = 0; lo < count; ++lo) {
            Poly cand = decode_poly(lo, p);
            cand.resize(d + 1, 0);
            cand[d] = 1;
            if (poly_mod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

const std::map<int, std::vector<int>>& default_moduli() {
    static const std::map<int, std::vector<int>> table = {
        {9, {1, 0, 1}},    // x^2 + 1 over GF(3)
        {25, {2, 0, 1}},   // x^2 + 2 over GF(5)
        {27, {1, 2, 0, 1}},  // x^3 + 2x + 1 over GF(3)
        {49, {1, 0, 1}},   // x^2 + 1 over GF(7)
        {121, {1, 0, 1}},  // x^2 + 1 over GF(11)
        {169, {2, 0, 1}},  // x^2 + 2 over GF(13)
    };
    return table;
}

}  // namespace

std::vector<int> irreducible_modulus(int p, int e) {
    uint32_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (uint32_t lo = 0; lo < count; ++lo) {
        Poly m = decode_poly(lo, p);
        m.resize(e + 1, 0);
        m[e] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const FieldDesc> FieldDesc::make(
    int p, int e, std::optional<std::vector<int>> modulus) {
    if (!is_odd_prime(p)) throw std::invalid_argument("unsupported characteristic");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 100000) throw std::invalid_argument("field too large");
    }

    Poly m;
    if (modulus) {
        m = *modulus;
        for (auto& c : m) c = (c % p + p) % p;
        trim(m);
        if (static_cast<int>(m.size()) - 1 != e || m.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree e");
    } else if (e == 1) {
        m = {0, 1};  // x; residues are just GF(p)
    } else {
        auto it = default_moduli().find(static_cast<int>(q));
        if (it == default_moduli().end())
            throw std::invalid_argument("no default modulus for this q");
        m = it->second;
    }
    if (!is_irreducible(m, p)) throw std::invalid_argument("reducible modulus");

    auto desc = std::shared_ptr<FieldDesc>(new FieldDesc());
    desc->p_ = p;
    desc->e_ = e;
    desc->q_ = static_cast<int>(q);
    desc->modulus_ = m;

    const int Q = desc->q_;
    desc->mul_.assign(static_cast<size_t>(Q) * Q, 0);
    for (int a = 0; a < Q; ++a) {
        const Poly pa = decode_poly(a, p);
        for (int b = a; b < Q; ++b) {
            const Poly pb = decode_poly(b, p);
            const uint32_t ab = encode_poly(poly_mulmod(pa, pb, m, p), p);
            desc->mul_[static_cast<size_t>(a) * Q + b] = ab;
            desc->mul_[static_cast<size_t>(b) * Q + a] = ab;
        }
    }

    desc->inv_.assign(Q, 0);
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (desc->mul(a, b) == 1) {
                desc->inv_[a] = b;
                break;
            }

    // tr(a) = a + a^p + ... + a^{q/p}; the result lies in the prime subfield,
    // whose elements encode as integers < p.
    desc->trace_.assign(Q, 0);
    for (int a = 0; a < Q; ++a) {
        uint32_t acc = 0, frob = static_cast<uint32_t>(a);
        for (int i = 0; i < e; ++i) {
            acc = desc->add(acc, frob);
            uint32_t next = frob;
            for (int j = 1; j < p; ++j) next = desc->mul(next, frob);
            frob = next;
        }
        desc->trace_[a] = acc;
    }

    desc->chi_.assign(Q, -1);
    desc->chi_[0] = 0;
    for (int a = 1; a < Q; ++a) desc->chi_[desc->mul(a, a)] = 1;

    desc->delta_ = ((Q - 1) / 2) % 2 == 0 ? 1 : -1;
    desc->half_ = desc->inv_[desc->from_int(2)];
    return desc;
}

uint32_t FieldDesc::add(uint32_t a, uint32_t b) const {
    // coefficient-wise addition of base-p digits
    uint32_t r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t FieldDesc::neg(uint32_t a) const {
    uint32_t r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t FieldDesc::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldDesc::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return inv_[a];
}

uint32_t FieldDesc::pow(uint32_t a, long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    uint32_t r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

uint32_t FieldDesc::from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

int FieldDesc::chi(uint32_t a) const {
    if (a == 0) throw std::domain_error("character undefined at zero");
    return chi_[a];
}

uint32_t FieldDesc::nonsquare() const {
    for (int a = 1; a < q_; ++a)
        if (chi_[a] == -1) return a;
    throw std::logic_error("no nonsquare");  // unreachable for odd q
}

}  // namespace weil
