#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weil {

/// Exact arithmetic in GF(q), q = p^e with p an odd prime.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients of the residue polynomial, lowest degree
/// first.  All arithmetic goes through tables precomputed at construction,
/// so FieldDesc is immutable and cheap to share.
class FieldDesc {
public:
    /// Build a field description.  If `modulus` is omitted, a built-in
    /// default is used (available for all prime q and for
    /// q in {9, 25, 27, 49, 121, 169}).  The modulus is re-verified
    /// irreducible either way.
    ///
    /// Throws std::invalid_argument("unsupported characteristic") if p is
    /// even or composite, and ("reducible modulus") if the modulus factors.
    static std::shared_ptr<const FieldDesc> make(
        int p, int e, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    /// Monic modulus, coefficients c0..ce (ce = 1), reduced mod p.
    const std::vector<int>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, long k) const;

    /// Image of an integer under Z -> GF(p) subset GF(q).
    uint32_t from_int(long v) const;

    /// Absolute trace tr(a) = a + a^p + ... + a^{q/p}, returned as an
    /// integer in [0, p) (an element of the prime subfield).
    uint32_t trace(uint32_t a) const { return trace_[a]; }

    /// Quadratic character: +1 if a is a nonzero square, -1 otherwise.
    /// Throws std::domain_error("character undefined at zero") on a = 0.
    int chi(uint32_t a) const;

    /// delta = chi(-1) = (-1)^((q-1)/2).
    int delta() const { return delta_; }

    /// Smallest nonsquare in encoding order.
    uint32_t nonsquare() const;

    /// Division by the image of 2 (p is odd, so 2 is invertible).
    uint32_t half(uint32_t a) const { return mul(a, half_); }

private:
    FieldDesc() = default;

    int p_ = 0, e_ = 0, q_ = 0;
    int delta_ = 0;
    uint32_t half_ = 0;
    std::vector<int> modulus_;
    std::vector<uint32_t> mul_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> trace_;
    std::vector<int8_t> chi_;
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

/// A field element: an encoded value bound to its field.  Equality is
/// coefficient-wise (encodings are canonical).
class FieldElement {
public:
    FieldElement(FieldPtr f, uint32_t v) : f_(std::move(f)), v_(v) {}

    uint32_t value() const { return v_; }
    const FieldPtr& field() const { return f_; }

    FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, o.v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, o.v_)}; }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement inverse() const { return {f_, f_->inv(v_)}; }
    bool operator==(const FieldElement& o) const { return v_ == o.v_; }
    bool is_zero() const { return v_ == 0; }

private:
    FieldPtr f_;
    uint32_t v_;
};

/// Search for an irreducible monic polynomial of degree e over GF(p),
/// in encoding order.  Used for fields without a built-in default.
std::vector<int> irreducible_modulus(int p, int e);

}  // namespace weil
