#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

namespace permcodes {

struct PrimePower {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint32_t q = 2;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Splits q = p^m. Throws NotAPrimePower otherwise.
PrimePower factor_prime_power(std::int64_t q);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);
/// Smallest prime power >= n.
std::uint64_t next_prime_power(std::uint64_t n);

/// GF(p^m) with a fixed modulus polynomial.
///
/// Elements are integer codes in [0, q): the base-p digits of a code are the
/// coefficients of the residue polynomial, constant term first. Code order is
/// the canonical enumeration a_0, ..., a_{q-1} used everywhere downstream, so
/// a_0 is zero and a_1 is one.
///
/// The modulus is the monic irreducible polynomial of degree m whose
/// coefficient list has the smallest base-p code. For m = 1 it is the
/// placeholder x and arithmetic is plain reduction mod p.
class GaloisField {
public:
    using Code = std::uint32_t;

    explicit GaloisField(std::uint32_t q);

    const PrimePower& prime_power() const noexcept { return pp_; }
    std::uint32_t order() const noexcept { return pp_.q; }
    std::uint32_t characteristic() const noexcept { return pp_.p; }
    std::uint32_t degree() const noexcept { return pp_.m; }
    /// Coefficients constant-first, length m + 1, leading entry 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool contains(Code a) const noexcept { return a < pp_.q; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    /// Throws DivisionByZero on zero.
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first.
    Code pow(Code a, std::int64_t e) const;

    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(Code a) const;

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.pp_ == b.pp_ && a.modulus_ == b.modulus_;
    }

private:
    Code poly_mul(Code a, Code b) const;

    PrimePower pp_;
    std::vector<std::uint32_t> modulus_;
    // Only populated for extension fields.
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> inv_table_;
    std::vector<std::uint16_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Deterministic field construction; equal q gives equal fields.
FieldPtr field_make(std::int64_t q);

/// Monic irreducibility over GF(p) for a constant-first coefficient list.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// A value in a specific GaloisField. Mixing fields throws SpecMismatch.
class FieldElement {
public:
    using Code = GaloisField::Code;

    FieldElement(FieldPtr field, Code code);

    const FieldPtr& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
        return os << a.code_;
    }

private:
    const GaloisField& same_field(const FieldElement& other) const;

    FieldPtr field_;
    Code code_;
};

} // namespace permcodes
