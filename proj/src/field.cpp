#include "permcodes/field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

// Extension fields are table-backed; this keeps the tables at a few MB.
constexpr std::uint32_t kMaxExtensionOrder = 1024;

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
    std::vector<std::uint32_t> out(len, 0);
    for (std::uint32_t i = 0; i < len && code; ++i) {
        out[i] = code % p;
        code /= p;
    }
    return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t code = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
    return code;
}

// Remainder of a modulo a monic b over GF(p); both constant-first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = static_cast<std::uint32_t>(
                    (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    std::uint64_t p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) return true; // n itself is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

PrimePower factor_prime_power(std::int64_t q) {
    if (q < 2 || q > std::numeric_limits<std::uint32_t>::max()) throw NotAPrimePower(q);
    auto n = static_cast<std::uint64_t>(q);
    std::uint64_t p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n;
    std::uint32_t m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    if (n != 1) throw NotAPrimePower(q);
    return {static_cast<std::uint32_t>(p), m, static_cast<std::uint32_t>(q)};
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) n = 2;
    while (!is_prime(n)) ++n;
    return n;
}

std::uint64_t next_prime_power(std::uint64_t n) {
    if (n < 2) n = 2;
    while (!is_prime_power(n)) ++n;
    return n;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
    if (deg == 1) return true;
    // Any factorization has a monic factor of degree <= deg/2.
    for (std::uint32_t fd = 1; fd <= deg / 2; ++fd) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < fd; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            auto divisor = digits(static_cast<std::uint32_t>(low), p, fd);
            divisor.push_back(1);
            auto rem = poly_rem(poly, divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

GaloisField::GaloisField(std::uint32_t q) : pp_(factor_prime_power(q)) {
    const std::uint32_t p = pp_.p;
    const std::uint32_t m = pp_.m;
    if (m == 1) {
        modulus_ = {0, 1};
        return;
    }
    if (q > kMaxExtensionOrder) {
        throw ParameterError("extension fields are limited to q <= " +
                             std::to_string(kMaxExtensionOrder));
    }
    // Scan monic candidates by increasing code of their lower coefficients.
    for (std::uint32_t low = 0; low < q; ++low) {
        auto cand = digits(low, p, m);
        cand.push_back(1);
        if (is_irreducible(cand, p)) {
            modulus_ = std::move(cand);
            break;
        }
    }

    add_table_.resize(static_cast<std::size_t>(q) * q);
    mul_table_.resize(static_cast<std::size_t>(q) * q);
    neg_table_.resize(q);
    inv_table_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        const auto da = digits(a, p, m);
        std::vector<std::uint32_t> dn(m);
        for (std::uint32_t i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
        neg_table_[a] = static_cast<std::uint16_t>(undigits(dn, p));
        for (std::uint32_t b = 0; b < q; ++b) {
            const auto db = digits(b, p, m);
            std::vector<std::uint32_t> ds(m);
            for (std::uint32_t i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
            add_table_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(undigits(ds, p));
            mul_table_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(poly_mul(a, b));
        }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
        for (std::uint32_t b = 1; b < q; ++b) {
            if (mul_table_[static_cast<std::size_t>(a) * q + b] == 1) {
                inv_table_[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
}

GaloisField::Code GaloisField::poly_mul(Code a, Code b) const {
    const std::uint32_t p = pp_.p;
    const std::uint32_t m = pp_.m;
    const auto da = digits(a, p, m);
    const auto db = digits(b, p, m);
    std::vector<std::uint32_t> prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    auto rem = poly_rem(std::move(prod), modulus_, p);
    rem.resize(m, 0);
    return undigits(rem, p);
}

GaloisField::Code GaloisField::add(Code a, Code b) const {
    if (pp_.m == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) + b) % pp_.p);
    return add_table_[static_cast<std::size_t>(a) * pp_.q + b];
}

GaloisField::Code GaloisField::neg(Code a) const {
    if (pp_.m == 1) return a == 0 ? 0 : pp_.p - a;
    return neg_table_[a];
}

GaloisField::Code GaloisField::sub(Code a, Code b) const { return add(a, neg(b)); }

GaloisField::Code GaloisField::mul(Code a, Code b) const {
    if (pp_.m == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % pp_.p);
    return mul_table_[static_cast<std::size_t>(a) * pp_.q + b];
}

GaloisField::Code GaloisField::inv(Code a) const {
    if (a == 0) throw DivisionByZero();
    if (pp_.m > 1) return inv_table_[a];
    // a^(p-2) by Fermat.
    return pow(a, static_cast<std::int64_t>(pp_.p) - 2);
}

GaloisField::Code GaloisField::pow(Code a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Code result = 1;
    Code base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t GaloisField::multiplicative_order(Code a) const {
    if (a == 0) throw DivisionByZero();
    std::uint32_t order = 1;
    for (Code x = a; x != 1; x = mul(x, a)) ++order;
    return order;
}

FieldPtr field_make(std::int64_t q) {
    factor_prime_power(q); // validate before touching the cache
    static std::mutex mutex;
    static std::map<std::int64_t, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) slot = std::make_shared<const GaloisField>(static_cast<std::uint32_t>(q));
    return slot;
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_) throw SpecMismatch("field element without a field");
    if (!field_->contains(code_))
        throw ParameterError("code " + std::to_string(code_) + " outside GF(" +
                             std::to_string(field_->order()) + ")");
}

const GaloisField& FieldElement::same_field(const FieldElement& other) const {
    if (field_ != other.field_ && !(*field_ == *other.field_))
        throw SpecMismatch("elements of different fields");
    return *field_;
}

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.same_field(b).add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.same_field(b).sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.same_field(b).mul(a.code_, b.code_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.same_field(b).div(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.code_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.same_field(b);
    return a.code_ == b.code_;
}

} // namespace permcodes
