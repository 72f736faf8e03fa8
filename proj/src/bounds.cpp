#include "permcodes/bounds.hpp"

#include <string>

#include "permcodes/errors.hpp"
#include "permcodes/field.hpp"

namespace permcodes {

namespace {

void require_distance(std::size_t n, std::size_t d) {
    if (d < 1 || d > n)
        throw PreconditionViolated("need 1 <= d <= n, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
}

BoundValue lower(Rational v) {
    BigInt r = ceil(v);
    return {std::move(v), std::move(r)};
}

BoundValue upper(Rational v) {
    BigInt r = floor(v);
    return {std::move(v), std::move(r)};
}

BigInt derangement_ball(std::size_t n, std::size_t radius) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= radius && i <= n; ++i)
        sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * derangement(static_cast<unsigned>(i));
    return sum;
}

template <class Fn>
BoundCell guarded(Fn&& fn) {
    try {
        return {fn(), {}};
    } catch (const PreconditionViolated& e) {
        return {std::nullopt, e.what()};
    }
}

} // namespace

BigInt derangement(unsigned r) {
    if (r == 0) return 1;
    BigInt prev2 = 1; // D_0
    BigInt prev1 = 0; // D_1
    for (unsigned i = 2; i <= r; ++i) {
        BigInt next = BigInt(i - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

Rational derangement_series(unsigned r) {
    Rational sum = 0;
    for (unsigned i = 0; i <= r; ++i) {
        const Rational term(BigInt(1), factorial(i));
        sum += (i % 2 == 0) ? term : Rational(-term);
    }
    return Rational(factorial(r)) * sum;
}

BoundValue gv_lower(std::size_t n, std::size_t d) {
    require_distance(n, d);
    return lower(make_rational(factorial(static_cast<unsigned>(n)), derangement_ball(n, d - 1)));
}

BoundValue sphere_packing_upper(std::size_t n, std::size_t d) {
    require_distance(n, d);
    return upper(make_rational(factorial(static_cast<unsigned>(n)), derangement_ball(n, (d - 1) / 2)));
}

BoundValue singleton_like_upper(std::size_t n, std::size_t d) {
    require_distance(n, d);
    return upper(make_rational(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(d - 1))));
}

BoundValue old_prime_lower(std::size_t n, std::size_t d) {
    if (d <= 2 || d > n) throw PreconditionViolated("prime bound needs 2 < d <= n");
    const BigInt p = next_prime(n);
    return lower(make_rational(factorial(static_cast<unsigned>(n)), ipow(p, static_cast<unsigned>(d - 2))));
}

BoundValue mds_lower(std::size_t n, std::size_t d) {
    if (d <= 2 || d >= n) throw PreconditionViolated("MDS bound needs 2 < d < n");
    const BigInt q = next_prime_power(n);
    return lower(make_rational(factorial(static_cast<unsigned>(n)), ipow(q, static_cast<unsigned>(d - 2))));
}

BoundCell mds_plus1_lower(std::size_t n, std::size_t d) {
    if (n < 3 || !is_prime_power(n - 1))
        return {std::nullopt, std::to_string(n >= 1 ? n - 1 : 0) + " is not a prime power"};
    const std::size_t q = n - 1;
    if (d <= 3 || d >= q) return {std::nullopt, "needs 3 < d < n - 1"};
    return {lower(make_rational(factorial(static_cast<unsigned>(n)),
                                2 * ipow(BigInt(q), static_cast<unsigned>(d - 2)))),
            {}};
}

AmdsBound amds_lower(std::size_t n, std::size_t d, std::uint32_t q, const BigInt& a2_value) {
    if (!is_prime_power(q)) throw PreconditionViolated(std::to_string(q) + " is not a prime power");
    if (!(q < n && n <= 2 * static_cast<std::size_t>(q))) throw PreconditionViolated("AMDS bound needs q < n <= 2q");
    require_distance(n, d);
    if (a2_value < 1) throw PreconditionViolated("A_2 value must be positive");
    const std::size_t extra = n - q;
    const Rational v = make_rational(factorial(static_cast<unsigned>(n)) * a2_value,
                                     ipow(BigInt(2), static_cast<unsigned>(extra)) *
                                         ipow(BigInt(q), static_cast<unsigned>(d - 1)));
    AmdsBound out{lower(v), false};
    out.dual_weight_automatic = d >= 2 && n <= std::min<std::size_t>(2 * q, q + d - 2);
    return out;
}

BoundValue general_firstbound(std::size_t n, std::size_t d, std::uint32_t q, std::size_t k,
                              const BigInt& gamma_size, const BigInt& k_order, bool ones_row) {
    if (!is_prime_power(q)) throw PreconditionViolated(std::to_string(q) + " is not a prime power");
    if (k == 0 || k >= n) throw PreconditionViolated("needs 0 < k < n");
    if (d < 2 || d > n) throw PreconditionViolated("needs 1 < d <= n");
    const std::size_t s = n / q;
    const std::size_t r = n % q;
    const BigInt expected = ipow(factorial(static_cast<unsigned>(s + 1)), static_cast<unsigned>(r)) *
                            ipow(factorial(static_cast<unsigned>(s)), static_cast<unsigned>(q - r));
    if (k_order != expected)
        throw PreconditionViolated("|K| must be " + expected.str() + " for n=" + std::to_string(n) +
                                   ", q=" + std::to_string(q));
    if (gamma_size < 1) throw PreconditionViolated("gamma' must be nonempty");
    const std::size_t exponent = ones_row ? n - k - 1 : n - k;
    return lower(make_rational(factorial(static_cast<unsigned>(n)) * gamma_size,
                               k_order * ipow(BigInt(q), static_cast<unsigned>(exponent))));
}

NewOldRatio ratio_new_old(std::size_t n, std::size_t d) {
    const BoundCell fresh = mds_plus1_lower(n, d);
    if (!fresh.applicable()) throw PreconditionViolated("B_new does not apply: " + fresh.reason);
    const BoundValue old = old_prime_lower(n, d);
    const auto e = static_cast<unsigned>(d - 2);
    return {fresh.bound->value / old.value,
            Rational(1, 2) * make_rational(ipow(BigInt(n), e), ipow(BigInt(n - 1), e))};
}

Rational ratio_amds_old(std::uint32_t q, const Rational& alpha, const Rational& b, const BigInt& a2_value) {
    if (!(alpha > 1 && alpha <= 2)) throw PreconditionViolated("needs 1 < alpha <= 2");
    if (!(b > 0 && b < 1)) throw PreconditionViolated("needs 0 < b < 1");
    const Rational n_exact = alpha * q;
    if (boost::multiprecision::denominator(n_exact) != 1) throw PreconditionViolated("alpha q is not an integer");
    const Rational d_exact = b * n_exact;
    if (boost::multiprecision::denominator(d_exact) != 1) throw PreconditionViolated("b n is not an integer");
    const auto n = static_cast<std::size_t>(boost::multiprecision::numerator(n_exact));
    const auto d = static_cast<std::size_t>(boost::multiprecision::numerator(d_exact));
    return amds_lower(n, d, q, a2_value).bound.value / old_prime_lower(n, d).value;
}

bool amds_regime_holds(const Rational& alpha, const Rational& b) {
    if (!(alpha > 1)) throw PreconditionViolated("needs alpha > 1");
    // b alpha log2(alpha) > alpha - 1  <=>  alpha^(alpha b) > 2^(alpha - 1).
    const Rational lhs_exp = alpha * b;
    const Rational rhs_exp = alpha - 1;
    const BigInt scale = boost::multiprecision::denominator(lhs_exp) * boost::multiprecision::denominator(rhs_exp);
    const BigInt e1 = boost::multiprecision::numerator(Rational(lhs_exp * scale));
    const BigInt e2 = boost::multiprecision::numerator(Rational(rhs_exp * scale));
    if (e1 < 0 || e2 < 0) return false;
    const auto u1 = static_cast<unsigned>(e1);
    const auto u2 = static_cast<unsigned>(e2);
    const BigInt a = boost::multiprecision::numerator(alpha);
    const BigInt c = boost::multiprecision::denominator(alpha);
    return ipow(a, u1) > ipow(BigInt(2), u2) * ipow(c, u1);
}

Rational exp_partial_sum(const Rational& x, unsigned terms) {
    Rational sum = 0;
    Rational term = 1;
    for (unsigned i = 0; i <= terms; ++i) {
        sum += term;
        term = term * x / (i + 1);
    }
    return sum;
}

BoundReport bound_report(std::size_t n, std::size_t d) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.gv = guarded([&] { return gv_lower(n, d); });
    rep.sphere = guarded([&] { return sphere_packing_upper(n, d); });
    rep.singleton = guarded([&] { return singleton_like_upper(n, d); });
    rep.old_bound = guarded([&] { return old_prime_lower(n, d); });
    rep.mds = guarded([&] { return mds_lower(n, d); });
    rep.mds_plus1 = mds_plus1_lower(n, d);
    return rep;
}

} // namespace permcodes
