#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "permcodes/exact.hpp"

namespace permcodes {

/// An exact bound and its integer rounding: ceiling for lower bounds,
/// floor for upper bounds, since M(n, d) is an integer.
struct BoundValue {
    Rational value;
    BigInt rounded;
};

/// A bound that may not apply to the requested parameters.
struct BoundCell {
    std::optional<BoundValue> bound;
    /// Why the bound does not apply; empty when it does.
    std::string reason;

    bool applicable() const noexcept { return bound.has_value(); }
};

/// D_r by D_r = (r-1)(D_{r-1} + D_{r-2}), D_0 = 1, D_1 = 0.
BigInt derangement(unsigned r);
/// r! * sum_{i<=r} (-1)^i / i!, evaluated exactly.
Rational derangement_series(unsigned r);

/// n! / sum_{i<d} C(n,i) D_i. Requires 1 <= d <= n.
BoundValue gv_lower(std::size_t n, std::size_t d);
/// n! / sum_{i<=(d-1)/2} C(n,i) D_i. Requires 1 <= d <= n.
BoundValue sphere_packing_upper(std::size_t n, std::size_t d);
/// n! / (d-1)!. Requires 1 <= d <= n.
BoundValue singleton_like_upper(std::size_t n, std::size_t d);

/// n! / p^(d-2) with p the smallest prime >= n. Requires 2 < d <= n.
BoundValue old_prime_lower(std::size_t n, std::size_t d);
/// n! / q^(d-2) with q the smallest prime power >= n. Requires 2 < d < n.
BoundValue mds_lower(std::size_t n, std::size_t d);
/// (q+1)! / (2 q^(d-2)) with q = n - 1. Applies when n - 1 is a prime power
/// and 3 < d < n - 1.
BoundCell mds_plus1_lower(std::size_t n, std::size_t d);

struct AmdsBound {
    BoundValue bound;
    /// d >= 2 and n <= min(2q, q + d - 2): a full-weight dual codeword is
    /// then automatic, so only the AMDS code itself has to exist.
    bool dual_weight_automatic = false;
};

/// n! A_2(n-q, ceil(d/2)) / (2^(n-q) q^(d-1)) with the A_2 value supplied.
/// Lifted binary codes double their distance, so odd d needs binary
/// distance (d+1)/2; for even d this is the usual floor(d/2).
/// Requires q a prime power, q < n <= 2q and d <= n. Valid whenever an
/// [n, n-d, d]_q AMDS code with a full-weight dual codeword exists.
AmdsBound amds_lower(std::size_t n, std::size_t d, std::uint32_t q, const BigInt& a2_value);

/// n! |gamma| / (|K| q^(n-k-1)) with the ones row, q^(n-k) without.
/// k_order must equal (s+1)!^r s!^(q-r) for n = q s + r.
BoundValue general_firstbound(std::size_t n, std::size_t d, std::uint32_t q, std::size_t k,
                              const BigInt& gamma_size, const BigInt& k_order, bool ones_row);

struct NewOldRatio {
    /// B_new / B_old = p^(d-2) / (2 (n-1)^(d-2)).
    Rational ratio;
    /// (1/2) (1 + 1/(n-1))^(d-2), which the ratio never drops below.
    Rational envelope;
};

/// Throws PreconditionViolated unless both bounds apply.
NewOldRatio ratio_new_old(std::size_t n, std::size_t d);

/// B_amds / B_old at n = alpha q, d = b n with A_2(n-q, ceil(d/2)) supplied.
/// Requires integral n and d, 1 < alpha <= 2 and 0 < b < 1.
Rational ratio_amds_old(std::uint32_t q, const Rational& alpha, const Rational& b,
                        const BigInt& a2_value);

/// Whether b > (alpha - 1) / (alpha log2 alpha), decided exactly through
/// alpha^(alpha b) > 2^(alpha - 1) after clearing denominators.
bool amds_regime_holds(const Rational& alpha, const Rational& b);

/// Partial sum of exp(x) through x^terms/terms!; a lower bound for x >= 0.
Rational exp_partial_sum(const Rational& x, unsigned terms);

struct BoundReport {
    std::size_t n = 0;
    std::size_t d = 0;
    BoundCell gv;
    BoundCell sphere;
    BoundCell singleton;
    BoundCell old_bound;
    BoundCell mds;
    BoundCell mds_plus1;
};

/// Every closed-form bound for (n, d); inapplicable cells carry a reason.
BoundReport bound_report(std::size_t n, std::size_t d);

} // namespace permcodes
