#include "permcodes/construction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "permcodes/bounds.hpp"
#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

bool first_row_all_ones(const MatrixGF& h) {
    if (h.rows() == 0) return false;
    const auto row = h.row(0);
    return std::all_of(row.begin(), row.end(), [](Code c) { return c == 1; });
}

} // namespace

std::vector<Permutation> translate_set(std::span<const Permutation> gamma,
                                       std::span<const Permutation> representatives) {
    std::vector<Permutation> t;
    t.reserve(gamma.size() * representatives.size());
    for (const auto& sigma : representatives)
        for (const auto& g : gamma) t.push_back(g * sigma);
    return t;
}

SyndromeBuckets syndrome_buckets(std::span<const Permutation> t, const MatrixGF& h) {
    const GaloisField& f = *h.field();
    const std::uint32_t q = f.order();
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();

    // scaled[i][a] = a * v_i, so phi is a sum of table lookups.
    std::vector<std::vector<FieldVector>> scaled(n, std::vector<FieldVector>(q, FieldVector(m)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::size_t r = 0; r < m; ++r) scaled[i][a][r] = f.mul(a, h.at(r, i));

    SyndromeBuckets buckets;
    FieldVector z(m);
    for (const auto& sigma : t) {
        if (sigma.size() != n) throw DimensionMismatch("permutation length differs from parity check");
        std::fill(z.begin(), z.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& col = scaled[i][static_cast<std::uint32_t>(sigma.images()[i]) % q];
            for (std::size_t r = 0; r < m; ++r) z[r] = f.add(z[r], col[r]);
        }
        buckets[z].push_back(sigma);
    }
    return buckets;
}

ConstructionResult construct_permutation_code(const LinearCode& input,
                                              const PermutationCode& gamma_prime,
                                              const ConstructionOptions& options) {
    const LinearCode code = input.verified(options.code_budget);
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint32_t q = code.q();
    const std::size_t code_d = *code.known_distance();
    const std::size_t d = options.target_distance.value_or(code_d);

    if (d < 2 || d > n) throw PreconditionViolated("target distance must satisfy 1 < d <= n");
    if (code_d < d)
        throw PreconditionViolated("code distance " + std::to_string(code_d) + " is below the target " +
                                   std::to_string(d));

    const auto spec = ResidueSubgroupSpec::make(n, q);
    if (gamma_prime.length() != n) throw PreconditionViolated("gamma' has the wrong length");
    if (gamma_prime.size() == 0) throw PreconditionViolated("gamma' is empty");
    for (const auto& g : gamma_prime.members())
        if (!spec.contains(g)) throw PreconditionViolated("gamma' is not contained in K");
    const std::size_t gamma_d = code_min_distance(gamma_prime);
    if (gamma_d < d)
        throw PreconditionViolated("gamma' has distance " + std::to_string(gamma_d) + " < " +
                                   std::to_string(d));

    const BigInt n_fact = factorial(static_cast<unsigned>(n));
    const BigInt k_order = spec.order();
    if (n_fact > options.budget || n_fact / k_order * gamma_prime.size() > options.budget)
        throw BudgetExceeded("S_" + std::to_string(n) + " sweep exceeds budget " +
                             std::to_string(options.budget));

    Certificate cert;
    cert.n = n;
    cert.k = k;
    cert.q = q;
    cert.d = d;
    cert.code_distance = code_d;
    cert.s = spec.s;
    cert.r = spec.r;
    cert.subgroup_order = k_order;
    cert.gamma_size = gamma_prime.size();
    cert.ones_row = options.assume_ones_row;
    cert.seed = options.seed;

    LinearCode working = code;
    if (options.assume_ones_row) {
        if (!(code.fixed_parity_check() && first_row_all_ones(*code.fixed_parity_check()))) {
            auto w = find_full_weight_dual_codeword(code, options.seed);
            if (!w) throw NotFound("no full-weight dual codeword found; retry without the ones row");
            cert.dual_codeword = *w;
            working = normalize_first_row_ones(code, *w);
        } else {
            cert.dual_codeword = FieldVector(n, 1);
        }
    }
    const MatrixGF h = parity_check(working);
    if (options.assume_ones_row && !first_row_all_ones(h))
        throw VerificationFailed("normalized parity check lacks the all-ones first row");

    const auto reps = coset_representatives(n, q, options.budget);
    if (BigInt(reps.size()) * k_order != n_fact)
        throw VerificationFailed("coset count differs from n!/|K|");
    cert.coset_count = reps.size();

    auto t = translate_set(gamma_prime.members(), reps);
    {
        std::set<Permutation> distinct(t.begin(), t.end());
        if (distinct.size() != gamma_prime.size() * reps.size())
            throw VerificationFailed("translates of gamma' overlap");
    }
    cert.t_size = t.size();

    SyndromeBuckets buckets = syndrome_buckets(t, h);
    cert.bucket_count = buckets.size();
    if (options.assume_ones_row) {
        const Code expected = ones_row_syndrome(n, *code.field());
        for (const auto& [z, members] : buckets)
            if (z.front() != expected) throw VerificationFailed("syndrome outside the ones-row slice");
    }

    auto best = buckets.begin();
    for (auto it = buckets.begin(); it != buckets.end(); ++it)
        if (it->second.size() > best->second.size()) best = it;

    std::vector<Permutation> members = best->second;
    std::sort(members.begin(), members.end());
    PermutationCode result = PermutationCode(n, std::move(members)).verified();

    cert.syndrome = best->first;
    cert.bucket_size = result.size();
    cert.verified_distance = *result.known_distance();
    cert.exponent = options.assume_ones_row ? n - k - 1 : n - k;
    cert.bound = general_firstbound(n, d, q, k, gamma_prime.size(), k_order, options.assume_ones_row).value;
    cert.guaranteed_floor = ceil(cert.bound);

    if (cert.verified_distance < d)
        throw VerificationFailed("extracted bucket has distance " + std::to_string(cert.verified_distance));
    if (BigInt(cert.bucket_size) < cert.guaranteed_floor)
        throw VerificationFailed("largest bucket is below the pigeonhole floor");

    return {std::move(result), std::move(cert), std::move(working), h, std::move(buckets)};
}

} // namespace permcodes
