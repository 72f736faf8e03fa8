#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permcodes/exact.hpp"
#include "permcodes/linear_code.hpp"
#include "permcodes/permutation.hpp"

namespace permcodes {

/// Syndrome -> permutations of T mapping to it, ordered by syndrome code.
using SyndromeBuckets = std::map<FieldVector, std::vector<Permutation>>;

/// T = union of gamma * sigma over the coset representatives sigma.
std::vector<Permutation> translate_set(std::span<const Permutation> gamma,
                                       std::span<const Permutation> representatives);

/// Groups permutations by phi with respect to the parity check h.
SyndromeBuckets syndrome_buckets(std::span<const Permutation> t, const MatrixGF& h);

struct ConstructionOptions {
    /// Normalize the parity check to an all-ones first row, so the image of
    /// phi sits in the affine slice H_1 and the bound loses one factor of q.
    bool assume_ones_row = true;
    /// Seed for the full-weight dual codeword search.
    std::uint64_t seed = 0;
    /// Cap on n! for the S_n sweep and on |T|.
    std::uint64_t budget = 3'628'800;
    /// Cap on enumeration work for the code itself.
    std::uint64_t code_budget = kDefaultCodeBudget;
    /// Target distance; defaults to the code's verified distance.
    std::optional<std::size_t> target_distance;
};

struct Certificate {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t q = 0;
    std::size_t d = 0;
    std::size_t code_distance = 0;
    std::size_t s = 0;
    std::size_t r = 0;
    BigInt subgroup_order;
    std::size_t gamma_size = 0;
    std::size_t coset_count = 0;
    std::size_t t_size = 0;
    std::size_t bucket_count = 0;
    bool ones_row = true;
    /// Full-weight dual codeword used for the normalization, if any.
    FieldVector dual_codeword;
    std::size_t exponent = 0;
    FieldVector syndrome;
    std::size_t bucket_size = 0;
    /// kInfiniteDistance for a single-member bucket.
    std::size_t verified_distance = 0;
    /// n! |gamma| / (|K| q^exponent), exact.
    Rational bound;
    BigInt guaranteed_floor;
    std::uint64_t seed = 0;
};

struct ConstructionResult {
    PermutationCode code;
    Certificate certificate;
    /// The (possibly normalized) code whose parity check drove phi.
    LinearCode linear_code;
    MatrixGF parity_check;
    SyndromeBuckets buckets;
};

/// Builds T from gamma_prime and the coset representatives of K in S_n,
/// buckets T by phi and returns the largest bucket (ties go to the smallest
/// syndrome) together with a certificate.
///
/// Throws PreconditionViolated when gamma_prime is not inside K or has
/// distance below the target, NotFound when no full-weight dual codeword
/// turns up in ones-row mode, BudgetExceeded, and VerificationFailed if the
/// extracted bucket misses the distance or the pigeonhole floor.
ConstructionResult construct_permutation_code(const LinearCode& code,
                                              const PermutationCode& gamma_prime,
                                              const ConstructionOptions& options = {});

} // namespace permcodes
