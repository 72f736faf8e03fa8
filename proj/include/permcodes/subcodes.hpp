#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permcodes/permutation.hpp"

namespace permcodes {

enum class SearchMode { exact, greedy };

/// A largest (exact) or a valid (greedy) code inside K with distance >= d.
/// Exact mode pins the identity, which loses nothing because K is a group
/// and the distance is right-invariant. Throws BudgetExceeded in exact mode
/// when the branch and bound expands more than `budget` nodes.
PermutationCode max_code_in_K(const ResidueSubgroupSpec& spec, std::size_t d, SearchMode mode,
                              std::uint64_t budget = 10'000'000, std::uint64_t seed = 0);

/// Product of the transpositions (2i-1, 2i) with u_i = 1, on 2r points.
Permutation binary_lift(std::span<const std::uint8_t> u);

/// The same map realized inside K for a spec with s = 1: bit i swaps the
/// two points of the i-th two-point residue class, {i, i + q}.
/// Throws SpecMismatch unless s = 1 and u has r entries.
Permutation binary_lift(std::span<const std::uint8_t> u, const ResidueSubgroupSpec& spec);

/// Binary words as bit masks: bit i is coordinate i.
struct BinaryCode {
    std::size_t length = 0;
    std::vector<std::uint32_t> words;
};

std::size_t binary_hamming(std::uint32_t a, std::uint32_t b);

/// Exact A_2(r, d) with a witness containing the zero word.
/// Requires r <= 20; exact search is practical up to roughly r = 12.
BinaryCode max_binary_code(std::size_t r, std::size_t d, std::uint64_t budget = 10'000'000);

/// Exact M(n, d) by clique search over S_n with the identity pinned. n <= 6.
PermutationCode brute_force_M(std::size_t n, std::size_t d, std::uint64_t budget = 10'000'000);

} // namespace permcodes
