#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "permcodes/linear_code.hpp"

namespace permcodes {

/// [n, k]_q Reed-Solomon code: the k x n Vandermonde matrix on the first n
/// canonical elements a_0, ..., a_{n-1}. Requires 0 < k < n <= q.
/// The result is verified MDS and carries its distance.
LinearCode reed_solomon(std::uint32_t q, std::size_t n, std::size_t k,
                        std::uint64_t budget = kDefaultCodeBudget);

/// [q+1, k]_q doubly-extended Reed-Solomon code. The extra column is
/// (0, ..., 0, 1)^T, the coefficient of x^(k-1). Requires 0 < k <= q.
LinearCode extended_rs(std::uint32_t q, std::size_t k, std::uint64_t budget = kDefaultCodeBudget);

bool is_mds(const LinearCode& code, std::uint64_t budget = kDefaultCodeBudget);

/// True iff the dual of the code is MDS.
bool verify_dual_mds(const LinearCode& code, std::uint64_t budget = kDefaultCodeBudget);

/// Number of codewords of each weight 0..n, by enumeration.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               std::uint64_t budget = kDefaultCodeBudget);

/// Set of nonzero weights that occur.
std::set<std::size_t> weight_spectrum_check(const LinearCode& code,
                                            std::uint64_t budget = kDefaultCodeBudget);

} // namespace permcodes
