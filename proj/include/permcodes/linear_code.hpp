#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "permcodes/matrix.hpp"

namespace permcodes {

inline constexpr std::uint64_t kDefaultCodeBudget = 10'000'000;

/// q^k saturated at UINT64_MAX.
std::uint64_t count_vectors(std::uint32_t q, std::size_t k);

std::size_t hamming_weight(std::span<const Code> v);

struct CodeSummary {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    /// n - k + 1 - d
    std::size_t defect = 0;
};

/// An [n, k]_q linear code held by a full-rank generator matrix, 0 < k < n.
///
/// The minimum distance is cached only by operations that computed or
/// proved it; a cached value is always exact.
class LinearCode {
public:
    explicit LinearCode(MatrixGF generator);
    /// Also fixes the parity check matrix returned by parity_check().
    LinearCode(MatrixGF generator, MatrixGF parity_check);

    const FieldPtr& field() const noexcept { return generator_.field(); }
    std::uint32_t q() const noexcept { return field()->order(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const MatrixGF& generator() const noexcept { return generator_; }
    const std::optional<MatrixGF>& fixed_parity_check() const noexcept { return parity_; }
    std::optional<std::size_t> known_distance() const noexcept { return distance_; }

    /// Copy with the exact minimum distance cached, via enumeration of
    /// q^k messages or, if cheaper, column-independence of the parity check.
    LinearCode verified(std::uint64_t budget = kDefaultCodeBudget) const;

    /// G * w^T == 0.
    bool is_orthogonal(std::span<const Code> w) const;

private:
    friend LinearCode normalize_first_row_ones(const LinearCode&, std::span<const Code>);

    MatrixGF generator_;
    std::optional<MatrixGF> parity_;
    std::optional<std::size_t> distance_;
};

/// Calls fn(codeword, message) for all q^k messages, zero message first.
/// Stops early when fn returns false.
template <class Fn>
void for_each_codeword(const MatrixGF& g, Fn&& fn) {
    const GaloisField& f = *g.field();
    const std::uint32_t q = f.order();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();

    // step[j][a] moves digit j from a to a + 1; step[j][q-1] wraps it to 0.
    std::vector<std::vector<FieldVector>> step(k, std::vector<FieldVector>(q, FieldVector(n)));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::uint32_t a = 0; a < q; ++a) {
            const Code next = (a + 1 == q) ? 0 : a + 1;
            const Code coeff = f.sub(next, a);
            for (std::size_t c = 0; c < n; ++c) step[j][a][c] = f.mul(coeff, g.at(j, c));
        }
    }

    FieldVector word(n, 0);
    FieldVector message(k, 0);
    while (true) {
        if (!fn(std::span<const Code>(word), std::span<const Code>(message))) return;
        std::size_t j = 0;
        for (; j < k; ++j) {
            const Code a = message[j];
            const auto& delta = step[j][a];
            for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], delta[c]);
            message[j] = (a + 1 == q) ? 0 : a + 1;
            if (message[j] != 0) break;
        }
        if (j == k) return;
    }
}

/// (n-k) x n matrix whose kernel is the code.
MatrixGF parity_check(const LinearCode& code);

/// The [n, n-k] dual; its fixed parity check is the original generator.
LinearCode dual(const LinearCode& code);

/// Exact minimum distance by enumerating all q^k messages.
/// Throws BudgetExceeded when q^k > budget.
std::size_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultCodeBudget);

/// Exact minimum distance of the code checked by h: the size of the
/// smallest linearly dependent column subset. Work is bounded by the number
/// of subsets tried.
std::size_t min_distance_by_columns(const MatrixGF& h, std::uint64_t budget = kDefaultCodeBudget);

/// True iff every t columns of h are linearly independent.
/// False whenever t exceeds the number of rows.
bool check_columns_independent(const MatrixGF& h, std::size_t t);

/// Equivalent code whose fixed parity check has first row (1, ..., 1),
/// obtained as H' = H * diag(w)^-1 where w is a full-weight dual codeword.
/// Throws NotFullWeight or NotInDual.
LinearCode normalize_first_row_ones(const LinearCode& code, std::span<const Code> w);

/// A dual codeword with every coordinate nonzero, if one is found.
///
/// When k <= q - 2 and d >= 2, samples m in (F_q^*)^(n-k) and forms
/// m (A^T | -I) from a systematic generator (I | A), up to `budget` tries.
/// Otherwise, or if sampling fails, enumerates the dual when q^(n-k) <= budget.
std::optional<FieldVector> find_full_weight_dual_codeword(const LinearCode& code,
                                                          std::uint64_t seed,
                                                          std::uint64_t budget = 100'000);

/// Samples generators (I_k | A) and keeps the first with distance >= d.
/// The returned code has its exact distance cached.
std::optional<LinearCode> random_code_search(std::size_t n, std::size_t k, std::size_t d,
                                             std::uint32_t q, std::uint64_t seed,
                                             std::uint64_t trials,
                                             std::uint64_t budget = kDefaultCodeBudget);

/// n - k + 1 - d. Requires a cached distance.
std::size_t singleton_defect(const LinearCode& code);

CodeSummary summarize(const LinearCode& code);

/// Unbiased draw from [0, bound) using the raw engine output, so results do
/// not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

} // namespace permcodes
