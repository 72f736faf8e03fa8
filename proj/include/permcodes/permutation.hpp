#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "permcodes/exact.hpp"
#include "permcodes/matrix.hpp"

namespace permcodes {

/// Minimum distance of a code with fewer than two members.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

/// A bijection of {1, ..., n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws ParameterError unless `images` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    /// Image of the 1-based point i.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;

    /// Function composition: (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

private:
    std::vector<int> images_;
};

/// Number of points where the two permutations disagree.
std::size_t perm_hamming(const Permutation& a, const Permutation& b);

/// Exact pairwise minimum; kInfiniteDistance for fewer than two members.
/// Repeated members give distance 0.
std::size_t min_pairwise_distance(std::span<const Permutation> members);

/// A set of distinct permutations of one length.
class PermutationCode {
public:
    explicit PermutationCode(std::size_t n, std::vector<Permutation> members = {});

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Permutation>& members() const noexcept { return members_; }
    bool contains(const Permutation& p) const;

    std::optional<std::size_t> known_distance() const noexcept { return distance_; }
    /// Copy with the exact minimum distance cached.
    PermutationCode verified() const;

private:
    std::size_t n_;
    std::vector<Permutation> members_;
    std::optional<std::size_t> distance_;
};

std::size_t code_min_distance(const PermutationCode& code);

/// The subgroup of S_n of permutations with sigma(i) = i (mod q), written
/// through n = q s + r with 0 <= r < q. It is the direct product of the
/// symmetric groups on the residue classes: r classes of size s + 1 and
/// q - r of size s.
struct ResidueSubgroupSpec {
    std::size_t n = 0;
    std::size_t q = 0;
    std::size_t s = 0;
    std::size_t r = 0;

    static ResidueSubgroupSpec make(std::size_t n, std::size_t q);

    /// (s+1)!^r s!^(q-r)
    BigInt order() const;
    /// Points of {1..n} grouped by residue mod q; only nonempty classes,
    /// ordered by their smallest point.
    std::vector<std::vector<int>> classes() const;
    bool contains(const Permutation& p) const;
};

/// All elements of K in lexicographic one-line order.
/// Throws BudgetExceeded when |K| > budget.
PermutationCode subgroup_K(const ResidueSubgroupSpec& spec, std::uint64_t budget = 100'000);

/// One representative per right coset K sigma: the lexicographically first
/// permutation with each residue vector i -> sigma(i) mod q.
/// Throws BudgetExceeded when n! > budget.
std::vector<Permutation> coset_representatives(std::size_t n, std::size_t q,
                                               std::uint64_t budget = 3'628'800);

/// i -> a_(i mod q), the canonical element with that code.
FieldElement L_map(std::size_t i, const FieldPtr& field);

/// Syndrome sum_i L(sigma(i)) v_i where v_i is column i of h.
FieldVector phi(const Permutation& sigma, const MatrixGF& h);

/// sum_i L(i): the first syndrome coordinate of every permutation when the
/// first row of the parity check is all ones.
Code ones_row_syndrome(std::size_t n, const GaloisField& field);

} // namespace permcodes
