#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace permcodes {

/// Undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    explicit Graph(std::size_t vertices);

    std::size_t size() const noexcept { return n_; }
    void add_edge(std::size_t a, std::size_t b);
    bool adjacent(std::size_t a, std::size_t b) const {
        return (adj_[a][b >> 6] >> (b & 63)) & 1U;
    }
    const std::vector<std::uint64_t>& neighbours(std::size_t v) const { return adj_[v]; }
    std::size_t words() const noexcept { return words_; }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> adj_;
};

/// Maximum clique by branch and bound with a greedy-colouring bound.
/// With `pinned`, only cliques containing that vertex are considered.
/// Returns vertices in increasing order. Throws BudgetExceeded when more
/// than `node_budget` search nodes are expanded.
std::vector<std::size_t> max_clique(const Graph& g, std::optional<std::size_t> pinned,
                                    std::uint64_t node_budget);

/// Seeded greedy clique: scan a shuffled vertex order, keep what fits.
std::vector<std::size_t> greedy_clique(const Graph& g, std::uint64_t seed);

} // namespace permcodes
