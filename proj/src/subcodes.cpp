#include "permcodes/subcodes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "permcodes/clique.hpp"
#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

// Graph on a vertex list with edges between members at distance >= d.
Graph distance_graph(std::span<const Permutation> vertices, std::size_t d) {
    Graph g(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (perm_hamming(vertices[a], vertices[b]) >= d) g.add_edge(a, b);
    return g;
}

constexpr std::size_t kMaxGraphVertices = 20'000;

} // namespace

PermutationCode max_code_in_K(const ResidueSubgroupSpec& spec, std::size_t d, SearchMode mode,
                              std::uint64_t budget, std::uint64_t seed) {
    const PermutationCode k = subgroup_K(spec, kMaxGraphVertices);
    const auto& members = k.members();
    const Graph g = distance_graph(members, d);

    std::vector<std::size_t> chosen;
    if (mode == SearchMode::exact) {
        // Members are sorted, so the identity comes first.
        chosen = max_clique(g, std::size_t{0}, budget);
    } else {
        chosen = greedy_clique(g, seed);
    }
    std::vector<Permutation> out;
    for (std::size_t v : chosen) out.push_back(members[v]);
    return PermutationCode(spec.n, std::move(out)).verified();
}

Permutation binary_lift(std::span<const std::uint8_t> u) {
    std::vector<int> images(2 * u.size());
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i]) std::swap(images[2 * i], images[2 * i + 1]);
    return Permutation(std::move(images));
}

Permutation binary_lift(std::span<const std::uint8_t> u, const ResidueSubgroupSpec& spec) {
    if (spec.s != 1) throw SpecMismatch("binary lift needs s = 1 (K a product of S_2 factors)");
    if (u.size() != spec.r)
        throw SpecMismatch("binary lift needs " + std::to_string(spec.r) + " bits, got " +
                           std::to_string(u.size()));
    std::vector<int> images(spec.n);
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i]) std::swap(images[i], images[i + spec.q]);
    return Permutation(std::move(images));
}

std::size_t binary_hamming(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::size_t>(std::popcount(a ^ b));
}

BinaryCode max_binary_code(std::size_t r, std::size_t d, std::uint64_t budget) {
    if (r == 0 || r > 20) throw ParameterError("binary code length must be in 1..20");
    const std::size_t count = std::size_t{1} << r;
    BinaryCode out{r, {}};
    if (d <= 1) {
        out.words.resize(count);
        std::iota(out.words.begin(), out.words.end(), 0U);
        return out;
    }
    if (count > kMaxGraphVertices) throw BudgetExceeded("2^r vertices exceed the graph limit");
    Graph g(count);
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = a + 1; b < count; ++b)
            if (binary_hamming(a, b) >= d) g.add_edge(a, b);
    for (std::size_t v : max_clique(g, std::size_t{0}, budget)) out.words.push_back(static_cast<std::uint32_t>(v));
    return out;
}

PermutationCode brute_force_M(std::size_t n, std::size_t d, std::uint64_t budget) {
    if (n == 0) throw ParameterError("permutation length must be positive");
    if (n > 6) throw BudgetExceeded("brute force M(n, d) is limited to n <= 6");
    std::vector<Permutation> all;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        all.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    const Graph g = distance_graph(all, d);
    std::vector<Permutation> out;
    for (std::size_t v : max_clique(g, std::size_t{0}, budget)) out.push_back(all[v]);
    return PermutationCode(n, std::move(out)).verified();
}

} // namespace permcodes
