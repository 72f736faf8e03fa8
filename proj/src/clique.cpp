#include "permcodes/clique.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "permcodes/errors.hpp"
#include "permcodes/linear_code.hpp"

namespace permcodes {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    void run(std::vector<std::size_t> current, Bits candidates) {
        current_ = std::move(current);
        best_ = current_;
        expand(std::move(candidates));
    }

    std::vector<std::size_t> best() const { return best_; }

private:
    // Greedy colouring of the candidate set; vertices come out ordered by
    // colour class, with colour[i] bounding the clique size among the first i + 1.
    void colour_sort(const Bits& candidates, std::vector<std::size_t>& order,
                     std::vector<std::size_t>& colour) const {
        Bits uncoloured = candidates;
        std::size_t c = 0;
        while (any(uncoloured)) {
            ++c;
            Bits available = uncoloured;
            while (any(available)) {
                std::size_t w = 0;
                while (available[w] == 0) ++w;
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
                available[w] &= available[w] - 1;
                uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                const auto& nb = g_.neighbours(v);
                for (std::size_t i = 0; i < available.size(); ++i) available[i] &= ~nb[i];
                order.push_back(v);
                colour.push_back(c);
            }
        }
    }

    void expand(Bits candidates) {
        if (++nodes_ > budget_)
            throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) + " nodes");
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        colour_sort(candidates, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colour[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bits next(candidates.size());
            const auto& nb = g_.neighbours(v);
            for (std::size_t w = 0; w < next.size(); ++w) next[w] = candidates[w] & nb[w];
            if (any(next)) {
                expand(std::move(next));
            } else if (current_.size() > best_.size()) {
                best_ = current_;
            }
            current_.pop_back();
            candidates[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

} // namespace

Graph::Graph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), adj_(vertices, std::vector<std::uint64_t>(words_, 0)) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) return;
    adj_[a][b >> 6] |= std::uint64_t{1} << (b & 63);
    adj_[b][a >> 6] |= std::uint64_t{1} << (a & 63);
}

std::vector<std::size_t> max_clique(const Graph& g, std::optional<std::size_t> pinned,
                                    std::uint64_t node_budget) {
    if (g.size() == 0) return {};
    CliqueSearch search(g, node_budget);
    Bits candidates(g.words(), 0);
    std::vector<std::size_t> start;
    if (pinned) {
        start.push_back(*pinned);
        candidates = g.neighbours(*pinned);
    } else {
        for (std::size_t v = 0; v < g.size(); ++v) candidates[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    if (any(candidates)) {
        search.run(start, std::move(candidates));
    } else if (start.empty()) {
        return {0};
    } else {
        return start;
    }
    auto best = search.best();
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::size_t> greedy_clique(const Graph& g, std::uint64_t seed) {
    std::vector<std::size_t> order(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(rng, i)]);
    std::vector<std::size_t> clique;
    for (std::size_t v : order) {
        if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

} // namespace permcodes
