#include "permcodes/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

// Visits every t-subset of {0..n-1} in lexicographic order until fn returns false.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t t, Fn&& fn) {
    if (t > n) return;
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(std::span<const std::size_t>(idx))) return;
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t saturating_binomial(std::size_t n, std::size_t t) {
    long double v = 1;
    for (std::size_t i = 1; i <= t; ++i) v = v * static_cast<long double>(n - t + i) / i;
    if (v >= 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v + 0.5L);
}

} // namespace

std::uint64_t count_vectors(std::uint32_t q, std::size_t k) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / q)
            return std::numeric_limits<std::uint64_t>::max();
        out *= q;
    }
    return out;
}

std::size_t hamming_weight(std::span<const Code> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Code c) { return c != 0; }));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

LinearCode::LinearCode(MatrixGF generator) : generator_(std::move(generator)) {
    const std::size_t k = generator_.rows();
    const std::size_t n = generator_.cols();
    if (k == 0 || k >= n)
        throw ParameterError("linear code needs 0 < k < n, got k=" + std::to_string(k) +
                             ", n=" + std::to_string(n));
    if (rank(generator_) != k) throw ParameterError("generator matrix is not full rank");
}

LinearCode::LinearCode(MatrixGF generator, MatrixGF parity_check)
    : LinearCode(std::move(generator)) {
    const std::size_t n = length();
    const std::size_t k = dimension();
    if (!(*parity_check.field() == *field())) throw SpecMismatch("parity check over another field");
    if (parity_check.rows() != n - k || parity_check.cols() != n)
        throw DimensionMismatch("parity check must be (n-k) x n");
    if (rank(parity_check) != n - k) throw ParameterError("parity check is not full rank");
    if (!(generator_ * parity_check.transpose()).is_zero())
        throw ParameterError("parity check does not annihilate the code");
    parity_ = std::move(parity_check);
}

bool LinearCode::is_orthogonal(std::span<const Code> w) const {
    if (w.size() != length()) throw LengthMismatch("vector length differs from code length");
    const FieldVector s = generator_.apply(w);
    return std::all_of(s.begin(), s.end(), [](Code c) { return c == 0; });
}

LinearCode LinearCode::verified(std::uint64_t budget) const {
    if (distance_) return *this;
    const std::uint64_t by_enumeration = count_vectors(q(), dimension());
    std::uint64_t by_columns = 0;
    for (std::size_t t = 1; t <= length() - dimension() + 1; ++t) {
        const auto c = saturating_binomial(length(), t);
        by_columns = (by_columns > std::numeric_limits<std::uint64_t>::max() - c)
                         ? std::numeric_limits<std::uint64_t>::max()
                         : by_columns + c;
    }
    LinearCode out = *this;
    if (by_enumeration <= budget && by_enumeration <= by_columns) {
        out.distance_ = min_distance(*this, budget);
    } else {
        out.distance_ = min_distance_by_columns(parity_check(*this), budget);
    }
    return out;
}

MatrixGF parity_check(const LinearCode& code) {
    if (code.fixed_parity_check()) return *code.fixed_parity_check();
    const RowEchelon e = rref(code.generator());
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const GaloisField& f = *code.field();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    MatrixGF h(code.field(), n - k, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        h.set(row, c, 1);
        for (std::size_t i = 0; i < k; ++i) h.set(row, e.pivots[i], f.neg(e.reduced.at(i, c)));
        ++row;
    }
    return h;
}

LinearCode dual(const LinearCode& code) {
    return LinearCode(parity_check(code), code.generator());
}

std::size_t min_distance(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t total = count_vectors(code.q(), code.dimension());
    if (total > budget)
        throw BudgetExceeded("minimum distance needs " + std::to_string(code.q()) + "^" +
                             std::to_string(code.dimension()) + " codewords, budget " +
                             std::to_string(budget));
    std::size_t best = code.length();
    bool first = true;
    for_each_codeword(code.generator(), [&](std::span<const Code> word, std::span<const Code>) {
        if (first) { // zero message
            first = false;
            return true;
        }
        best = std::min(best, hamming_weight(word));
        return best > 1;
    });
    return best;
}

std::size_t min_distance_by_columns(const MatrixGF& h, std::uint64_t budget) {
    std::uint64_t work = 0;
    for (std::size_t t = 1; t <= h.rows() + 1 && t <= h.cols(); ++t) {
        bool dependent = false;
        for_each_combination(h.cols(), t, [&](std::span<const std::size_t> cols) {
            if (++work > budget)
                throw BudgetExceeded("column-rank distance search exceeded budget " +
                                     std::to_string(budget));
            dependent = rank(h.select_columns(cols)) < t;
            return !dependent;
        });
        if (dependent) return t;
    }
    // Unreachable for a proper parity check: rows + 1 columns are always dependent.
    return h.rows() + 1;
}

bool check_columns_independent(const MatrixGF& h, std::size_t t) {
    if (t == 0) return true;
    if (t > h.cols()) throw ParameterError("cannot choose more columns than the matrix has");
    if (t > h.rows()) return false;
    bool ok = true;
    for_each_combination(h.cols(), t, [&](std::span<const std::size_t> cols) {
        ok = rank(h.select_columns(cols)) == t;
        return ok;
    });
    return ok;
}

LinearCode normalize_first_row_ones(const LinearCode& code, std::span<const Code> w) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (w.size() != n) throw LengthMismatch("dual codeword length differs from code length");
    if (hamming_weight(w) != n) throw NotFullWeight("dual codeword has a zero coordinate");
    if (!code.is_orthogonal(w)) throw NotInDual("vector is not orthogonal to the code");

    const GaloisField& f = *code.field();
    const MatrixGF h = parity_check(code);

    // Basis of the dual whose first row is w.
    std::vector<FieldVector> basis{FieldVector(w.begin(), w.end())};
    for (std::size_t r = 0; r < h.rows() && basis.size() < n - k; ++r) {
        basis.emplace_back(h.row(r).begin(), h.row(r).end());
        if (rank(MatrixGF::from_rows(code.field(), basis)) != basis.size()) basis.pop_back();
    }

    // H' = H diag(w)^-1 and G' = G diag(w) keep H' G'^T = H G^T = 0.
    MatrixGF h_prime = MatrixGF::from_rows(code.field(), basis);
    MatrixGF g_prime = code.generator();
    for (std::size_t c = 0; c < n; ++c) {
        const Code scale_h = f.inv(w[c]);
        for (std::size_t r = 0; r < h_prime.rows(); ++r) h_prime.set(r, c, f.mul(h_prime.at(r, c), scale_h));
        for (std::size_t r = 0; r < g_prime.rows(); ++r) g_prime.set(r, c, f.mul(g_prime.at(r, c), w[c]));
    }
    LinearCode out(std::move(g_prime), std::move(h_prime));
    // Monomial equivalence preserves weights.
    out.distance_ = code.known_distance();
    return out;
}

std::optional<FieldVector> find_full_weight_dual_codeword(const LinearCode& code,
                                                          std::uint64_t seed,
                                                          std::uint64_t budget) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::uint32_t q = code.q();
    const GaloisField& f = *code.field();

    const bool distance_at_least_two = code.known_distance()
                                           ? *code.known_distance() >= 2
                                           : check_columns_independent(parity_check(code), 1);

    if (k + 2 <= q && distance_at_least_two) {
        // Systematic form up to a column permutation: pivots play the role of I_k.
        const RowEchelon e = rref(code.generator());
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : e.pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);

        std::mt19937_64 rng(seed);
        FieldVector m(n - k);
        FieldVector w(n);
        for (std::uint64_t trial = 0; trial < budget; ++trial) {
            for (auto& x : m) x = static_cast<Code>(1 + uniform_below(rng, q - 1));
            for (std::size_t t = 0; t < free_cols.size(); ++t) w[free_cols[t]] = f.neg(m[t]);
            bool full = true;
            for (std::size_t j = 0; j < k; ++j) {
                Code acc = 0;
                for (std::size_t t = 0; t < free_cols.size(); ++t)
                    acc = f.add(acc, f.mul(m[t], e.reduced.at(j, free_cols[t])));
                w[e.pivots[j]] = acc;
                if (acc == 0) {
                    full = false;
                    break;
                }
            }
            if (full) return w;
        }
    }

    if (count_vectors(q, n - k) <= budget) {
        std::optional<FieldVector> found;
        for_each_codeword(parity_check(code), [&](std::span<const Code> word, std::span<const Code>) {
            if (hamming_weight(word) == n) {
                found = FieldVector(word.begin(), word.end());
                return false;
            }
            return true;
        });
        return found;
    }
    return std::nullopt;
}

std::optional<LinearCode> random_code_search(std::size_t n, std::size_t k, std::size_t d,
                                             std::uint32_t q, std::uint64_t seed,
                                             std::uint64_t trials, std::uint64_t budget) {
    if (k == 0 || k >= n) throw ParameterError("random_code_search needs 0 < k < n");
    const FieldPtr field = field_make(q);
    // Singleton bound: nothing to find.
    if (d > n - k + 1) return std::nullopt;
    if (count_vectors(q, k) > budget)
        throw BudgetExceeded("candidate verification needs " + std::to_string(q) + "^" +
                             std::to_string(k) + " codewords");

    std::mt19937_64 rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        MatrixGF g(field, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            g.set(i, i, 1);
            for (std::size_t c = k; c < n; ++c) g.set(i, c, static_cast<Code>(uniform_below(rng, q)));
        }
        LinearCode candidate(std::move(g));
        if (min_distance(candidate, budget) >= d) return candidate.verified(budget);
    }
    return std::nullopt;
}

std::size_t singleton_defect(const LinearCode& code) {
    if (!code.known_distance())
        throw PreconditionViolated("singleton defect needs a verified minimum distance");
    const std::size_t bound = code.length() - code.dimension() + 1;
    const std::size_t d = *code.known_distance();
    if (d > bound) throw VerificationFailed("distance exceeds the Singleton bound");
    return bound - d;
}

CodeSummary summarize(const LinearCode& code) {
    return {code.length(), code.dimension(), code.known_distance().value_or(0), singleton_defect(code)};
}

} // namespace permcodes
