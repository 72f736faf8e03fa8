#include "permcodes/mds.hpp"

#include <string>

#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

LinearCode verified_mds(const LinearCode& code, std::uint64_t budget) {
    LinearCode v = code.verified(budget);
    if (singleton_defect(v) != 0)
        throw VerificationFailed("constructed code is not MDS (d = " +
                                 std::to_string(*v.known_distance()) + ")");
    return v;
}

} // namespace

LinearCode reed_solomon(std::uint32_t q, std::size_t n, std::size_t k, std::uint64_t budget) {
    const FieldPtr field = field_make(q);
    if (n > q) throw ParameterError("Reed-Solomon length must not exceed q");
    if (k == 0 || k >= n) throw ParameterError("Reed-Solomon needs 0 < k < n");
    const GaloisField& f = *field;
    MatrixGF g(field, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto a = static_cast<Code>(j);
        for (std::size_t i = 0; i < k; ++i) g.set(i, j, f.pow(a, static_cast<std::int64_t>(i)));
    }
    return verified_mds(LinearCode(std::move(g)), budget);
}

LinearCode extended_rs(std::uint32_t q, std::size_t k, std::uint64_t budget) {
    const FieldPtr field = field_make(q);
    const std::size_t n = static_cast<std::size_t>(q) + 1;
    if (k == 0 || k >= n) throw ParameterError("extended Reed-Solomon needs 0 < k <= q");
    const GaloisField& f = *field;
    MatrixGF g(field, k, n);
    for (std::size_t j = 0; j < q; ++j) {
        const auto a = static_cast<Code>(j);
        for (std::size_t i = 0; i < k; ++i) g.set(i, j, f.pow(a, static_cast<std::int64_t>(i)));
    }
    g.set(k - 1, q, 1);
    return verified_mds(LinearCode(std::move(g)), budget);
}

bool is_mds(const LinearCode& code, std::uint64_t budget) {
    return singleton_defect(code.verified(budget)) == 0;
}

bool verify_dual_mds(const LinearCode& code, std::uint64_t budget) {
    return is_mds(dual(code), budget);
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t budget) {
    if (count_vectors(code.q(), code.dimension()) > budget)
        throw BudgetExceeded("weight distribution needs " + std::to_string(code.q()) + "^" +
                             std::to_string(code.dimension()) + " codewords");
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    for_each_codeword(code.generator(), [&](std::span<const Code> word, std::span<const Code>) {
        ++counts[hamming_weight(word)];
        return true;
    });
    return counts;
}

std::set<std::size_t> weight_spectrum_check(const LinearCode& code, std::uint64_t budget) {
    const auto counts = weight_distribution(code, budget);
    std::set<std::size_t> out;
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) out.insert(w);
    return out;
}

} // namespace permcodes
