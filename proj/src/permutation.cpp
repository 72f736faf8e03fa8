#include "permcodes/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "permcodes/errors.hpp"

namespace permcodes {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const auto n = static_cast<int>(images_.size());
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ParameterError("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    Permutation out;
    out.images_ = std::move(inv);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw LengthMismatch("composing permutations of different lengths");
    Permutation out;
    out.images_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    for (std::size_t i = 0; i < p.images_.size(); ++i) {
        if (i) os << ' ';
        os << p.images_[i];
    }
    return os;
}

std::size_t perm_hamming(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw LengthMismatch("permutations of different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.images()[i] != b.images()[i];
    return d;
}

std::size_t min_pairwise_distance(std::span<const Permutation> members) {
    std::size_t best = kInfiniteDistance;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            best = std::min(best, perm_hamming(members[i], members[j]));
            if (best == 0) return 0;
        }
    return best;
}

PermutationCode::PermutationCode(std::size_t n, std::vector<Permutation> members)
    : n_(n), members_(std::move(members)) {
    std::set<Permutation> seen;
    for (const auto& p : members_) {
        if (p.size() != n_) throw LengthMismatch("code member of wrong length");
        if (!seen.insert(p).second) throw ParameterError("duplicate member in permutation code");
    }
}

bool PermutationCode::contains(const Permutation& p) const {
    return std::find(members_.begin(), members_.end(), p) != members_.end();
}

PermutationCode PermutationCode::verified() const {
    PermutationCode out = *this;
    out.distance_ = min_pairwise_distance(members_);
    return out;
}

std::size_t code_min_distance(const PermutationCode& code) {
    if (code.known_distance()) return *code.known_distance();
    return min_pairwise_distance(code.members());
}

ResidueSubgroupSpec ResidueSubgroupSpec::make(std::size_t n, std::size_t q) {
    if (n == 0) throw ParameterError("permutation length must be positive");
    if (q < 2) throw ParameterError("modulus q must be at least 2");
    return {n, q, n / q, n % q};
}

BigInt ResidueSubgroupSpec::order() const {
    return ipow(factorial(static_cast<unsigned>(s + 1)), static_cast<unsigned>(r)) *
           ipow(factorial(static_cast<unsigned>(s)), static_cast<unsigned>(q - r));
}

std::vector<std::vector<int>> ResidueSubgroupSpec::classes() const {
    std::vector<std::vector<int>> out;
    const std::size_t count = std::min(q, n);
    for (std::size_t c = 1; c <= count; ++c) {
        std::vector<int> cls;
        for (std::size_t i = c; i <= n; i += q) cls.push_back(static_cast<int>(i));
        out.push_back(std::move(cls));
    }
    return out;
}

bool ResidueSubgroupSpec::contains(const Permutation& p) const {
    if (p.size() != n) return false;
    for (std::size_t i = 1; i <= n; ++i)
        if (static_cast<std::size_t>(p(static_cast<int>(i))) % q != i % q) return false;
    return true;
}

PermutationCode subgroup_K(const ResidueSubgroupSpec& spec, std::uint64_t budget) {
    if (spec.order() > budget)
        throw BudgetExceeded("|K| = " + spec.order().str() + " exceeds budget " + std::to_string(budget));
    const auto classes = spec.classes();
    // Odometer over independent arrangements of each class.
    std::vector<std::vector<int>> arrangement = classes;
    std::vector<Permutation> members;
    while (true) {
        std::vector<int> images(spec.n);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t j = 0; j < classes[c].size(); ++j)
                images[static_cast<std::size_t>(classes[c][j] - 1)] = arrangement[c][j];
        members.emplace_back(std::move(images));
        // next_permutation resets a class to sorted order when it wraps.
        bool advanced = false;
        for (std::size_t c = classes.size(); c-- > 0;) {
            if (std::next_permutation(arrangement[c].begin(), arrangement[c].end())) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(members.begin(), members.end());
    return PermutationCode(spec.n, std::move(members));
}

std::vector<Permutation> coset_representatives(std::size_t n, std::size_t q, std::uint64_t budget) {
    if (n == 0) throw ParameterError("permutation length must be positive");
    if (q < 2) throw ParameterError("modulus q must be at least 2");
    if (factorial(static_cast<unsigned>(n)) > budget)
        throw BudgetExceeded(std::to_string(n) + "! exceeds budget " + std::to_string(budget));

    std::set<std::vector<std::uint8_t>> seen;
    std::vector<Permutation> reps;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<std::uint8_t> key(n);
    do {
        for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<std::uint8_t>(static_cast<std::size_t>(images[i]) % q);
        if (seen.insert(key).second) reps.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return reps;
}

FieldElement L_map(std::size_t i, const FieldPtr& field) {
    if (i == 0) throw ParameterError("points are numbered from 1");
    return {field, static_cast<Code>(i % field->order())};
}

FieldVector phi(const Permutation& sigma, const MatrixGF& h) {
    if (sigma.size() != h.cols())
        throw DimensionMismatch("permutation length " + std::to_string(sigma.size()) +
                                " differs from the " + std::to_string(h.cols()) + " parity check columns");
    const GaloisField& f = *h.field();
    const std::uint32_t q = f.order();
    FieldVector out(h.rows(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const auto label = static_cast<Code>(static_cast<std::uint32_t>(sigma.images()[i]) % q);
        if (label == 0) continue;
        for (std::size_t r = 0; r < h.rows(); ++r) out[r] = f.add(out[r], f.mul(label, h.at(r, i)));
    }
    return out;
}

Code ones_row_syndrome(std::size_t n, const GaloisField& field) {
    Code acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc = field.add(acc, static_cast<Code>(i % field.order()));
    return acc;
}

} // namespace permcodes
