#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcodes/construction.hpp"
#include "permcodes/permutation.hpp"

namespace permcodes {

/// Contents of a permutation code file as written, before any validation
/// beyond syntax. Rows may repeat.
struct PermutationCodeFile {
    std::size_t n = 0;
    std::size_t declared_size = 0;
    /// kInfiniteDistance when the header says `inf`.
    std::size_t declared_distance = 0;
    std::vector<Permutation> rows;
};

/// Header `n size d` (d is `inf` below two members), then one permutation
/// per line in 1-based one-line notation.
void write_permutation_code(std::ostream& os, const PermutationCode& code);
std::string format_permutation_code(const PermutationCode& code);

/// Throws ParseError with the line number on malformed input, including a
/// row whose length differs from the header's n or a row count that differs
/// from the declared size.
PermutationCodeFile read_permutation_code(std::istream& is);
PermutationCodeFile parse_permutation_code(const std::string& text);

struct VerifyOutcome {
    bool passed = false;
    std::size_t distance = 0;
    std::string message;
};

/// Recomputes the minimum distance; passes iff it is >= required and
/// matches the declared header distance.
VerifyOutcome verify_permutation_code(const PermutationCodeFile& file, std::size_t required);

/// Plain `key: value` lines.
void write_certificate(std::ostream& os, const Certificate& cert);
std::string format_certificate(const Certificate& cert);
std::map<std::string, std::string> parse_certificate(const std::string& text);

std::string distance_to_string(std::size_t d);

} // namespace permcodes
