#pragma once

#include <iosfwd>
#include <string>

#include "permcodes/linear_code.hpp"

namespace permcodes {

/// Text format: a `q n k` header, then k generator rows of element codes
/// separated by single spaces. Lines starting with `#` are comments.
void write_code(std::ostream& os, const LinearCode& code);
std::string format_code(const LinearCode& code);

/// Throws ParseError carrying the offending line number.
LinearCode read_code(std::istream& is);
LinearCode parse_code(const std::string& text);

LinearCode load_code(const std::string& path);
void save_code(const std::string& path, const LinearCode& code);

} // namespace permcodes
