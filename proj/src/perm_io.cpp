#include "permcodes/perm_io.hpp"

#include <sstream>

#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

std::string join(const FieldVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::size_t parse_count(const std::string& token, int line_no, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("bad ") + what + " '" + token + "'");
    }
    if (used != token.size() || token[0] == '-')
        throw ParseError(line_no, std::string("bad ") + what + " '" + token + "'");
    return static_cast<std::size_t>(v);
}

} // namespace

std::string distance_to_string(std::size_t d) {
    return d == kInfiniteDistance ? "inf" : std::to_string(d);
}

void write_permutation_code(std::ostream& os, const PermutationCode& code) {
    os << code.length() << ' ' << code.size() << ' ' << distance_to_string(code_min_distance(code)) << '\n';
    for (const auto& p : code.members()) os << p << '\n';
}

std::string format_permutation_code(const PermutationCode& code) {
    std::ostringstream os;
    write_permutation_code(os, code);
    return os.str();
}

PermutationCodeFile read_permutation_code(std::istream& is) {
    PermutationCodeFile out;
    bool have_header = false;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream in(line);
        std::vector<std::string> tokens;
        for (std::string t; in >> t;) tokens.push_back(t);
        if (!have_header) {
            if (tokens.size() != 3) throw ParseError(line_no, "header must be `n size d`");
            out.n = parse_count(tokens[0], line_no, "length");
            out.declared_size = parse_count(tokens[1], line_no, "size");
            out.declared_distance =
                tokens[2] == "inf" ? kInfiniteDistance : parse_count(tokens[2], line_no, "distance");
            if (out.n == 0) throw ParseError(line_no, "length must be positive");
            have_header = true;
            continue;
        }
        if (tokens.size() != out.n)
            throw ParseError(line_no, "row has " + std::to_string(tokens.size()) + " entries, header says n = " +
                                          std::to_string(out.n));
        std::vector<int> images;
        for (const auto& t : tokens) images.push_back(static_cast<int>(parse_count(t, line_no, "entry")));
        try {
            out.rows.emplace_back(std::move(images));
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) throw ParseError(line_no, "missing `n size d` header");
    if (out.rows.size() != out.declared_size)
        throw ParseError(line_no, "header declares " + std::to_string(out.declared_size) + " rows, found " +
                                      std::to_string(out.rows.size()));
    return out;
}

PermutationCodeFile parse_permutation_code(const std::string& text) {
    std::istringstream in(text);
    return read_permutation_code(in);
}

VerifyOutcome verify_permutation_code(const PermutationCodeFile& file, std::size_t required) {
    VerifyOutcome out;
    out.distance = min_pairwise_distance(file.rows);
    if (out.distance < required) {
        out.message = "minimum distance " + distance_to_string(out.distance) + " is below " + std::to_string(required);
    } else if (out.distance != file.declared_distance) {
        out.message = "header declares distance " + distance_to_string(file.declared_distance) +
                      " but the rows have " + distance_to_string(out.distance);
    } else {
        out.passed = true;
        out.message = "ok: " + std::to_string(file.rows.size()) + " permutations, minimum distance " +
                      distance_to_string(out.distance);
    }
    return out;
}

void write_certificate(std::ostream& os, const Certificate& c) {
    os << "# permutation code construction certificate\n"
       << "n: " << c.n << '\n'
       << "q: " << c.q << '\n'
       << "k: " << c.k << '\n'
       << "target_distance: " << c.d << '\n'
       << "code_distance: " << c.code_distance << '\n'
       << "residue_s: " << c.s << '\n'
       << "residue_r: " << c.r << '\n'
       << "subgroup_order: " << c.subgroup_order << '\n'
       << "gamma_size: " << c.gamma_size << '\n'
       << "coset_count: " << c.coset_count << '\n'
       << "t_size: " << c.t_size << '\n'
       << "ones_row: " << (c.ones_row ? "true" : "false") << '\n'
       << "dual_codeword: " << join(c.dual_codeword) << '\n'
       << "exponent: " << c.exponent << '\n'
       << "bucket_count: " << c.bucket_count << '\n'
       << "syndrome: " << join(c.syndrome) << '\n'
       << "bucket_size: " << c.bucket_size << '\n'
       << "verified_distance: " << distance_to_string(c.verified_distance) << '\n'
       << "bound: " << to_string(c.bound) << '\n'
       << "guaranteed_floor: " << c.guaranteed_floor << '\n'
       << "seed: " << c.seed << '\n';
}

std::string format_certificate(const Certificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

std::map<std::string, std::string> parse_certificate(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected `key: value`");
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value[0] == ' ') value.erase(0, 1);
        out[line.substr(0, colon)] = value;
    }
    return out;
}

} // namespace permcodes
