#include "permcodes/code_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "permcodes/errors.hpp"

namespace permcodes {

namespace {

std::vector<long long> parse_numbers(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        }
        if (used != token.size() || v < 0)
            throw ParseError(line_no, "expected a non-negative integer, got '" + token + "'");
        out.push_back(v);
    }
    return out;
}

bool is_skippable(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

} // namespace

void write_code(std::ostream& os, const LinearCode& code) {
    const MatrixGF& g = code.generator();
    os << code.q() << ' ' << code.length() << ' ' << code.dimension() << '\n';
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c) os << ' ';
            os << g.at(r, c);
        }
        os << '\n';
    }
}

std::string format_code(const LinearCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

LinearCode read_code(std::istream& is) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    std::vector<long long> header;
    std::vector<FieldVector> rows;
    FieldPtr field;

    while (std::getline(is, line)) {
        ++line_no;
        if (is_skippable(line)) continue;
        auto numbers = parse_numbers(line, line_no);
        if (header.empty()) {
            if (numbers.size() != 3) throw ParseError(line_no, "header must be `q n k`");
            header = numbers;
            header_line = line_no;
            try {
                field = field_make(header[0]);
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }
        if (rows.size() == static_cast<std::size_t>(header[2]))
            throw ParseError(line_no, "more generator rows than k = " + std::to_string(header[2]));
        if (numbers.size() != static_cast<std::size_t>(header[1]))
            throw ParseError(line_no, "expected " + std::to_string(header[1]) + " entries, got " +
                                          std::to_string(numbers.size()));
        FieldVector row;
        for (long long v : numbers) {
            if (v >= header[0]) throw ParseError(line_no, "entry " + std::to_string(v) + " is not below q");
            row.push_back(static_cast<Code>(v));
        }
        rows.push_back(std::move(row));
    }
    if (header.empty()) throw ParseError(line_no, "missing `q n k` header");
    if (rows.size() != static_cast<std::size_t>(header[2]))
        throw ParseError(line_no, "expected " + std::to_string(header[2]) + " generator rows, got " +
                                      std::to_string(rows.size()));
    try {
        if (header[2] == 0) throw ParameterError("k must be positive");
        return LinearCode(MatrixGF::from_rows(field, rows));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(header_line, e.what());
    }
}

LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open code file '" + path + "'");
    return read_code(in);
}

void save_code(const std::string& path, const LinearCode& code) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write code file '" + path + "'");
    write_code(out, code);
}

} // namespace permcodes
