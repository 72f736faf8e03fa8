#include "permcodes/report.hpp"

#include <algorithm>
#include <sstream>

#include "permcodes/errors.hpp"
#include "permcodes/field.hpp"
#include "permcodes/subcodes.hpp"

namespace permcodes {

namespace {

constexpr int kSignificantDigits = 6;

bool is_lower_bound_column(TableColumn c) {
    return c == TableColumn::old_bound || c == TableColumn::mds || c == TableColumn::mds_plus1;
}

BoundCell cell_for(const BoundReport& rep, TableColumn c) {
    switch (c) {
    case TableColumn::gv: return rep.gv;
    case TableColumn::sphere: return rep.sphere;
    case TableColumn::singleton: return rep.singleton;
    case TableColumn::old_bound: return rep.old_bound;
    case TableColumn::mds: return rep.mds;
    case TableColumn::mds_plus1: return rep.mds_plus1;
    }
    return {};
}

// Writes rows of already-rendered cells as CSV or a right-aligned markdown table.
std::string render_grid(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows, TableFormat format) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        if (format == TableFormat::csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        } else {
            os << '|';
            for (const auto& c : cells) os << ' ' << c << " |";
        }
        os << '\n';
    };
    line(header);
    if (format == TableFormat::markdown) {
        os << '|';
        for (std::size_t i = 0; i < header.size(); ++i) os << "---:|";
        os << '\n';
    }
    for (const auto& r : rows) line(r);
    return os.str();
}

} // namespace

std::vector<TableColumn> parse_columns(const std::string& text) {
    std::vector<TableColumn> out;
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        if (tok == "gv") out.push_back(TableColumn::gv);
        else if (tok == "sphere") out.push_back(TableColumn::sphere);
        else if (tok == "singleton") out.push_back(TableColumn::singleton);
        else if (tok == "old") out.push_back(TableColumn::old_bound);
        else if (tok == "mds") out.push_back(TableColumn::mds);
        else if (tok == "mds+1") out.push_back(TableColumn::mds_plus1);
        else throw ParameterError("unknown column '" + tok + "'");
    }
    if (out.empty()) throw ParameterError("no columns selected");
    return out;
}

std::string column_name(TableColumn c) {
    switch (c) {
    case TableColumn::gv: return "gv";
    case TableColumn::sphere: return "sphere";
    case TableColumn::singleton: return "singleton";
    case TableColumn::old_bound: return "old";
    case TableColumn::mds: return "mds";
    case TableColumn::mds_plus1: return "mds+1";
    }
    return "?";
}

TableFormat parse_format(const std::string& text) {
    if (text == "csv") return TableFormat::csv;
    if (text == "markdown" || text == "md") return TableFormat::markdown;
    throw ParameterError("unknown format '" + text + "'");
}

std::vector<TableRow> compute_table(const TableRequest& req) {
    if (req.d < 3) throw ParameterError("table needs d >= 3");
    if (req.n_min > req.n_max) throw ParameterError("table needs n_min <= n_max");
    if (req.columns.empty()) throw ParameterError("no columns selected");
    std::vector<TableRow> rows;
    for (std::size_t n = req.n_min; n <= req.n_max; ++n) {
        const BoundReport rep = bound_report(n, req.d);
        TableRow row;
        row.n = n;
        std::optional<BigInt> top;
        for (TableColumn c : req.columns) {
            const BoundCell cell = cell_for(rep, c);
            row.cells.push_back(cell.applicable() ? std::optional<BigInt>(cell.bound->rounded) : std::nullopt);
            if (is_lower_bound_column(c) && row.cells.back() && (!top || *row.cells.back() > *top))
                top = row.cells.back();
        }
        for (std::size_t i = 0; i < req.columns.size(); ++i)
            row.best.push_back(is_lower_bound_column(req.columns[i]) && row.cells[i] && top && *row.cells[i] == *top);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_table(const TableRequest& req, std::span<const TableRow> rows) {
    std::vector<std::string> header{"n"};
    for (TableColumn c : req.columns) header.push_back(column_name(c));
    std::vector<std::vector<std::string>> body;
    for (const auto& row : rows) {
        std::vector<std::string> cells{std::to_string(row.n)};
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (!row.cells[i]) {
                cells.emplace_back();
                continue;
            }
            const std::string v = row.cells[i]->str();
            if (!row.best[i]) cells.push_back(v);
            else cells.push_back(req.format == TableFormat::csv ? v + "*" : "**" + v + "**");
        }
        body.push_back(std::move(cells));
    }
    return render_grid(header, body, req.format);
}

std::vector<NewOldPoint> compare_new_old(std::span<const std::size_t> lengths, const Rational& b) {
    std::vector<NewOldPoint> out;
    for (std::size_t n : lengths) {
        const BigInt d_big = ceil(b * n);
        if (d_big < 1) continue;
        const auto d = static_cast<std::size_t>(d_big);
        if (!mds_plus1_lower(n, d).applicable() || d <= 2 || d > n) continue;
        out.push_back({n, d, ratio_new_old(n, d)});
    }
    return out;
}

std::vector<AmdsOldPoint> compare_amds_old(std::span<const std::uint32_t> qs, const Rational& alpha,
                                           const Rational& b, std::uint64_t budget) {
    std::vector<AmdsOldPoint> out;
    for (std::uint32_t q : qs) {
        if (!is_prime_power(q)) continue;
        const Rational n_exact = alpha * q;
        const Rational d_exact = b * n_exact;
        if (boost::multiprecision::denominator(n_exact) != 1 || boost::multiprecision::denominator(d_exact) != 1)
            continue;
        const auto n = static_cast<std::size_t>(boost::multiprecision::numerator(n_exact));
        const auto d = static_cast<std::size_t>(boost::multiprecision::numerator(d_exact));
        if (!(alpha > 1 && alpha <= 2 && b > 0 && b < 1) || d <= 2) continue;
        const BinaryCode a2 = max_binary_code(n - q, (d + 1) / 2, budget);
        const BigInt a2_value = a2.words.size();
        out.push_back({q, n, d, a2_value, ratio_amds_old(q, alpha, b, a2_value)});
    }
    return out;
}

std::string render_new_old(std::span<const NewOldPoint> points, TableFormat format) {
    std::vector<std::vector<std::string>> body;
    for (const auto& p : points) {
        body.push_back({std::to_string(p.n), std::to_string(p.d), std::to_string(next_prime(p.n)),
                        format_significant(p.ratio.ratio, kSignificantDigits), to_string(p.ratio.ratio),
                        format_significant(p.ratio.envelope, kSignificantDigits), to_string(p.ratio.envelope)});
    }
    return render_grid({"n", "d", "nextprime", "ratio", "ratio_exact", "envelope", "envelope_exact"}, body, format);
}

std::string render_amds_old(std::span<const AmdsOldPoint> points, TableFormat format) {
    std::vector<std::vector<std::string>> body;
    for (const auto& p : points) {
        body.push_back({std::to_string(p.q), std::to_string(p.n), std::to_string(p.d), p.a2.str(),
                        format_significant(p.ratio, kSignificantDigits), to_string(p.ratio)});
    }
    return render_grid({"q", "n", "d", "A2", "ratio", "ratio_exact"}, body, format);
}

} // namespace permcodes
