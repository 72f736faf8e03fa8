#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permcodes/bounds.hpp"

namespace permcodes {

enum class TableColumn { gv, sphere, singleton, old_bound, mds, mds_plus1 };
enum class TableFormat { csv, markdown };

/// Comma-separated list of gv, sphere, singleton, old, mds, mds+1.
std::vector<TableColumn> parse_columns(const std::string& text);
std::string column_name(TableColumn c);
TableFormat parse_format(const std::string& text);

struct TableRequest {
    std::size_t d = 6;
    std::size_t n_min = 9;
    std::size_t n_max = 21;
    std::vector<TableColumn> columns{TableColumn::mds, TableColumn::mds_plus1, TableColumn::old_bound};
    TableFormat format = TableFormat::csv;
};

struct TableRow {
    std::size_t n = 0;
    /// Rounded bound per requested column; empty when inapplicable.
    std::vector<std::optional<BigInt>> cells;
    /// Marks the largest of the old / mds / mds+1 lower bounds (all ties).
    std::vector<bool> best;
};

/// Throws ParameterError unless n_min <= n_max and d >= 3.
std::vector<TableRow> compute_table(const TableRequest& req);
std::string render_table(const TableRequest& req, std::span<const TableRow> rows);

struct NewOldPoint {
    std::size_t n = 0;
    std::size_t d = 0;
    NewOldRatio ratio;
};

/// d = ceil(b n) at each n; points where either bound is inapplicable are dropped.
std::vector<NewOldPoint> compare_new_old(std::span<const std::size_t> lengths, const Rational& b);

struct AmdsOldPoint {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    BigInt a2;
    Rational ratio;
};

/// n = alpha q, d = b n with A_2(n - q, ceil(d/2)) found by exact search.
/// Points with non-integral n or d, or outside the bounds' ranges, are dropped.
std::vector<AmdsOldPoint> compare_amds_old(std::span<const std::uint32_t> qs, const Rational& alpha,
                                           const Rational& b, std::uint64_t budget = 10'000'000);

std::string render_new_old(std::span<const NewOldPoint> points, TableFormat format);
std::string render_amds_old(std::span<const AmdsOldPoint> points, TableFormat format);

} // namespace permcodes
