#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "permcodes/field.hpp"

namespace permcodes {

using Code = GaloisField::Code;
/// A vector over GF(q), stored as element codes.
using FieldVector = std::vector<Code>;

/// Dense row-major matrix over a GaloisField. Entries are element codes.
class MatrixGF {
public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

    static MatrixGF identity(FieldPtr field, std::size_t n);
    static MatrixGF from_rows(FieldPtr field, const std::vector<FieldVector>& rows);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Code at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Code value);
    FieldElement element(std::size_t r, std::size_t c) const { return {field_, at(r, c)}; }

    std::span<const Code> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    FieldVector column(std::size_t c) const;

    MatrixGF transpose() const;
    MatrixGF select_columns(std::span<const std::size_t> columns) const;
    /// this * other. Throws SpecMismatch / DimensionMismatch.
    MatrixGF operator*(const MatrixGF& other) const;
    /// this * v^T as a column vector.
    FieldVector apply(std::span<const Code> v) const;
    bool is_zero() const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b);

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> data_;
};

struct RowEchelon {
    MatrixGF reduced;
    std::size_t rank = 0;
    /// Zero-based pivot columns, increasing.
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

} // namespace permcodes
