#include "permcodes/matrix.hpp"

#include <string>

#include "permcodes/errors.hpp"

namespace permcodes {

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw SpecMismatch("matrix without a field");
}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw SpecMismatch("matrix without a field");
    if (data_.size() != rows_ * cols_)
        throw DimensionMismatch("matrix entry count does not match its shape");
    for (Code c : data_)
        if (!field_->contains(c)) throw ParameterError("matrix entry outside the field");
}

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

MatrixGF MatrixGF::from_rows(FieldPtr field, const std::vector<FieldVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Code> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return MatrixGF(std::move(field), rows.size(), cols, std::move(data));
}

void MatrixGF::set(std::size_t r, std::size_t c, Code value) {
    if (!field_->contains(value)) throw ParameterError("matrix entry outside the field");
    data_[r * cols_ + c] = value;
}

FieldVector MatrixGF::column(std::size_t c) const {
    FieldVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
}

MatrixGF MatrixGF::select_columns(std::span<const std::size_t> columns) const {
    MatrixGF out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw DimensionMismatch("column index out of range");
            out.data_[r * columns.size() + j] = at(r, columns[j]);
        }
    return out;
}

MatrixGF MatrixGF::operator*(const MatrixGF& other) const {
    if (!(*field_ == *other.field_)) throw SpecMismatch("matrices over different fields");
    if (cols_ != other.rows_)
        throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " by " + std::to_string(other.rows_) +
                                "x" + std::to_string(other.cols_));
    const GaloisField& f = *field_;
    MatrixGF out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Code acc = 0;
            for (std::size_t t = 0; t < cols_; ++t) acc = f.add(acc, f.mul(at(i, t), other.at(t, j)));
            out.data_[i * other.cols_ + j] = acc;
        }
    return out;
}

FieldVector MatrixGF::apply(std::span<const Code> v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
    const GaloisField& f = *field_;
    FieldVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Code acc = 0;
        for (std::size_t t = 0; t < cols_; ++t) acc = f.add(acc, f.mul(at(i, t), v[t]));
        out[i] = acc;
    }
    return out;
}

bool MatrixGF::is_zero() const {
    for (Code c : data_)
        if (c != 0) return false;
    return true;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return *a.field_ == *b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(const MatrixGF& m) {
    const GaloisField& f = *m.field();
    MatrixGF r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < r.cols() && lead_row < r.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < r.rows() && r.at(p, c) == 0) ++p;
        if (p == r.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                const Code tmp = r.at(p, j);
                r.set(p, j, r.at(lead_row, j));
                r.set(lead_row, j, tmp);
            }
        const Code scale = f.inv(r.at(lead_row, c));
        for (std::size_t j = 0; j < r.cols(); ++j) r.set(lead_row, j, f.mul(scale, r.at(lead_row, j)));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead_row) continue;
            const Code factor = r.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead_row, j))));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

} // namespace permcodes
