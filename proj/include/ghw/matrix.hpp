#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghw/gf.hpp"

namespace ghw {

/// Dense row-major matrix over a finite field.
///
/// Element access is 0-based. Functions that report column positions
/// (pivots, supports, information sets) use 1-based indices {1, ..., n}.
class MatrixGF {
public:
    MatrixGF(FiniteField field, std::size_t rows, std::size_t cols);

    /// Builds from nested rows of element indices; every row must have the
    /// same length and every entry must be < q.
    static MatrixGF from_rows(const FiniteField& field,
                              const std::vector<std::vector<std::uint32_t>>& rows);
    static MatrixGF identity(const FiniteField& field, std::size_t n);

    const FiniteField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    FieldElement operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }
    FieldElement& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::span<const FieldElement> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<FieldElement> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }

    std::span<const FieldElement> data() const noexcept { return data_; }

    MatrixGF transpose() const;

    /// Columns selected by 0-based index, in the given order.
    MatrixGF columns(std::span<const std::size_t> cols) const;

    /// Rows of *this followed by rows of other.
    MatrixGF stacked(const MatrixGF& other) const;

    std::vector<std::vector<std::uint32_t>> to_rows() const;

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }

private:
    FiniteField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

struct RrefResult {
    MatrixGF reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // 1-based, ascending
};

/// Unique reduced row echelon form. Zero rows are kept at the bottom so the
/// shape matches the input.
RrefResult rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

/// Rows form a basis of {v : m * v^T = 0}; shape (cols - rank) x cols.
MatrixGF right_kernel_basis(const MatrixGF& m);

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b);

/// 1-based indices of the columns with at least one nonzero entry.
std::vector<std::size_t> support(const MatrixGF& m);

/// True when v lies in the row space of the matrix whose RREF is given.
bool in_row_space(const RrefResult& reduced, std::span<const FieldElement> v);

bool same_row_space(const MatrixGF& a, const MatrixGF& b);

}  // namespace ghw
