#include "ghw/matrix.hpp"

#include <string>

#include "ghw/error.hpp"

namespace ghw {

MatrixGF::MatrixGF(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF MatrixGF::from_rows(const FiniteField& field,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    MatrixGF m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(ErrorKind::DimensionMismatch, "ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!field.contains(rows[i][j])) {
                throw Error(ErrorKind::BadArgs, "entry " + std::to_string(rows[i][j]) +
                                                    " is not an element of " + field.name());
            }
            m(i, j) = static_cast<FieldElement>(rows[i][j]);
        }
    }
    return m;
}

MatrixGF MatrixGF::identity(const FiniteField& field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

MatrixGF MatrixGF::columns(std::span<const std::size_t> cols) const {
    MatrixGF out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    }
    return out;
}

MatrixGF MatrixGF::stacked(const MatrixGF& other) const {
    if (other.cols_ != cols_ || !(other.field_ == field_)) {
        throw Error(ErrorKind::DimensionMismatch, "cannot stack matrices of different shape");
    }
    MatrixGF out(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

std::vector<std::vector<std::uint32_t>> MatrixGF::to_rows() const {
    std::vector<std::vector<std::uint32_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

RrefResult rref(const MatrixGF& m) {
    const FiniteField& f = m.field();
    MatrixGF r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(lead, j));
        }
        const FieldElement scale = f.inv(r(lead, col));
        for (std::size_t j = col; j < r.cols(); ++j) r(lead, j) = f.mul(r(lead, j), scale);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col) == 0) continue;
            const FieldElement factor = r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r(i, j) = f.sub(r(i, j), f.mul(factor, r(lead, j)));
            }
        }
        pivots.push_back(col + 1);
        ++lead;
    }
    return {std::move(r), lead, std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF right_kernel_basis(const MatrixGF& m) {
    const FiniteField& f = m.field();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p - 1] = true;

    MatrixGF basis(f, m.cols() - red.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            basis(out, red.pivots[i] - 1) = f.neg(red.reduced(i, free));
        }
        ++out;
    }
    return basis;
}

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field())) {
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot multiply " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
    const FiniteField& f = a.field();
    MatrixGF out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const FieldElement x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
            }
        }
    }
    return out;
}

std::vector<std::size_t> support(const MatrixGF& m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j) != 0) {
                out.push_back(j + 1);
                break;
            }
        }
    }
    return out;
}

bool in_row_space(const RrefResult& red, std::span<const FieldElement> v) {
    const FiniteField& f = red.reduced.field();
    std::vector<FieldElement> x(v.begin(), v.end());
    for (std::size_t i = 0; i < red.rank; ++i) {
        const std::size_t col = red.pivots[i] - 1;
        const FieldElement factor = x[col];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = f.sub(x[j], f.mul(factor, red.reduced(i, j)));
        }
    }
    for (auto e : x) {
        if (e != 0) return false;
    }
    return true;
}

bool same_row_space(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.cols()) return false;
    const RrefResult ra = rref(a);
    const RrefResult rb = rref(b);
    if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
    for (std::size_t i = 0; i < ra.rank; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (ra.reduced(i, j) != rb.reduced(i, j)) return false;
        }
    }
    return true;
}

}  // namespace ghw
