#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghw/gf.hpp"
#include "ghw/matrix.hpp"

namespace ghw {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t k);

/// Number of r-dimensional subspaces of GF(q)^k.
BigInt gaussian_binomial(std::size_t k, std::size_t r, std::uint64_t q);

/// Number of r-dimensional subspaces of GF(q)^w whose support is all of
/// {1, ..., w}, by inclusion-exclusion over the coordinate hyperplanes.
BigInt count_full_support(std::size_t w, std::size_t r, std::uint64_t q);

/// e_w^r = |E_w^r|: r-dimensional subspaces of GF(q)^k with support size w.
BigInt count_e(std::size_t k, std::size_t w, std::size_t r, std::uint64_t q);

/// m * sum_{w=r}^{ceil(d/m - 1)} e_w^r, the subspace count needed before m
/// disjoint information sets push the lower bound m(w+1) up to d.
BigInt expected_enumeration(std::size_t m, std::size_t d, std::size_t r, std::size_t k,
                            std::uint64_t q);

/// Ascending k-subsets of {0, ..., n-1} in lexicographic order.
class Combinations {
public:
    Combinations(std::size_t n, std::size_t k);

    /// Advances to the next subset; the first call yields the first subset.
    bool next();
    const std::vector<std::size_t>& current() const noexcept { return idx_; }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> idx_;
    bool started_ = false;
    bool done_ = false;
};

/// Pivot positions (1-based) of an r x w RREF with full support: i_1 = 1.
using PivotShape = std::vector<std::size_t>;

/// All C(w-1, r-1) pivot shapes in lexicographic order.
std::vector<PivotShape> pivot_shapes(std::size_t r, std::size_t w);

/// All v in F^r with 1 <= wt(v) <= z: by weight, then support positions
/// (lexicographic), then nonzero values (last position fastest).
std::vector<std::vector<FieldElement>> columns_up_to_weight(std::size_t r, std::size_t z,
                                                            const FiniteField& f);

/// Streams every r x w RREF of rank r with support {1, ..., w} exactly once.
///
/// Shapes come in lexicographic order; within a shape the free columns run
/// as an odometer with the rightmost column fastest. A free column between
/// pivots i_z and i_{z+1} has its support in the first z rows.
class SubspaceStream {
public:
    SubspaceStream(std::size_t r, std::size_t w, const FiniteField& f);

    bool next();

    /// Row-major r x w entries of the current matrix.
    std::span<const FieldElement> entries() const noexcept { return buf_; }
    MatrixGF current() const;

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return w_; }

private:
    bool start_shape();
    void write_column(std::size_t col, std::span<const FieldElement> v);
    const std::vector<FieldElement>& candidates(std::size_t z);

    std::size_t r_;
    std::size_t w_;
    FiniteField field_;
    // candidates_[z-1]: flattened columns of length r with support in the first z rows
    std::vector<std::vector<FieldElement>> candidates_;
    Combinations shapes_;
    std::vector<std::size_t> free_cols_;
    std::vector<std::size_t> free_z_;
    std::vector<std::size_t> digits_;
    std::vector<FieldElement> buf_;
    bool in_shape_ = false;
    bool done_ = false;
};

/// Materialized SubspaceStream: count() matrices of shape rows() x cols().
class SubspaceList {
public:
    SubspaceList(std::size_t r, std::size_t w, const FiniteField& f);

    std::size_t count() const noexcept { return count_; }
    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return w_; }
    std::span<const FieldElement> at(std::size_t i) const noexcept {
        return {data_.data() + i * r_ * w_, r_ * w_};
    }

private:
    std::size_t r_;
    std::size_t w_;
    std::size_t count_ = 0;
    std::vector<FieldElement> data_;
};

/// Collected form of SubspaceStream.
std::vector<MatrixGF> subspaces(std::size_t r, std::size_t w, const FiniteField& f);

/// Places the columns of re at the 1-based positions in support_set of an
/// r x k zero matrix.
MatrixGF expand_to_support(const MatrixGF& re, std::span<const std::size_t> support_set,
                           std::size_t k);

/// All w-subsets of {1, ..., k} in lexicographic order.
std::vector<std::vector<std::size_t>> support_choices(std::size_t k, std::size_t w);

}  // namespace ghw
