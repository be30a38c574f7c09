#pragma once

#include <cstddef>
#include <vector>

#include "ghw/gf.hpp"
#include "ghw/matrix.hpp"

namespace ghw {

/// Weight hierarchy d_1 < d_2 < ... (or relative hierarchy M_1 < M_2 < ...).
using Hierarchy = std::vector<std::size_t>;

/// A k-dimensional subspace of GF(q)^n given by a full-rank k x n generator.
/// Zero columns are allowed.
class LinearCode {
public:
    /// Throws RankDeficient if the rows of g are dependent, BadDimension if g
    /// has no rows or no columns.
    LinearCode(MatrixGF g);

    const FiniteField& field() const noexcept { return g_.field(); }
    const MatrixGF& generator() const noexcept { return g_; }
    std::size_t n() const noexcept { return g_.cols(); }
    std::size_t k() const noexcept { return g_.rows(); }

    bool contains(std::span<const FieldElement> word) const;

    /// True when every row of other lies in this code.
    bool contains(const LinearCode& other) const;

    /// Number of identically zero columns of the generator.
    std::size_t zero_columns() const;

private:
    MatrixGF g_;
    RrefResult reduced_;
};

inline LinearCode new_code(const MatrixGF& g) { return LinearCode(g); }

/// Code generated by a parity check matrix. Throws ZeroDual when k = n.
LinearCode dual(const LinearCode& c);

/// re * gj: a generator of the subcode of C spanned by re's rows through gj.
MatrixGF encode_subspace(const MatrixGF& gj, const MatrixGF& re);

/// |supp(re * gj)|.
std::size_t support_weight(const MatrixGF& gj, const MatrixGF& re);

/// The right cyclic shift of every generator row lies in the code.
bool is_cyclic(const LinearCode& c);

/// BCH bound of a cyclic code: one more than the longest run of consecutive
/// exponents (mod n) in the defining set {i : g(alpha^i) = 0}, where g is the
/// generator polynomial and alpha = gamma^((Q-1)/n) for gamma the
/// smallest-index primitive element of the splitting field GF(Q), Q = q^t.
///
/// Throws NotCyclic, CharacteristicDividesLength, or FieldTooLarge when the
/// splitting field exceeds the supported field order.
std::size_t bch_bound(const LinearCode& c);

/// Reed-Solomon code: row j evaluates x^j at all q elements in index order.
LinearCode make_rs(const FiniteField& f, std::size_t k);

/// q-ary Reed-Muller code RM_q(nu, m) for nu < q: evaluations of the
/// monomials of total degree <= nu (graded, then lexicographic) at all q^m
/// points of F^m (first coordinate most significant).
LinearCode make_rm(const FiniteField& f, std::size_t nu, std::size_t m);

/// Narrow-sense BCH code of length n and designed distance delta over f,
/// using the same primitive n-th root of unity as bch_bound. Generator rows
/// are the k cyclic shifts x^i g(x).
LinearCode make_bch(const FiniteField& f, std::size_t n, std::size_t delta);

}  // namespace ghw
