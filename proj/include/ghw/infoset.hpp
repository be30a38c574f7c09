#pragma once

#include <cstddef>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/matrix.hpp"

namespace ghw {

/// Information sets I_1..I_m of a code with their systematic generator
/// matrices and redundancies. Column indices are 1-based.
///
/// Invariants: mats[j] restricted to sets[j] is the k x k identity (row t is
/// the unit vector at sets[j][t]); reds[0] = 0 and reds[j] counts the columns
/// of sets[j] already used by an earlier set.
struct InfoSetDecomposition {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<MatrixGF> mats;
    std::vector<std::size_t> reds;

    std::size_t size() const noexcept { return sets.size(); }
};

/// Greedy decomposition: each round takes, lowest index first, the unused
/// nonzero columns that extend the rank, then tops up with the lowest-index
/// previously used columns that still extend it. Stops once every nonzero
/// column is covered.
InfoSetDecomposition information(const LinearCode& c);

/// Checks a caller-supplied decomposition against the code: shapes, identity
/// on each set, row space equal to the code, and the redundancy counts.
/// Throws BadArgs on violation.
void validate(const InfoSetDecomposition& info, const LinearCode& c);

/// gj = (G restricted to set)^-1 * G for a set of k independent columns.
MatrixGF systematic_on(const MatrixGF& g, const std::vector<std::size_t>& set);

}  // namespace ghw
