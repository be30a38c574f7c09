#pragma once

#include <string>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/infoset.hpp"
#include "ghw/weights.hpp"

namespace fixtures {

using ghw::FiniteField;
using ghw::LinearCode;
using ghw::MatrixGF;

inline LinearCode binary(std::vector<std::vector<std::uint32_t>> rows) {
    return LinearCode(MatrixGF::from_rows(FiniteField::prime(2), rows));
}

// A nested pair C2 < C1 of binary [10,5] and [10,3] codes, and a second pair
// C2' < C1' with the same relative hierarchy [2, 4] whose duals differ.
inline LinearCode c1() {
    return binary({{0, 1, 0, 1, 0, 0, 1, 0, 0, 0},
                   {1, 1, 1, 1, 1, 1, 1, 0, 1, 0},
                   {0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                   {1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                   {0, 0, 1, 1, 0, 1, 0, 0, 0, 0}});
}
inline LinearCode c2() {
    return binary({{0, 1, 0, 1, 0, 0, 1, 0, 0, 0},
                   {1, 1, 1, 1, 1, 1, 1, 0, 1, 0},
                   {0, 0, 0, 0, 0, 0, 1, 1, 0, 1}});
}
inline LinearCode c1p() {
    return binary({{1, 1, 0, 1, 0, 0, 0, 0, 0, 1},
                   {0, 1, 0, 1, 1, 1, 0, 1, 0, 0},
                   {1, 0, 1, 0, 0, 0, 1, 0, 1, 0},
                   {1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                   {0, 1, 0, 1, 0, 0, 0, 0, 0, 0}});
}
inline LinearCode c2p() {
    return binary({{1, 1, 0, 1, 0, 0, 0, 0, 0, 1},
                   {0, 1, 0, 1, 1, 1, 0, 1, 0, 0},
                   {1, 0, 1, 0, 0, 0, 1, 0, 1, 0}});
}

inline LinearCode hamming7() {
    return binary({{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}});
}

/// Checks that a detailed result is backed by its instrumentation: every
/// recorded lower bound is at most the value, and the witness is an
/// r-dimensional subcode of c (avoiding c2 when given) of exactly that
/// support size, obtained as subspace * G_j. Returns an empty string when
/// everything holds, otherwise a description of the first problem.
inline std::string audit(const ghw::GhwResult& res, const LinearCode& c, const LinearCode* c2 = nullptr,
                         const ghw::InfoSetDecomposition* info = nullptr) {
    for (const auto& ev : res.rounds) {
        if (ev.lower > res.value) {
            return "round w=" + std::to_string(ev.w) + " lower bound " + std::to_string(ev.lower) +
                   " exceeds value " + std::to_string(res.value);
        }
    }
    if (res.initial_lower > res.value) return "initial lower bound exceeds the value";
    if (!res.witness) return "no witness for r=" + std::to_string(res.r);
    const auto& w = *res.witness;
    if (w.weight != res.value) return "witness weight differs from value";
    if (ghw::support(w.generator).size() != res.value) return "witness support differs from value";
    if (w.generator.rows() != res.r || ghw::rank(w.generator) != res.r) return "witness rank is not r";
    if (ghw::rank(w.subspace) != res.r) return "witness subspace rank is not r";
    for (std::size_t i = 0; i < w.generator.rows(); ++i) {
        if (!c.contains(w.generator.row(i))) return "witness leaves the code";
    }
    if (info && !(ghw::encode_subspace(info->mats.at(w.matrix), w.subspace) == w.generator)) {
        return "witness generator is not subspace * G_j";
    }
    if (c2) {
        const auto h2 = ghw::right_kernel_basis(c2->generator());
        if (ghw::rank(ghw::mat_mul(h2, w.generator.transpose())) != res.r) {
            return "witness meets the subcode";
        }
    }
    return {};
}

}  // namespace fixtures
