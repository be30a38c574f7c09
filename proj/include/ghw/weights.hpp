#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/enumerate.hpp"
#include "ghw/infoset.hpp"
#include "ghw/matrix.hpp"

namespace ghw {

/// State after one round of the support-size search.
struct RoundEvent {
    std::size_t r = 0;
    std::size_t w = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::size_t active_matrices = 0;
    std::uint64_t subspaces = 0;  // subspaces E enumerated in this round
    double elapsed_ms = 0.0;      // since the start of this rank's search
};

using ProgressSink = std::function<void(const RoundEvent&)>;

struct ComputeOptions {
    /// Regenerate the RREF list for every support instead of caching it.
    bool low_mem = false;
    /// Deliver a RoundEvent to `progress` after every round.
    bool verbose = false;
    ProgressSink progress;
    /// Use these instead of information(C). Validated before use.
    std::optional<InfoSetDecomposition> info_sets;
    /// Externally known lower bound on the answer (r = 1 for hierarchies).
    std::optional<std::size_t> initial_lower;
    /// Raise the starting lower bound with the BCH bound for cyclic codes.
    bool use_cyclic_bound = true;
    /// Make sure the returned value is backed by a concrete subspace.
    bool find_witness = true;
    /// Worker threads per round; 0 means hardware concurrency.
    unsigned threads = 1;
    /// Cap on gaussian_binomial(k, r, q) for spectra.
    std::uint64_t work_limit = 1'000'000'000;
};

/// Subcode realizing a computed value: `subspace` is the r x k RREF R(E),
/// `matrix` the index of the generator G_j it was encoded through, and
/// `generator` = R(E) * G_j.
struct Witness {
    std::size_t matrix = 0;
    MatrixGF subspace;
    MatrixGF generator;
    std::size_t weight = 0;
};

struct GhwResult {
    std::size_t value = 0;
    std::size_t r = 0;
    std::size_t initial_lower = 0;
    std::size_t initial_upper = 0;
    std::optional<Witness> witness;
    std::vector<RoundEvent> rounds;
    std::uint64_t subspaces = 0;  // enumerated by the bound search
    std::uint64_t encodings = 0;  // (subspace, matrix) pairs evaluated
    std::uint64_t witness_search_subspaces = 0;
};

struct HierarchyResult {
    Hierarchy values;
    std::vector<GhwResult> ranks;
};

/// r-th generalized Hamming weight d_r(C).
std::size_t ghw(const LinearCode& c, std::size_t r, const ComputeOptions& opts = {});
GhwResult ghw_detailed(const LinearCode& c, std::size_t r, const ComputeOptions& opts = {});

/// d_1 < ... < d_k, each search seeded with the previous value plus one.
Hierarchy hierarchy(const LinearCode& c, const ComputeOptions& opts = {});
HierarchyResult hierarchy_detailed(const LinearCode& c, const ComputeOptions& opts = {});

/// r-th relative GHW M_r(C1, C2) for C2 a proper subcode of C1.
std::size_t rghw(const LinearCode& c1, const LinearCode& c2, std::size_t r,
                 const ComputeOptions& opts = {});
GhwResult rghw_detailed(const LinearCode& c1, const LinearCode& c2, std::size_t r,
                        const ComputeOptions& opts = {});

Hierarchy rhierarchy(const LinearCode& c1, const LinearCode& c2, const ComputeOptions& opts = {});
HierarchyResult rhierarchy_detailed(const LinearCode& c1, const LinearCode& c2,
                                    const ComputeOptions& opts = {});

/// counts[r][w] = A_w^(r): number of r-dimensional subcodes with support
/// size w, for r = 0..k (r = 0..k1-k2 in the relative case).
struct Spectrum {
    std::vector<std::map<std::size_t, BigInt>> counts;
};

Spectrum higher_spectrum(const LinearCode& c, const ComputeOptions& opts = {});
Spectrum rhigher_spectrum(const LinearCode& c1, const LinearCode& c2,
                          const ComputeOptions& opts = {});

/// Hierarchy of the dual of an [n, |h|] code with hierarchy h:
/// {1..n} minus {n + 1 - d : d in h}.
Hierarchy wei_duality(const Hierarchy& h, std::size_t n);

/// hierarchy(C) when k <= n/2, otherwise through the dual and wei_duality.
Hierarchy hierarchy_auto(const LinearCode& c, const ComputeOptions& opts = {});

/// Exhaustive minimum over every r-dimensional subspace encoded through the
/// given generator matrix. No bounds, no early exit.
std::size_t naive_ghw(const LinearCode& c, std::size_t r, bool low_mem = true);
std::size_t naive_rghw(const LinearCode& c1, const LinearCode& c2, std::size_t r,
                       bool low_mem = true);

}  // namespace ghw
