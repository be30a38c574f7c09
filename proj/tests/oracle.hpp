#pragma once

// Brute-force references that share no search code with the library.
//
// For a coordinate set S, C(S) is the subcode of C supported inside S; its
// dimension is k - rank(G restricted to the columns outside S). Then
//   d_r(C)         = min{ |S| : dim C(S) >= r }
//   M_r(C1, C2)    = min{ |S| : dim C1(S) - dim C2(S) >= r }
// and exact-support counts follow by inclusion-exclusion over subsets of S.

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/enumerate.hpp"
#include "ghw/gf.hpp"
#include "ghw/matrix.hpp"

namespace oracle {

using ghw::BigInt;
using ghw::FieldElement;
using ghw::FiniteField;
using ghw::LinearCode;
using ghw::MatrixGF;

inline FiniteField field_of_order(std::uint32_t q) {
    switch (q) {
        case 4: return FiniteField::build(2, 2);
        case 8: return FiniteField::build(2, 3);
        case 9: return FiniteField::build(3, 2);
        default: return FiniteField::prime(q);
    }
}

inline MatrixGF random_matrix(std::mt19937_64& rng, const FiniteField& f, std::size_t rows,
                              std::size_t cols) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    MatrixGF m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<FieldElement>(pick(rng));
    }
    return m;
}

inline MatrixGF random_full_rank(std::mt19937_64& rng, const FiniteField& f, std::size_t rows,
                                 std::size_t cols) {
    while (true) {
        MatrixGF m = random_matrix(rng, f, rows, cols);
        if (ghw::rank(m) == rows) return m;
    }
}

inline LinearCode random_code(std::mt19937_64& rng, const FiniteField& f, std::size_t n,
                              std::size_t k) {
    return LinearCode(random_full_rank(rng, f, k, n));
}

/// C1 random of dimension k1, C2 spanned by k2 random independent
/// combinations of C1's rows.
inline std::pair<LinearCode, LinearCode> random_nested(std::mt19937_64& rng, const FiniteField& f,
                                                       std::size_t n, std::size_t k1,
                                                       std::size_t k2) {
    LinearCode c1 = random_code(rng, f, n, k1);
    const MatrixGF mix = random_full_rank(rng, f, k2, k1);
    return {c1, LinearCode(ghw::mat_mul(mix, c1.generator()))};
}

/// dim C(S), with S given as a bit mask over the n coordinates.
inline std::size_t subcode_dim(const LinearCode& c, std::uint32_t mask) {
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < c.n(); ++j) {
        if (!(mask >> j & 1u)) outside.push_back(j);
    }
    if (outside.empty()) return c.k();
    return c.k() - ghw::rank(c.generator().columns(outside));
}

inline std::size_t ghw(const LinearCode& c, std::size_t r) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << c.n()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < best && subcode_dim(c, mask) >= r) best = size;
    }
    return best;
}

inline std::size_t rghw(const LinearCode& c1, const LinearCode& c2, std::size_t r) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << c1.n()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < best && subcode_dim(c1, mask) - subcode_dim(c2, mask) >= r) best = size;
    }
    return best;
}

inline std::vector<std::size_t> hierarchy(const LinearCode& c) {
    std::vector<std::size_t> h;
    for (std::size_t r = 1; r <= c.k(); ++r) h.push_back(oracle::ghw(c, r));
    return h;
}

inline BigInt power(std::uint64_t base, std::size_t e) {
    BigInt out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

/// counts[r][w] for r = 0..max_r. With c2, only subcodes meeting C2 in {0}
/// count: an r-space inside V (dim a) avoiding W (dim b) can be chosen in
/// q^(r b) [a-b, r]_q ways.
inline std::vector<std::map<std::size_t, BigInt>> spectrum(const LinearCode& c,
                                                           const LinearCode* c2 = nullptr) {
    const std::size_t n = c.n();
    const std::uint64_t q = c.field().q();
    const std::size_t max_r = c2 ? c.k() - c2->k() : c.k();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::size_t> dim1(full + 1), dim2(full + 1, 0);
    for (std::uint32_t m = 0; m <= full; ++m) {
        dim1[m] = subcode_dim(c, m);
        if (c2) dim2[m] = subcode_dim(*c2, m);
    }
    std::vector<std::map<std::size_t, BigInt>> out(max_r + 1);
    out[0][0] = 1;
    for (std::size_t r = 1; r <= max_r; ++r) {
        std::vector<BigInt> within(full + 1);
        for (std::uint32_t m = 0; m <= full; ++m) {
            const std::size_t a = dim1[m], b = dim2[m];
            within[m] = a - b >= r ? power(q, r * b) * ghw::gaussian_binomial(a - b, r, q) : BigInt(0);
        }
        for (std::uint32_t m = 0; m <= full; ++m) {
            BigInt exact = 0;
            // Sum over submasks with alternating sign.
            std::uint32_t sub = m;
            while (true) {
                if ((std::popcount(m) - std::popcount(sub)) % 2 == 0) {
                    exact += within[sub];
                } else {
                    exact -= within[sub];
                }
                if (sub == 0) break;
                sub = (sub - 1) & m;
            }
            if (exact != 0) out[r][static_cast<std::size_t>(std::popcount(m))] += exact;
        }
    }
    return out;
}

/// Every r-dimensional subspace of GF(q)^k, as RREF matrices, found by
/// reducing all r-tuples of vectors.
inline std::set<std::vector<FieldElement>> grassmannian(const FiniteField& f, std::size_t k,
                                                        std::size_t r) {
    std::vector<std::vector<FieldElement>> vectors;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= f.q();
    for (std::uint64_t v = 0; v < total; ++v) {
        std::vector<FieldElement> vec(k);
        std::uint64_t x = v;
        for (std::size_t i = 0; i < k; ++i) {
            vec[i] = static_cast<FieldElement>(x % f.q());
            x /= f.q();
        }
        vectors.push_back(vec);
    }
    std::set<std::vector<FieldElement>> out;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        MatrixGF m(f, r, k);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < k; ++j) m(i, j) = vectors[idx[i]][j];
        }
        const auto red = ghw::rref(m);
        if (red.rank == r) out.emplace(red.reduced.data().begin(), red.reduced.data().end());
        std::size_t pos = 0;
        while (pos < r && ++idx[pos] == vectors.size()) idx[pos++] = 0;
        if (pos == r) break;
    }
    return out;
}

/// Cyclic code generated by the polynomial `poly` (ascending coefficients)
/// in GF(q)[x]/(x^n - 1): the row space of all n cyclic shifts.
inline std::optional<LinearCode> cyclic_from(const FiniteField& f, std::size_t n,
                                             const std::vector<FieldElement>& poly) {
    MatrixGF shifts(f, n, n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < poly.size(); ++i) shifts(s, (i + s) % n) = poly[i];
    }
    const auto red = ghw::rref(shifts);
    if (red.rank == 0) return std::nullopt;
    MatrixGF g(f, red.rank, n);
    for (std::size_t i = 0; i < red.rank; ++i) {
        for (std::size_t j = 0; j < n; ++j) g(i, j) = red.reduced(i, j);
    }
    return LinearCode(g);
}

}  // namespace oracle
