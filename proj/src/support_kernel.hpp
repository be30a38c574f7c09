#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghw/gf.hpp"
#include "ghw/matrix.hpp"

namespace ghw::detail {

/// Evaluates |supp(E * G_j)| for subspaces E given as an r x w coefficient
/// block placed on w rows of G_j. The hot path of every search.
class SupportKernel {
public:
    struct Scratch {
        std::vector<std::uint32_t> acc;
        std::vector<std::uint8_t> mask;
        std::vector<std::uint64_t> row_bits;
        std::vector<std::uint64_t> union_bits;
    };

    explicit SupportKernel(const std::vector<MatrixGF>& mats);

    std::size_t n() const noexcept { return n_; }

    Scratch make_scratch() const;

    /// Support size of the code subspace spanned by the rows of `block`
    /// (r x rows.size(), row-major) applied to rows `rows` (0-based) of
    /// matrix j. Returns as soon as the count reaches `cap`, so any result
    /// >= cap only means "at least cap".
    std::size_t weight(std::size_t j, std::span<const FieldElement> block, std::size_t r,
                       std::span<const std::size_t> rows, std::size_t cap, Scratch& s) const;

    /// Full r x n generator of the encoded subspace.
    MatrixGF encode(std::size_t j, std::span<const FieldElement> block, std::size_t r,
                    std::span<const std::size_t> rows) const;

private:
    enum class Mode { Binary, Prime, Char2, Generic };

    const FieldElement* scaled(std::size_t j, std::size_t row, FieldElement a) const noexcept {
        return scaled_.data() + ((j * k_ + row) * (q_ - 1) + (a - 1)) * n_;
    }

    std::vector<MatrixGF> mats_;
    FiniteField field_;
    Mode mode_;
    std::size_t n_;
    std::size_t k_;
    std::uint32_t q_;
    std::uint32_t p_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;      // Binary: mats x k x words
    std::vector<FieldElement> scaled_;     // a * row for a in 1..q-1, when it fits
};

}  // namespace ghw::detail
