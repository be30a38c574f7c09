#include "support_kernel.hpp"

namespace ghw::detail {

namespace {

// Upper bound on the scaled-row table, in elements.
constexpr std::size_t kScaledTableLimit = std::size_t{1} << 25;

}  // namespace

SupportKernel::SupportKernel(const std::vector<MatrixGF>& mats)
    : mats_(mats),
      field_(mats.front().field()),
      n_(mats.front().cols()),
      k_(mats.front().rows()),
      q_(field_.q()),
      p_(field_.p()) {
    if (q_ == 2) {
        mode_ = Mode::Binary;
        words_ = (n_ + 63) / 64;
        bits_.assign(mats_.size() * k_ * words_, 0);
        for (std::size_t j = 0; j < mats_.size(); ++j) {
            for (std::size_t i = 0; i < k_; ++i) {
                std::uint64_t* out = bits_.data() + (j * k_ + i) * words_;
                for (std::size_t x = 0; x < n_; ++x) {
                    if (mats_[j](i, x) != 0) out[x / 64] |= std::uint64_t{1} << (x % 64);
                }
            }
        }
        return;
    }
    mode_ = field_.s() == 1 ? Mode::Prime : (p_ == 2 ? Mode::Char2 : Mode::Generic);
    const std::size_t entries = mats_.size() * k_ * (q_ - 1) * n_;
    if (entries <= kScaledTableLimit) {
        scaled_.resize(entries);
        for (std::size_t j = 0; j < mats_.size(); ++j) {
            for (std::size_t i = 0; i < k_; ++i) {
                for (std::uint32_t a = 1; a < q_; ++a) {
                    FieldElement* out =
                        scaled_.data() + ((j * k_ + i) * (q_ - 1) + (a - 1)) * n_;
                    for (std::size_t x = 0; x < n_; ++x) {
                        out[x] = field_.mul(static_cast<FieldElement>(a), mats_[j](i, x));
                    }
                }
            }
        }
    }
}

SupportKernel::Scratch SupportKernel::make_scratch() const {
    Scratch s;
    s.acc.resize(n_);
    s.mask.resize(n_);
    s.row_bits.resize(words_);
    s.union_bits.resize(words_);
    return s;
}

std::size_t SupportKernel::weight(std::size_t j, std::span<const FieldElement> block,
                                  std::size_t r, std::span<const std::size_t> rows,
                                  std::size_t cap, Scratch& s) const {
    const std::size_t w = rows.size();
    if (mode_ == Mode::Binary) {
        std::fill(s.union_bits.begin(), s.union_bits.end(), 0);
        const std::uint64_t* base = bits_.data() + j * k_ * words_;
        std::size_t count = 0;
        for (std::size_t i = 0; i < r; ++i) {
            std::fill(s.row_bits.begin(), s.row_bits.end(), 0);
            for (std::size_t t = 0; t < w; ++t) {
                if (block[i * w + t] == 0) continue;
                const std::uint64_t* g = base + rows[t] * words_;
                for (std::size_t x = 0; x < words_; ++x) s.row_bits[x] ^= g[x];
            }
            count = 0;
            for (std::size_t x = 0; x < words_; ++x) {
                s.union_bits[x] |= s.row_bits[x];
                count += static_cast<std::size_t>(std::popcount(s.union_bits[x]));
            }
            if (count >= cap) return count;
        }
        return count;
    }

    std::fill(s.mask.begin(), s.mask.end(), 0);
    std::size_t count = 0;
    const MatrixGF& g = mats_[j];
    for (std::size_t i = 0; i < r; ++i) {
        std::fill(s.acc.begin(), s.acc.end(), 0);
        for (std::size_t t = 0; t < w; ++t) {
            const FieldElement a = block[i * w + t];
            if (a == 0) continue;
            if (!scaled_.empty()) {
                const FieldElement* src = scaled(j, rows[t], a);
                switch (mode_) {
                    case Mode::Prime:
                        for (std::size_t x = 0; x < n_; ++x) s.acc[x] += src[x];
                        break;
                    case Mode::Char2:
                        for (std::size_t x = 0; x < n_; ++x) s.acc[x] ^= src[x];
                        break;
                    default:
                        for (std::size_t x = 0; x < n_; ++x) {
                            s.acc[x] = field_.add(static_cast<FieldElement>(s.acc[x]), src[x]);
                        }
                        break;
                }
            } else {
                const auto src = g.row(rows[t]);
                for (std::size_t x = 0; x < n_; ++x) {
                    const FieldElement v = field_.mul(a, src[x]);
                    s.acc[x] = mode_ == Mode::Prime
                                   ? s.acc[x] + v
                                   : field_.add(static_cast<FieldElement>(s.acc[x]), v);
                }
            }
        }
        if (mode_ == Mode::Prime) {
            for (std::size_t x = 0; x < n_; ++x) {
                if (!s.mask[x] && s.acc[x] % p_ != 0) {
                    s.mask[x] = 1;
                    ++count;
                }
            }
        } else {
            for (std::size_t x = 0; x < n_; ++x) {
                if (!s.mask[x] && s.acc[x] != 0) {
                    s.mask[x] = 1;
                    ++count;
                }
            }
        }
        if (count >= cap) return count;
    }
    return count;
}

MatrixGF SupportKernel::encode(std::size_t j, std::span<const FieldElement> block,
                               std::size_t r, std::span<const std::size_t> rows) const {
    const std::size_t w = rows.size();
    const MatrixGF& g = mats_[j];
    MatrixGF out(field_, r, n_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t t = 0; t < w; ++t) {
            const FieldElement a = block[i * w + t];
            if (a == 0) continue;
            const auto src = g.row(rows[t]);
            for (std::size_t x = 0; x < n_; ++x) {
                out(i, x) = field_.add(out(i, x), field_.mul(a, src[x]));
            }
        }
    }
    return out;
}

}  // namespace ghw::detail
