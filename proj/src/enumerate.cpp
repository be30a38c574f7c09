#include "ghw/enumerate.hpp"

#include <string>

#include "ghw/error.hpp"

namespace ghw {

namespace {

BigInt big_pow(std::uint64_t q, std::size_t e) {
    BigInt out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= q;
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::BadArgs, what);
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

BigInt gaussian_binomial(std::size_t k, std::size_t r, std::uint64_t q) {
    require(r <= k && q >= 2, "gaussian_binomial requires 0 <= r <= k and q >= 2");
    BigInt num = 1;
    BigInt den = 1;
    const BigInt qk = big_pow(q, k);
    const BigInt qr = big_pow(q, r);
    BigInt qi = 1;
    for (std::size_t i = 0; i < r; ++i) {
        num *= qk - qi;
        den *= qr - qi;
        qi *= q;
    }
    return num / den;
}

BigInt count_full_support(std::size_t w, std::size_t r, std::uint64_t q) {
    require(r <= w && q >= 2, "count_full_support requires r <= w and q >= 2");
    BigInt total = 0;
    for (std::size_t i = 0; i + r <= w; ++i) {
        const BigInt term = binomial(w, i) * gaussian_binomial(w - i, r, q);
        if (i % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

BigInt count_e(std::size_t k, std::size_t w, std::size_t r, std::uint64_t q) {
    require(r <= w && w <= k, "count_e requires r <= w <= k");
    return binomial(k, w) * count_full_support(w, r, q);
}

BigInt expected_enumeration(std::size_t m, std::size_t d, std::size_t r, std::size_t k,
                            std::uint64_t q) {
    require(m >= 1 && d >= 1, "expected_enumeration requires m >= 1 and d >= 1");
    // ceil(d/m - 1) = ceil((d - m) / m), possibly negative.
    const long long num = static_cast<long long>(d) - static_cast<long long>(m);
    const long long den = static_cast<long long>(m);
    const long long upper = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    BigInt sum = 0;
    for (long long w = static_cast<long long>(r); w <= upper; ++w) {
        if (static_cast<std::size_t>(w) > k) break;
        sum += count_e(k, static_cast<std::size_t>(w), r, q);
    }
    return sum * m;
}

Combinations::Combinations(std::size_t n, std::size_t k) : n_(n), k_(k), idx_(k) {
    if (k > n) done_ = true;
}

bool Combinations::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        for (std::size_t i = 0; i < k_; ++i) idx_[i] = i;
        return true;
    }
    std::size_t i = k_;
    while (i > 0) {
        --i;
        if (idx_[i] < n_ - k_ + i) {
            ++idx_[i];
            for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<PivotShape> pivot_shapes(std::size_t r, std::size_t w) {
    require(r >= 1 && r <= w, "pivot_shapes requires 1 <= r <= w");
    std::vector<PivotShape> out;
    Combinations rest(w - 1, r - 1);
    while (rest.next()) {
        PivotShape shape{1};
        for (auto i : rest.current()) shape.push_back(i + 2);
        out.push_back(std::move(shape));
    }
    return out;
}

std::vector<std::vector<FieldElement>> columns_up_to_weight(std::size_t r, std::size_t z,
                                                            const FiniteField& f) {
    require(z >= 1 && z <= r, "columns_up_to_weight requires 1 <= z <= r");
    std::vector<std::vector<FieldElement>> out;
    const std::uint32_t nz = f.q() - 1;
    for (std::size_t y = 1; y <= z; ++y) {
        Combinations positions(r, y);
        while (positions.next()) {
            const auto& pos = positions.current();
            std::vector<std::uint32_t> value(y, 0);  // value[i] + 1 is the entry
            while (true) {
                std::vector<FieldElement> v(r, 0);
                for (std::size_t i = 0; i < y; ++i) v[pos[i]] = static_cast<FieldElement>(value[i] + 1);
                out.push_back(std::move(v));
                std::size_t i = y;
                while (i > 0 && value[i - 1] + 1 == nz) value[--i] = 0;
                if (i == 0) break;
                ++value[i - 1];
            }
        }
    }
    return out;
}

SubspaceStream::SubspaceStream(std::size_t r, std::size_t w, const FiniteField& f)
    : r_(r), w_(w), field_(f), shapes_(w == 0 ? 0 : w - 1, r == 0 ? 0 : r - 1), buf_(r * w, 0) {
    require(r >= 1 && r <= w, "subspaces requires 1 <= r <= w");
    candidates_.resize(r);
}

// Built on first use: the list for z has q^z - 1 entries, and shapes
// without a free column after pivot z never need it.
const std::vector<FieldElement>& SubspaceStream::candidates(std::size_t z) {
    auto& list = candidates_[z - 1];
    if (list.empty()) {
        for (const auto& v : columns_up_to_weight(z, z, field_)) {
            list.insert(list.end(), v.begin(), v.end());
            list.resize(list.size() + (r_ - z), 0);
        }
    }
    return list;
}

void SubspaceStream::write_column(std::size_t col, std::span<const FieldElement> v) {
    for (std::size_t i = 0; i < r_; ++i) buf_[i * w_ + col] = v[i];
}

bool SubspaceStream::start_shape() {
    if (!shapes_.next()) {
        done_ = true;
        return false;
    }
    std::vector<std::size_t> pivots{0};
    for (auto i : shapes_.current()) pivots.push_back(i + 1);
    std::fill(buf_.begin(), buf_.end(), FieldElement{0});
    free_cols_.clear();
    free_z_.clear();
    std::size_t z = 0;
    for (std::size_t col = 0; col < w_; ++col) {
        if (z < r_ && pivots[z] == col) {
            buf_[z * w_ + col] = 1;
            ++z;
        } else {
            free_cols_.push_back(col);
            free_z_.push_back(z);
        }
    }
    digits_.assign(free_cols_.size(), 0);
    for (std::size_t c = 0; c < free_cols_.size(); ++c) {
        write_column(free_cols_[c], {candidates(free_z_[c]).data(), r_});
    }
    in_shape_ = true;
    return true;
}

bool SubspaceStream::next() {
    if (done_) return false;
    if (!in_shape_) return start_shape();
    std::size_t c = free_cols_.size();
    while (c > 0) {
        --c;
        const auto& cand = candidates_[free_z_[c] - 1];
        const std::size_t count = cand.size() / r_;
        if (++digits_[c] < count) {
            write_column(free_cols_[c], {cand.data() + digits_[c] * r_, r_});
            return true;
        }
        digits_[c] = 0;
        write_column(free_cols_[c], {cand.data(), r_});
    }
    in_shape_ = false;
    return start_shape();
}

MatrixGF SubspaceStream::current() const {
    MatrixGF m(field_, r_, w_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < w_; ++j) m(i, j) = buf_[i * w_ + j];
    }
    return m;
}

SubspaceList::SubspaceList(std::size_t r, std::size_t w, const FiniteField& f) : r_(r), w_(w) {
    SubspaceStream stream(r, w, f);
    while (stream.next()) {
        data_.insert(data_.end(), stream.entries().begin(), stream.entries().end());
        ++count_;
    }
}

std::vector<MatrixGF> subspaces(std::size_t r, std::size_t w, const FiniteField& f) {
    std::vector<MatrixGF> out;
    SubspaceStream stream(r, w, f);
    while (stream.next()) out.push_back(stream.current());
    return out;
}

MatrixGF expand_to_support(const MatrixGF& re, std::span<const std::size_t> support_set,
                           std::size_t k) {
    if (support_set.size() != re.cols()) {
        throw Error(ErrorKind::BadArgs, "support size must equal the number of columns");
    }
    for (std::size_t i = 0; i < support_set.size(); ++i) {
        if (support_set[i] < 1 || support_set[i] > k ||
            (i > 0 && support_set[i] <= support_set[i - 1])) {
            throw Error(ErrorKind::BadArgs, "support must be an ascending subset of {1..k}");
        }
    }
    MatrixGF out(re.field(), re.rows(), k);
    for (std::size_t i = 0; i < re.rows(); ++i) {
        for (std::size_t j = 0; j < re.cols(); ++j) out(i, support_set[j] - 1) = re(i, j);
    }
    return out;
}

std::vector<std::vector<std::size_t>> support_choices(std::size_t k, std::size_t w) {
    std::vector<std::vector<std::size_t>> out;
    Combinations c(k, w);
    while (c.next()) {
        std::vector<std::size_t> s;
        for (auto i : c.current()) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace ghw
