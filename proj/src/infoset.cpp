#include "ghw/infoset.hpp"

#include <algorithm>
#include <string>

#include "ghw/error.hpp"

namespace ghw {

namespace {

// Incremental echelon basis for column vectors of length k.
class ColumnBasis {
public:
    ColumnBasis(const FiniteField& f, std::size_t k) : f_(f), k_(k) {}

    std::size_t rank() const noexcept { return vecs_.size(); }

    // Adds v when it is independent of the basis so far.
    bool try_add(std::vector<FieldElement> v) {
        for (std::size_t b = 0; b < vecs_.size(); ++b) {
            const FieldElement factor = v[pivots_[b]];
            if (factor == 0) continue;
            for (std::size_t i = 0; i < k_; ++i) {
                v[i] = f_.sub(v[i], f_.mul(factor, vecs_[b][i]));
            }
        }
        std::size_t piv = 0;
        while (piv < k_ && v[piv] == 0) ++piv;
        if (piv == k_) return false;
        const FieldElement s = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, s);
        // Keep previous vectors reduced at the new pivot.
        for (auto& u : vecs_) {
            const FieldElement factor = u[piv];
            if (factor == 0) continue;
            for (std::size_t i = 0; i < k_; ++i) u[i] = f_.sub(u[i], f_.mul(factor, v[i]));
        }
        vecs_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    const FiniteField& f_;
    std::size_t k_;
    std::vector<std::vector<FieldElement>> vecs_;
    std::vector<std::size_t> pivots_;
};

std::vector<FieldElement> column(const MatrixGF& g, std::size_t col) {
    std::vector<FieldElement> v(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) v[i] = g(i, col);
    return v;
}

}  // namespace

MatrixGF systematic_on(const MatrixGF& g, const std::vector<std::size_t>& set) {
    const std::size_t k = g.rows();
    std::vector<std::size_t> zero_based(set.size());
    std::transform(set.begin(), set.end(), zero_based.begin(), [](std::size_t c) { return c - 1; });
    // rref([M | I]) = [I | M^-1] when M is invertible.
    const MatrixGF m = g.columns(zero_based);
    MatrixGF aug(g.field(), k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
        aug(i, k + i) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.pivots.size() < k || red.pivots[k - 1] != k) {
        throw Error(ErrorKind::BadArgs, "columns do not form an information set");
    }
    MatrixGF inv(g.field(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) inv(i, j) = red.reduced(i, k + j);
    }
    return mat_mul(inv, g);
}

InfoSetDecomposition information(const LinearCode& c) {
    const MatrixGF& g = c.generator();
    const std::size_t k = c.k();
    const std::vector<std::size_t> nonzero = support(g);
    std::vector<bool> used(c.n() + 1, false);

    InfoSetDecomposition out;
    while (true) {
        ColumnBasis basis(c.field(), k);
        std::vector<std::size_t> set;
        for (auto col : nonzero) {
            if (used[col]) continue;
            if (basis.rank() == k) break;
            if (basis.try_add(column(g, col - 1))) set.push_back(col);
        }
        if (set.empty()) break;
        std::size_t reused = 0;
        for (auto col : nonzero) {
            if (basis.rank() == k) break;
            if (!used[col]) continue;
            if (basis.try_add(column(g, col - 1))) {
                set.push_back(col);
                ++reused;
            }
        }
        std::sort(set.begin(), set.end());
        for (auto col : set) used[col] = true;
        out.mats.push_back(systematic_on(g, set));
        out.sets.push_back(std::move(set));
        out.reds.push_back(reused);
    }
    return out;
}

void validate(const InfoSetDecomposition& info, const LinearCode& c) {
    const std::size_t k = c.k();
    if (info.sets.empty() || info.mats.size() != info.sets.size() ||
        info.reds.size() != info.sets.size()) {
        throw Error(ErrorKind::BadArgs, "decomposition needs m >= 1 sets, matrices and redundancies");
    }
    std::vector<bool> seen(c.n() + 1, false);
    for (std::size_t j = 0; j < info.size(); ++j) {
        const auto& set = info.sets[j];
        const MatrixGF& gj = info.mats[j];
        const std::string where = "information set " + std::to_string(j + 1);
        if (set.size() != k || gj.rows() != k || gj.cols() != c.n()) {
            throw Error(ErrorKind::BadArgs, where + " has the wrong shape");
        }
        std::size_t overlap = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if (set[t] < 1 || set[t] > c.n() || (t > 0 && set[t] <= set[t - 1])) {
                throw Error(ErrorKind::BadArgs, where + " must be ascending in {1..n}");
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (gj(i, set[t] - 1) != (i == t ? 1 : 0)) {
                    throw Error(ErrorKind::BadArgs, where + " is not systematic");
                }
            }
            if (seen[set[t]]) ++overlap;
        }
        for (auto col : set) seen[col] = true;
        if (overlap != info.reds[j]) {
            throw Error(ErrorKind::BadArgs, where + " has inconsistent redundancy");
        }
        if (!same_row_space(gj, c.generator())) {
            throw Error(ErrorKind::BadArgs, where + " does not generate the code");
        }
    }
}

}  // namespace ghw
