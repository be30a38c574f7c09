#include "ghw/code.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "ghw/error.hpp"

namespace ghw {

namespace {

using Poly = std::vector<FieldElement>;  // ascending coefficients

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const FiniteField& f) {
    trim(a);
    const FieldElement lead_inv = f.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const FieldElement factor = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const FiniteField& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const FieldElement s = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, s);
    }
    return a;
}

FieldElement poly_eval(const Poly& a, FieldElement x, const FiniteField& f) {
    FieldElement acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

// Splitting field GF(q^t) of x^n - 1 together with an embedding of GF(q).
struct SplittingField {
    FiniteField ext;
    std::vector<FieldElement> embed;  // index in GF(q) -> index in ext
    FieldElement alpha;               // primitive n-th root of unity
};

SplittingField splitting_field(const FiniteField& f, std::size_t n) {
    if (n % f.p() == 0) {
        throw Error(ErrorKind::CharacteristicDividesLength,
                    "characteristic " + std::to_string(f.p()) + " divides length " +
                        std::to_string(n));
    }
    std::size_t t = 1;
    std::uint64_t power = f.q() % n;
    while (power % n != 1 % n) {
        power = (power * f.q()) % n;
        ++t;
    }
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < t * f.s(); ++i) {
        order *= f.p();
        if (order > kMaxFieldOrder) {
            throw Error(ErrorKind::FieldTooLarge,
                        "splitting field of x^" + std::to_string(n) + "-1 over " + f.name() +
                            " exceeds 2^16 elements");
        }
    }
    FiniteField ext = FiniteField::build(f.p(), f.s() * static_cast<std::uint32_t>(t));

    std::vector<FieldElement> embed(f.q());
    if (f.s() == 1) {
        std::iota(embed.begin(), embed.end(), FieldElement{0});
    } else {
        // Image of x is a root of f's modulus; its coefficients live in GF(p),
        // whose elements share indices 0..p-1 in both fields.
        const auto& mod = f.modulus();
        std::optional<FieldElement> beta;
        for (std::uint32_t cand = 0; cand < ext.q() && !beta; ++cand) {
            FieldElement acc = 0;
            for (std::size_t i = mod.size(); i-- > 0;) {
                acc = ext.add(ext.mul(acc, static_cast<FieldElement>(cand)),
                              static_cast<FieldElement>(mod[i]));
            }
            if (acc == 0) beta = static_cast<FieldElement>(cand);
        }
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            const auto d = f.digits(static_cast<FieldElement>(a));
            FieldElement acc = 0;
            for (std::size_t i = d.size(); i-- > 0;) {
                acc = ext.add(ext.mul(acc, *beta), static_cast<FieldElement>(d[i]));
            }
            embed[a] = acc;
        }
    }
    const FieldElement alpha = ext.pow(ext.primitive_element(), (ext.q() - 1) / n);
    return {std::move(ext), std::move(embed), alpha};
}

Poly row_poly(const MatrixGF& g, std::size_t i) {
    Poly out(g.row(i).begin(), g.row(i).end());
    trim(out);
    return out;
}

}  // namespace

LinearCode::LinearCode(MatrixGF g) : g_(std::move(g)), reduced_(rref(g_)) {
    if (g_.rows() == 0 || g_.cols() == 0) {
        throw Error(ErrorKind::BadDimension, "generator matrix must be nonempty");
    }
    if (reduced_.rank != g_.rows()) {
        throw Error(ErrorKind::RankDeficient, "generator rows are linearly dependent (rank " +
                                                  std::to_string(reduced_.rank) + " < " +
                                                  std::to_string(g_.rows()) + ")");
    }
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
    return word.size() == n() && in_row_space(reduced_, word);
}

bool LinearCode::contains(const LinearCode& other) const {
    if (other.n() != n() || !(other.field() == field())) return false;
    for (std::size_t i = 0; i < other.k(); ++i) {
        if (!contains(other.generator().row(i))) return false;
    }
    return true;
}

std::size_t LinearCode::zero_columns() const { return n() - support(g_).size(); }

LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n()) {
        throw Error(ErrorKind::ZeroDual, "dual of the full space is the zero code");
    }
    return LinearCode(right_kernel_basis(c.generator()));
}

MatrixGF encode_subspace(const MatrixGF& gj, const MatrixGF& re) {
    if (re.cols() != gj.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "subspace has " + std::to_string(re.cols()) + " columns, generator has " +
                        std::to_string(gj.rows()) + " rows");
    }
    return mat_mul(re, gj);
}

std::size_t support_weight(const MatrixGF& gj, const MatrixGF& re) {
    return support(encode_subspace(gj, re)).size();
}

bool is_cyclic(const LinearCode& c) {
    const std::size_t n = c.n();
    std::vector<FieldElement> shifted(n);
    for (std::size_t i = 0; i < c.k(); ++i) {
        const auto row = c.generator().row(i);
        for (std::size_t j = 0; j < n; ++j) shifted[(j + 1) % n] = row[j];
        if (!c.contains(shifted)) return false;
    }
    return true;
}

std::size_t bch_bound(const LinearCode& c) {
    if (!is_cyclic(c)) throw Error(ErrorKind::NotCyclic, "code is not cyclic");
    const FiniteField& f = c.field();
    const std::size_t n = c.n();
    const SplittingField sf = splitting_field(f, n);

    Poly g(n + 1, 0);  // x^n - 1
    g[0] = f.neg(1);
    g[n] = 1;
    for (std::size_t i = 0; i < c.k(); ++i) g = poly_gcd(g, row_poly(c.generator(), i), f);

    Poly g_ext(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) g_ext[i] = sf.embed[g[i]];

    std::vector<bool> root(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        root[i] = poly_eval(g_ext, sf.ext.pow(sf.alpha, i), sf.ext) == 0;
    }
    std::size_t best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (!root[start] || root[(start + n - 1) % n]) continue;
        std::size_t len = 0;
        while (len < n && root[(start + len) % n]) ++len;
        best = std::max(best, len);
    }
    if (best == 0 && std::all_of(root.begin(), root.end(), [](bool b) { return b; })) best = n;
    return best + 1;
}

LinearCode make_rs(const FiniteField& f, std::size_t k) {
    if (k < 1 || k > f.q()) {
        throw Error(ErrorKind::BadDimension, "Reed-Solomon dimension must be in [1, q]");
    }
    MatrixGF g(f, k, f.q());
    for (std::size_t j = 0; j < k; ++j) {
        for (std::uint32_t x = 0; x < f.q(); ++x) g(j, x) = f.pow(static_cast<FieldElement>(x), j);
    }
    return LinearCode(std::move(g));
}

LinearCode make_rm(const FiniteField& f, std::size_t nu, std::size_t m) {
    if (nu >= f.q()) {
        throw Error(ErrorKind::DegreeOutOfRange, "Reed-Muller degree must be < q");
    }
    if (m < 1) throw Error(ErrorKind::BadArgs, "number of variables must be >= 1");

    // Exponent vectors by total degree, then lexicographically descending.
    std::vector<std::vector<std::size_t>> monomials;
    for (std::size_t deg = 0; deg <= nu; ++deg) {
        std::vector<std::size_t> e(m, 0);
        std::vector<std::vector<std::size_t>> level;
        auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
            if (var + 1 == m) {
                e[var] = left;
                level.push_back(e);
                return;
            }
            for (std::size_t a = left + 1; a-- > 0;) {
                e[var] = a;
                self(self, var + 1, left - a);
            }
        };
        rec(rec, 0, deg);
        monomials.insert(monomials.end(), level.begin(), level.end());
    }

    std::size_t npoints = 1;
    for (std::size_t i = 0; i < m; ++i) npoints *= f.q();
    MatrixGF g(f, monomials.size(), npoints);
    std::vector<FieldElement> point(m);
    for (std::size_t idx = 0; idx < npoints; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = m; i-- > 0;) {
            point[i] = static_cast<FieldElement>(rest % f.q());
            rest /= f.q();
        }
        for (std::size_t row = 0; row < monomials.size(); ++row) {
            FieldElement v = 1;
            for (std::size_t i = 0; i < m; ++i) v = f.mul(v, f.pow(point[i], monomials[row][i]));
            g(row, idx) = v;
        }
    }
    return LinearCode(std::move(g));
}

LinearCode make_bch(const FiniteField& f, std::size_t n, std::size_t delta) {
    if (delta < 1 || delta > n) throw Error(ErrorKind::BadArgs, "designed distance out of range");
    const SplittingField sf = splitting_field(f, n);
    const FiniteField& ext = sf.ext;

    std::vector<bool> zero(n, false);
    for (std::size_t b = 1; b + 1 <= delta; ++b) {
        std::size_t i = b % n;
        while (!zero[i]) {
            zero[i] = true;
            i = (i * f.q()) % n;
        }
    }

    Poly g_ext{1};
    for (std::size_t i = 0; i < n; ++i) {
        if (!zero[i]) continue;
        const FieldElement root = ext.pow(sf.alpha, i);
        Poly next(g_ext.size() + 1, 0);
        for (std::size_t d = 0; d < g_ext.size(); ++d) {
            next[d + 1] = ext.add(next[d + 1], g_ext[d]);
            next[d] = ext.sub(next[d], ext.mul(root, g_ext[d]));
        }
        g_ext = std::move(next);
    }

    std::vector<std::optional<FieldElement>> back(ext.q());
    for (std::uint32_t a = 0; a < f.q(); ++a) back[sf.embed[a]] = static_cast<FieldElement>(a);
    Poly g(g_ext.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!back[g_ext[i]]) throw Error(ErrorKind::BadArgs, "generator polynomial not over base field");
        g[i] = *back[g_ext[i]];
    }

    const std::size_t k = n - (g.size() - 1);
    if (k == 0) throw Error(ErrorKind::BadDimension, "BCH code has dimension 0");
    MatrixGF gen(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t d = 0; d < g.size(); ++d) gen(i, i + d) = g[d];
    }
    return LinearCode(std::move(gen));
}

}  // namespace ghw
