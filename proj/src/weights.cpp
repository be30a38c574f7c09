#include "ghw/weights.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "ghw/error.hpp"
#include "support_kernel.hpp"

namespace ghw {

namespace {

using Clock = std::chrono::steady_clock;

unsigned resolve_threads(unsigned requested) {
    if (requested == 0) requested = std::thread::hardware_concurrency();
    return std::max(1u, requested);
}

template <class Body>
void run_parallel(unsigned threads, Body&& body) {
    if (threads == 1) {
        body(0u);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                body(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

/// Visits every subspace in E_w^r: supports of size w in lexicographic order
/// (strided across threads), and for each the RREF blocks of SubspaceStream.
/// visit(thread, block, rows) returns false to stop the whole round.
template <class Visit>
void enumerate_round(const FiniteField& f, std::size_t k, std::size_t r, std::size_t w,
                     bool low_mem, unsigned threads, Visit&& visit) {
    std::optional<SubspaceList> cached;
    if (!low_mem) cached.emplace(r, w, f);
    std::atomic<bool> stop{false};
    run_parallel(threads, [&](unsigned t) {
        Combinations supports(k, w);
        std::size_t index = 0;
        while (!stop.load(std::memory_order_relaxed) && supports.next()) {
            if (index++ % threads != t) continue;
            const std::vector<std::size_t>& rows = supports.current();
            if (cached) {
                for (std::size_t i = 0; i < cached->count(); ++i) {
                    if (!visit(t, cached->at(i), rows)) {
                        stop = true;
                        return;
                    }
                }
            } else {
                SubspaceStream stream(r, w, f);
                while (stream.next()) {
                    if (!visit(t, stream.entries(), rows)) {
                        stop = true;
                        return;
                    }
                }
            }
        }
    });
}

struct Candidate {
    std::size_t weight;
    std::size_t matrix;
    std::vector<FieldElement> block;
    std::vector<std::size_t> rows;
};

void keep_better(std::optional<Candidate>& slot, std::size_t weight, std::size_t matrix,
                 std::span<const FieldElement> block, const std::vector<std::size_t>& rows) {
    if (slot && slot->weight <= weight) return;
    slot = Candidate{weight, matrix, {block.begin(), block.end()}, rows};
}

void check_nested(const LinearCode& c1, const LinearCode& c2) {
    if (!c1.contains(c2)) {
        throw Error(ErrorKind::NotNested, "second code is not a subcode of the first");
    }
}

/// Shared machinery for one code (and optionally a subcode C2 for the
/// relative variants). Bounded searches use the information-set matrices;
/// exhaustive ones use the plain generator.
class Searcher {
public:
    enum class Matrices { InfoSets, Generator };

    Searcher(const LinearCode& c, const LinearCode* c2, const ComputeOptions& opts,
             Matrices which)
        : code_(c), opts_(opts), threads_(resolve_threads(opts.threads)) {
        if (c2) {
            check_nested(c, *c2);
            h2_.emplace(right_kernel_basis(c2->generator()));
        }
        if (which == Matrices::Generator) {
            mats_ = {c.generator()};
            reds_ = {0};
        } else {
            InfoSetDecomposition info;
            if (opts.info_sets) {
                validate(*opts.info_sets, c);
                info = *opts.info_sets;
            } else {
                info = information(c);
            }
            mats_ = std::move(info.mats);
            reds_ = std::move(info.reds);
        }
        kernel_.emplace(mats_);
    }

    GhwResult solve(std::size_t r, std::size_t seed_lower);
    std::size_t exhaustive_min(std::size_t r);
    std::map<std::size_t, BigInt> histogram(std::size_t r);

private:
    bool admissible(std::size_t j, std::span<const FieldElement> block, std::size_t r,
                    std::span<const std::size_t> rows) const {
        if (!h2_) return true;
        const MatrixGF d = kernel_->encode(j, block, r, rows);
        return rank(mat_mul(*h2_, d.transpose())) == r;
    }

    std::size_t cyclic_lower(std::size_t r) {
        if (!opts_.use_cyclic_bound) return 0;
        if (!bch_) {
            bch_ = 0;
            try {
                if (is_cyclic(code_)) bch_ = bch_bound(code_);
            } catch (const Error&) {
                bch_ = 0;
            }
        }
        return *bch_ == 0 ? 0 : *bch_ + r - 1;
    }

    Witness make_witness(const Candidate& cand, std::size_t r) const {
        const MatrixGF gen = kernel_->encode(cand.matrix, cand.block, r, cand.rows);
        MatrixGF sub(code_.field(), r, code_.k());
        const std::size_t w = cand.rows.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t t = 0; t < w; ++t) sub(i, cand.rows[t]) = cand.block[i * w + t];
        }
        const std::size_t weight = support(gen).size();
        return Witness{cand.matrix, std::move(sub), gen, weight};
    }

    std::optional<Candidate> search_at_most(std::size_t r, std::size_t target,
                                            std::uint64_t& visited);

    const LinearCode& code_;
    const ComputeOptions& opts_;
    unsigned threads_;
    std::vector<MatrixGF> mats_;
    std::vector<std::size_t> reds_;
    std::optional<detail::SupportKernel> kernel_;
    std::optional<MatrixGF> h2_;
    std::optional<std::size_t> bch_;
};

GhwResult Searcher::solve(std::size_t r, std::size_t seed_lower) {
    const std::size_t n = code_.n();
    const std::size_t k = code_.k();
    const std::size_t m = mats_.size();
    const auto start = Clock::now();

    GhwResult res;
    res.r = r;
    res.initial_upper = n - k + r;
    std::size_t lower = std::max({r, seed_lower, cyclic_lower(r)});
    res.initial_lower = lower;

    std::atomic<std::size_t> upper{res.initial_upper};
    std::vector<std::size_t> last(m, r - 1);
    std::vector<std::optional<Candidate>> best(threads_);
    std::vector<std::uint64_t> visited(threads_), encoded(threads_);

    auto contribution = [&](std::size_t j, std::size_t round) -> std::size_t {
        return round + 1 > reds_[j] ? round + 1 - reds_[j] : 0;
    };
    auto bound = [&] {
        std::size_t sum = 0;
        for (std::size_t j = 0; j < m; ++j) sum += contribution(j, last[j]);
        return sum;
    };

    for (std::size_t w = r; w <= k && lower < upper.load(); ++w) {
        std::vector<std::size_t> selected;
        std::size_t predicted = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (contribution(j, w) > 0) selected.push_back(j);
            predicted += std::max(contribution(j, w), contribution(j, last[j]));
        }
        const std::size_t cur_upper = upper.load();
        if (predicted >= cur_upper) {
            // This round is predicted to be the last one: keep the fewest
            // matrices (lowest redundancy first) that still close the gap,
            // counting the dropped ones at the round they last completed.
            std::vector<std::size_t> order = selected;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return reds_[a] < reds_[b]; });
            std::size_t sum = bound();
            selected.clear();
            for (auto j : order) {
                sum += contribution(j, w) - contribution(j, last[j]);
                selected.push_back(j);
                if (sum >= cur_upper) break;
            }
            std::sort(selected.begin(), selected.end());
        }

        std::vector<std::uint64_t> round_visits(threads_, 0);
        std::vector<detail::SupportKernel::Scratch> scratch(threads_, kernel_->make_scratch());
        enumerate_round(code_.field(), k, r, w, opts_.low_mem, threads_,
                        [&](unsigned t, std::span<const FieldElement> block,
                            const std::vector<std::size_t>& rows) {
                            ++round_visits[t];
                            for (auto j : selected) {
                                const std::size_t cap = upper.load(std::memory_order_relaxed);
                                const std::size_t wt = kernel_->weight(j, block, r, rows, cap, scratch[t]);
                                ++encoded[t];
                                if (wt >= cap) continue;
                                if (!admissible(j, block, r, rows)) continue;
                                atomic_min(upper, wt);
                                keep_better(best[t], wt, j, block, rows);
                            }
                            return true;
                        });

        for (auto j : selected) last[j] = w;
        // bound() covers the subspaces not seen yet; the best one seen caps it.
        lower = std::min(std::max(lower, bound()), upper.load());

        RoundEvent ev;
        ev.r = r;
        ev.w = w;
        ev.lower = lower;
        ev.upper = upper.load();
        ev.active_matrices = selected.size();
        for (auto v : round_visits) ev.subspaces += v;
        ev.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        res.subspaces += ev.subspaces;
        res.rounds.push_back(ev);
        if (opts_.verbose && opts_.progress) opts_.progress(ev);
    }

    res.value = upper.load();
    for (auto e : encoded) res.encodings += e;

    std::optional<Candidate> winner;
    for (auto& b : best) {
        if (b && (!winner || b->weight < winner->weight)) winner = std::move(b);
    }
    if (winner && winner->weight == res.value) {
        res.witness = make_witness(*winner, r);
    } else if (opts_.find_witness) {
        std::uint64_t extra = 0;
        if (auto found = search_at_most(r, res.value, extra)) res.witness = make_witness(*found, r);
        res.witness_search_subspaces = extra;
    }
    return res;
}

std::optional<Candidate> Searcher::search_at_most(std::size_t r, std::size_t target,
                                                  std::uint64_t& visited) {
    std::vector<std::optional<Candidate>> found(threads_);
    std::vector<std::uint64_t> counts(threads_, 0);
    for (std::size_t w = r; w <= code_.k(); ++w) {
        std::vector<detail::SupportKernel::Scratch> scratch(threads_, kernel_->make_scratch());
        enumerate_round(code_.field(), code_.k(), r, w, opts_.low_mem, threads_,
                        [&](unsigned t, std::span<const FieldElement> block,
                            const std::vector<std::size_t>& rows) {
                            ++counts[t];
                            const std::size_t wt = kernel_->weight(0, block, r, rows, target + 1, scratch[t]);
                            if (wt > target || !admissible(0, block, r, rows)) return true;
                            keep_better(found[t], wt, 0, block, rows);
                            return false;
                        });
        for (auto& f : found) {
            if (f) {
                for (auto c : counts) visited += c;
                return f;
            }
        }
    }
    for (auto c : counts) visited += c;
    return std::nullopt;
}

std::size_t Searcher::exhaustive_min(std::size_t r) {
    const std::size_t n = code_.n();
    std::vector<std::size_t> best(threads_, std::numeric_limits<std::size_t>::max());
    for (std::size_t w = r; w <= code_.k(); ++w) {
        std::vector<detail::SupportKernel::Scratch> scratch(threads_, kernel_->make_scratch());
        enumerate_round(code_.field(), code_.k(), r, w, opts_.low_mem, threads_,
                        [&](unsigned t, std::span<const FieldElement> block,
                            const std::vector<std::size_t>& rows) {
                            const std::size_t wt = kernel_->weight(0, block, r, rows, n + 1, scratch[t]);
                            if (wt < best[t] && admissible(0, block, r, rows)) best[t] = wt;
                            return true;
                        });
    }
    return *std::min_element(best.begin(), best.end());
}

std::map<std::size_t, BigInt> Searcher::histogram(std::size_t r) {
    const std::size_t n = code_.n();
    const BigInt work = gaussian_binomial(code_.k(), r, code_.field().q());
    if (work > opts_.work_limit) {
        throw Error(ErrorKind::WorkLimitExceeded,
                    "r = " + std::to_string(r) + " needs " + work.str() +
                        " subspaces, limit is " + std::to_string(opts_.work_limit));
    }
    std::vector<std::vector<std::uint64_t>> hist(threads_, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t w = r; w <= code_.k(); ++w) {
        std::vector<detail::SupportKernel::Scratch> scratch(threads_, kernel_->make_scratch());
        enumerate_round(code_.field(), code_.k(), r, w, opts_.low_mem, threads_,
                        [&](unsigned t, std::span<const FieldElement> block,
                            const std::vector<std::size_t>& rows) {
                            const std::size_t wt = kernel_->weight(0, block, r, rows, n + 1, scratch[t]);
                            if (admissible(0, block, r, rows)) ++hist[t][wt];
                            return true;
                        });
    }
    std::map<std::size_t, BigInt> out;
    for (std::size_t wt = 0; wt <= n; ++wt) {
        std::uint64_t total = 0;
        for (const auto& h : hist) total += h[wt];
        if (total > 0) out[wt] = total;
    }
    return out;
}

void check_rank(std::size_t r, std::size_t max_r) {
    if (r < 1 || r > max_r) {
        throw Error(ErrorKind::BadRank,
                    "r = " + std::to_string(r) + " outside [1, " + std::to_string(max_r) + "]");
    }
}

std::size_t relative_dimension(const LinearCode& c1, const LinearCode& c2) {
    check_nested(c1, c2);
    return c1.k() - c2.k();
}

HierarchyResult chain(Searcher& searcher, std::size_t count, const ComputeOptions& opts) {
    HierarchyResult out;
    for (std::size_t r = 1; r <= count; ++r) {
        const std::size_t seed = r == 1 ? opts.initial_lower.value_or(0) : out.values.back() + 1;
        out.ranks.push_back(searcher.solve(r, seed));
        out.values.push_back(out.ranks.back().value);
    }
    return out;
}

}  // namespace

GhwResult ghw_detailed(const LinearCode& c, std::size_t r, const ComputeOptions& opts) {
    check_rank(r, c.k());
    Searcher s(c, nullptr, opts, Searcher::Matrices::InfoSets);
    return s.solve(r, opts.initial_lower.value_or(0));
}

std::size_t ghw(const LinearCode& c, std::size_t r, const ComputeOptions& opts) {
    return ghw_detailed(c, r, opts).value;
}

HierarchyResult hierarchy_detailed(const LinearCode& c, const ComputeOptions& opts) {
    Searcher s(c, nullptr, opts, Searcher::Matrices::InfoSets);
    return chain(s, c.k(), opts);
}

Hierarchy hierarchy(const LinearCode& c, const ComputeOptions& opts) {
    return hierarchy_detailed(c, opts).values;
}

GhwResult rghw_detailed(const LinearCode& c1, const LinearCode& c2, std::size_t r,
                        const ComputeOptions& opts) {
    check_rank(r, relative_dimension(c1, c2));
    Searcher s(c1, &c2, opts, Searcher::Matrices::InfoSets);
    return s.solve(r, opts.initial_lower.value_or(0));
}

std::size_t rghw(const LinearCode& c1, const LinearCode& c2, std::size_t r,
                 const ComputeOptions& opts) {
    return rghw_detailed(c1, c2, r, opts).value;
}

HierarchyResult rhierarchy_detailed(const LinearCode& c1, const LinearCode& c2,
                                    const ComputeOptions& opts) {
    const std::size_t count = relative_dimension(c1, c2);
    Searcher s(c1, &c2, opts, Searcher::Matrices::InfoSets);
    return chain(s, count, opts);
}

Hierarchy rhierarchy(const LinearCode& c1, const LinearCode& c2, const ComputeOptions& opts) {
    return rhierarchy_detailed(c1, c2, opts).values;
}

Spectrum higher_spectrum(const LinearCode& c, const ComputeOptions& opts) {
    Searcher s(c, nullptr, opts, Searcher::Matrices::Generator);
    Spectrum out;
    out.counts.resize(c.k() + 1);
    out.counts[0][0] = 1;
    for (std::size_t r = 1; r <= c.k(); ++r) out.counts[r] = s.histogram(r);
    return out;
}

Spectrum rhigher_spectrum(const LinearCode& c1, const LinearCode& c2, const ComputeOptions& opts) {
    const std::size_t count = relative_dimension(c1, c2);
    Searcher s(c1, &c2, opts, Searcher::Matrices::Generator);
    Spectrum out;
    out.counts.resize(count + 1);
    out.counts[0][0] = 1;
    for (std::size_t r = 1; r <= count; ++r) out.counts[r] = s.histogram(r);
    return out;
}

Hierarchy wei_duality(const Hierarchy& h, std::size_t n) {
    if (h.size() > n) throw Error(ErrorKind::BadHierarchy, "more values than the length");
    std::vector<bool> taken(n + 1, false);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 1 || h[i] > n || (i > 0 && h[i] <= h[i - 1])) {
            throw Error(ErrorKind::BadHierarchy,
                        "hierarchy must be strictly increasing within [1, " + std::to_string(n) + "]");
        }
        taken[n + 1 - h[i]] = true;
    }
    Hierarchy out;
    for (std::size_t v = 1; v <= n; ++v) {
        if (!taken[v]) out.push_back(v);
    }
    return out;
}

Hierarchy hierarchy_auto(const LinearCode& c, const ComputeOptions& opts) {
    if (c.k() == c.n()) {
        Hierarchy out(c.n());
        for (std::size_t i = 0; i < c.n(); ++i) out[i] = i + 1;
        return out;
    }
    if (2 * c.k() <= c.n()) return hierarchy(c, opts);
    ComputeOptions dual_opts = opts;
    dual_opts.info_sets.reset();
    dual_opts.initial_lower.reset();
    return wei_duality(hierarchy(dual(c), dual_opts), c.n());
}

std::size_t naive_ghw(const LinearCode& c, std::size_t r, bool low_mem) {
    check_rank(r, c.k());
    ComputeOptions opts;
    opts.low_mem = low_mem;
    Searcher s(c, nullptr, opts, Searcher::Matrices::Generator);
    return s.exhaustive_min(r);
}

std::size_t naive_rghw(const LinearCode& c1, const LinearCode& c2, std::size_t r, bool low_mem) {
    check_rank(r, relative_dimension(c1, c2));
    ComputeOptions opts;
    opts.low_mem = low_mem;
    Searcher s(c1, &c2, opts, Searcher::Matrices::Generator);
    return s.exhaustive_min(r);
}

}  // namespace ghw
