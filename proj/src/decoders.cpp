#include "sdt/decoders.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace sdt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double log2_binom(double n, double k) {
    if (k < 0 || k > n) return -1e300;
    return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

double log2_sphere(double n, double t, unsigned q) {
    return log2_binom(n, t) + t * std::log2(static_cast<double>(q - 1));
}

std::vector<std::uint32_t> complement_of(const std::vector<std::uint32_t>& sorted_set,
                                         std::size_t n) {
    std::vector<std::uint32_t> comp;
    comp.reserve(n - sorted_set.size());
    std::size_t p = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (p < sorted_set.size() && sorted_set[p] == i)
            ++p;
        else
            comp.push_back(i);
    }
    return comp;
}

void check_packable(std::size_t symbols, unsigned q, const char* who) {
    if (static_cast<double>(symbols) * std::log2(static_cast<double>(q)) > 62.0)
        throw TooLargeError(std::string(who) + ": q^window exceeds the packable 2^62 range");
}

std::uint64_t pack_window(const std::vector<std::uint32_t>& v, std::size_t lo, std::size_t hi,
                          unsigned q) {
    std::uint64_t key = 0;
    for (std::size_t i = lo; i < hi; ++i) key = key * q + v[i];
    return key;
}

std::uint64_t pack_window_neg(const std::vector<std::uint32_t>& v, std::size_t lo, std::size_t hi,
                              const FieldCtx& f) {
    std::uint64_t key = 0;
    for (std::size_t i = lo; i < hi; ++i) key = key * f.q() + f.neg(v[i]);
    return key;
}

// Sparse error fragment: (position, value) pairs on the full column range.
using Sparse = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

FqVector scatter(const FieldCtx& f, std::size_t n, const Sparse& sp) {
    FqVector e(f, n);
    for (auto [pos, val] : sp) e.set(pos, val);
    return e;
}

struct ListEntry {
    std::vector<std::uint32_t> value;  // running syndrome contribution, length r
    Sparse err;
};

// All weight-w fragments on `positions` against the columns of h, each with
// its syndrome contribution. Stops at `cap` entries.
std::vector<ListEntry> enumerate_fragments(const FqMatrix& h,
                                           const std::vector<std::uint32_t>& positions,
                                           std::size_t w, std::size_t cap) {
    const FieldCtx& f = h.ctx();
    const std::size_t r = h.rows();
    std::vector<ListEntry> out;
    std::vector<std::uint32_t> syn(r, 0);
    Sparse frag;
    bool full = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        if (full) return;
        if (left == 0) {
            out.push_back(ListEntry{syn, frag});
            full = out.size() >= cap;
            return;
        }
        for (std::size_t idx = start; idx + left <= positions.size() && !full; ++idx) {
            const std::uint32_t col = positions[idx];
            for (std::uint32_t val = 1; val < f.q(); ++val) {
                for (std::size_t i = 0; i < r; ++i) syn[i] = f.add(syn[i], f.mul(val, h(i, col)));
                frag.emplace_back(col, val);
                rec(idx + 1, left - 1);
                frag.pop_back();
                for (std::size_t i = 0; i < r; ++i) syn[i] = f.sub(syn[i], f.mul(val, h(i, col)));
            }
        }
    };
    rec(0, w);
    return out;
}

// `count` distinct random weight-w fragments on `positions` (n <= 64).
std::vector<ListEntry> sample_fragments(const FqMatrix& h,
                                        const std::vector<std::uint32_t>& positions, std::size_t w,
                                        std::size_t count, Rng& rng) {
    const FieldCtx& f = h.ctx();
    const std::size_t r = h.rows();
    std::vector<ListEntry> out;
    std::set<Sparse> seen;
    while (out.size() < count) {
        auto pick = rng.subset(static_cast<std::uint32_t>(positions.size()),
                               static_cast<std::uint32_t>(w));
        Sparse frag;
        for (auto local : pick)
            frag.emplace_back(positions[local], 1 + static_cast<std::uint32_t>(rng.below(f.q() - 1)));
        if (!seen.insert(frag).second) continue;
        std::vector<std::uint32_t> syn(r, 0);
        for (auto [pos, val] : frag)
            for (std::size_t i = 0; i < r; ++i) syn[i] = f.add(syn[i], f.mul(val, h(i, pos)));
        out.push_back(ListEntry{std::move(syn), std::move(frag)});
    }
    return out;
}

// Uniform thinning of a fully enumerated list down to `target` entries.
void thin_to(std::vector<ListEntry>& list, std::size_t target, Rng& rng) {
    for (std::size_t i = list.size(); i > target; --i) {
        const std::size_t victim = static_cast<std::size_t>(rng.below(i));
        std::swap(list[victim], list[i - 1]);
        list.pop_back();
    }
}

// Sort-merge join of two lists on value windows [lo, hi): keeps pairs with
// window(a.value + b.value) = 0.
std::vector<ListEntry> merge_lists(const FieldCtx& f, const std::vector<ListEntry>& a,
                                   const std::vector<ListEntry>& b, std::size_t lo, std::size_t hi,
                                   std::size_t cap) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> ka(a.size()), kb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        ka[i] = {pack_window(a[i].value, lo, hi, f.q()), static_cast<std::uint32_t>(i)};
    for (std::size_t i = 0; i < b.size(); ++i)
        kb[i] = {pack_window_neg(b[i].value, lo, hi, f), static_cast<std::uint32_t>(i)};
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    std::vector<ListEntry> out;
    std::size_t ia = 0, ib = 0;
    const std::size_t r = a.empty() ? 0 : a[0].value.size();
    while (ia < ka.size() && ib < kb.size() && out.size() < cap) {
        if (ka[ia].first < kb[ib].first) {
            ++ia;
        } else if (kb[ib].first < ka[ia].first) {
            ++ib;
        } else {
            std::size_t ea = ia;
            while (ea < ka.size() && ka[ea].first == ka[ia].first) ++ea;
            std::size_t eb = ib;
            while (eb < kb.size() && kb[eb].first == kb[ib].first) ++eb;
            for (std::size_t x = ia; x < ea && out.size() < cap; ++x)
                for (std::size_t y = ib; y < eb && out.size() < cap; ++y) {
                    const ListEntry& u = a[ka[x].second];
                    const ListEntry& v = b[kb[y].second];
                    ListEntry m;
                    m.value.resize(r);
                    for (std::size_t i = 0; i < r; ++i) m.value[i] = f.add(u.value[i], v.value[i]);
                    m.err = u.err;
                    m.err.insert(m.err.end(), v.err.begin(), v.err.end());
                    out.push_back(std::move(m));
                }
            ia = ea;
            ib = eb;
        }
    }
    return out;
}

std::uint64_t auto_budget(double log2_success) {
    // 1000 x ceil(1/p), saturating well below overflow.
    if (log2_success < -50.0) return std::uint64_t{1} << 60;
    double inv = std::pow(2.0, -log2_success);
    return static_cast<std::uint64_t>(1000.0 * std::ceil(std::max(1.0, inv)));
}

// Restart-parallel driver: workers run iterations with substreams of the
// seed; the first verified batch of solutions wins. Deterministic for
// workers == 1.
SolveReport run_restarts(
    unsigned workers, std::uint64_t seed, std::uint64_t max_iterations,
    const std::function<std::vector<FqVector>(Rng&, std::uint64_t&)>& iteration) {
    const auto start = Clock::now();
    SolveReport report;
    if (workers <= 1) {
        Rng rng = Rng(seed).stream(0);
        std::uint64_t subcalls = 0;
        for (std::uint64_t it = 0; it < max_iterations; ++it) {
            ++report.iterations;
            auto sols = iteration(rng, subcalls);
            if (!sols.empty()) {
                report.solutions = std::move(sols);
                report.success = true;
                break;
            }
        }
        report.sub_invocations = subcalls;
        report.time_ms = elapsed_ms(start);
        return report;
    }
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> iterations{0}, subcalls_total{0};
    std::mutex sink_mutex;
    std::vector<FqVector> winner;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    const std::uint64_t per_worker = max_iterations / workers + 1;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                Rng rng = Rng(seed).stream(w);
                std::uint64_t subcalls = 0;
                for (std::uint64_t it = 0; it < per_worker && !stop.load(); ++it) {
                    iterations.fetch_add(1);
                    auto sols = iteration(rng, subcalls);
                    if (!sols.empty()) {
                        std::lock_guard<std::mutex> lk(sink_mutex);
                        if (winner.empty()) winner = std::move(sols);
                        stop.store(true);
                        break;
                    }
                }
                subcalls_total.fetch_add(subcalls);
            } catch (...) {
                std::lock_guard<std::mutex> lk(sink_mutex);
                if (!first_error) first_error = std::current_exception();
                stop.store(true);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    report.solutions = std::move(winner);
    report.success = !report.solutions.empty();
    report.iterations = iterations.load();
    report.sub_invocations = subcalls_total.load();
    report.time_ms = elapsed_ms(start);
    return report;
}

// Instances coming out of reductions may carry dependent rows; solvers work
// on the equivalent full-row-rank system.
DecodingInstance normalized_or_throw(const DecodingInstance& inst) {
    if (rank(inst.h) == inst.h.rows()) return inst;
    auto norm = normalize_full_rank(inst);
    if (!norm) throw RankDeficientError("decoder: inconsistent parity system, no solutions");
    return *norm;
}

}  // namespace

std::size_t prange_weight_class(std::size_t t, std::size_t n, std::size_t k, unsigned q) {
    const std::size_t m = (q - 1) * (n - k) / q;  // floor
    if (t < m) return 0;
    if (t <= k + m) return std::min(t - m, k);
    return k;
}

std::optional<FqVector> prange_candidate(const FqMatrix& h, const FqVector& s,
                                         const std::vector<std::uint32_t>& info_set,
                                         const FqVector& x) {
    const std::size_t n = h.cols();
    const auto ibar = complement_of(info_set, n);
    auto elim = left_reduce_to_identity(h.columns(ibar));
    if (!elim) return std::nullopt;
    FqVector v = s - h.columns(info_set).mul_vec_t(x);
    FqVector e_ibar = elim->mul_vec_t(v);
    FqVector e(h.ctx(), n);
    for (std::size_t i = 0; i < ibar.size(); ++i) e.set(ibar[i], e_ibar[i]);
    for (std::size_t i = 0; i < info_set.size(); ++i) e.set(info_set[i], x[i]);
    return e;
}

SolveReport prange(const DecodingInstance& inst0, const PrangeConfig& cfg) {
    const DecodingInstance inst = normalized_or_throw(inst0);
    const std::size_t n = inst.n(), k = inst.k(), t = inst.t;
    const unsigned q = inst.ctx.q();
    const std::size_t j = prange_weight_class(t, n, k, q);

    std::uint64_t budget = cfg.max_iterations;
    if (budget == 0) {
        const double num = log2_sphere(static_cast<double>(n - k), static_cast<double>(t - j), q);
        const double den = std::min(static_cast<double>(n - k) * std::log2(double(q)),
                                    log2_sphere(double(n), double(t), q));
        budget = auto_budget(num - den);
    }

    return run_restarts(cfg.workers, cfg.seed, budget, [&](Rng& rng, std::uint64_t&) {
        std::vector<FqVector> found;
        for (int tries = 0; tries < 64; ++tries) {
            auto info_set = rng.subset(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
            FqVector x = random_weight_vector(inst.ctx, k, j, rng);
            auto cand = prange_candidate(inst.h, inst.s, info_set, x);
            if (!cand) continue;  // singular H_Ibar: pick another set
            if (hamming_weight(*cand) == t && verify(inst, *cand)) found.push_back(std::move(*cand));
            return found;
        }
        throw SingularStreakError("prange: 64 consecutive singular information-set draws");
    });
}

std::vector<FqVector> dumer_collisions(const FqMatrix& h, const FqVector& s, std::size_t t,
                                       Rng& rng, std::optional<std::size_t> list_size,
                                       std::size_t cap) {
    const FieldCtx& f = h.ctx();
    const std::size_t n = h.cols(), r = h.rows();
    check_packable(r, f.q(), "dumer");
    const std::size_t half = (n + 1) / 2;
    auto left = rng.subset(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(half));
    auto right = complement_of(left, n);
    const std::size_t t1 = t / 2, t2 = t - t1;
    if (t1 > left.size() || t2 > right.size()) return {};

    auto build = [&](const std::vector<std::uint32_t>& positions, std::size_t w) {
        if (list_size) {
            const double full = log2_sphere(double(positions.size()), double(w), f.q());
            if (full <= std::log2(static_cast<double>(*list_size)) || full <= 20.0) {
                auto all = enumerate_fragments(h, positions, w, cap);
                if (all.size() > *list_size) thin_to(all, *list_size, rng);
                return all;
            }
            return sample_fragments(h, positions, w, *list_size, rng);
        }
        return enumerate_fragments(h, positions, w, cap);
    };
    std::vector<ListEntry> l1 = build(left, t1);
    std::vector<ListEntry> l2 = build(right, t2);
    // Fold the target syndrome into the right-hand list.
    for (auto& entry : l2)
        for (std::size_t i = 0; i < r; ++i) entry.value[i] = f.sub(entry.value[i], s[i]);
    auto merged = merge_lists(f, l1, l2, 0, r, cap);
    std::vector<FqVector> out;
    out.reserve(merged.size());
    for (auto& m : merged) out.push_back(scatter(f, n, m.err));
    return out;
}

SolveReport dumer(const DecodingInstance& inst0, const DumerConfig& cfg) {
    const DecodingInstance inst = normalized_or_throw(inst0);
    const auto start = Clock::now();
    SolveReport report;
    Rng rng = Rng(cfg.seed).stream(0);
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::uint64_t it = 0; it < cfg.max_iterations; ++it) {
        ++report.iterations;
        ++report.sub_invocations;
        auto found = dumer_collisions(inst.h, inst.s, inst.t, rng, cfg.list_size,
                                      cfg.candidate_cap);
        for (auto& e : found)
            if (verify(inst, e) && distinct.insert(e.entries()).second)
                report.solutions.push_back(std::move(e));
        if (!report.solutions.empty() && !cfg.collect_all) break;
    }
    report.success = !report.solutions.empty();
    report.time_ms = elapsed_ms(start);
    return report;
}

namespace {

struct WagnerPlan {
    std::size_t window = 0;       // merge width per intermediate level
    std::uint64_t list_size = 0;  // q^window target for the base lists
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::size_t> weights;
};

WagnerPlan wagner_plan(const FqMatrix& h, std::size_t t, const WagnerConfig& cfg, Rng& rng) {
    const FieldCtx& f = h.ctx();
    const std::size_t n = h.cols(), r = h.rows();
    const unsigned a = cfg.depth;
    const std::size_t parts = std::size_t{1} << a;
    if (a < 1 || parts > n) throw DomainError("wagner: depth out of range");
    const double ell_real = cfg.mode == WagnerMode::one_solution
                                ? static_cast<double>(r) / static_cast<double>(a + 1)
                                : static_cast<double>(r) / static_cast<double>(a);
    WagnerPlan plan;
    plan.window = std::max<std::size_t>(1, static_cast<std::size_t>(ell_real));
    if (a == 1) plan.window = r;  // a single merge joins on the full syndrome
    check_packable(plan.window, f.q(), "wagner");
    plan.list_size = 1;
    for (std::size_t i = 0; i < plan.window; ++i) plan.list_size *= f.q();

    // Random balanced partition of the columns.
    std::vector<std::uint32_t> perm = rng.subset(static_cast<std::uint32_t>(n),
                                                 static_cast<std::uint32_t>(n));
    // subset() sorts; reshuffle for a random partition
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    plan.blocks.resize(parts);
    plan.weights.resize(parts);
    std::size_t at = 0;
    for (std::size_t b = 0; b < parts; ++b) {
        std::size_t len = n / parts + (b < n % parts ? 1 : 0);
        plan.blocks[b].assign(perm.begin() + at, perm.begin() + at + len);
        std::sort(plan.blocks[b].begin(), plan.blocks[b].end());
        at += len;
        plan.weights[b] = t / parts + (b < t % parts ? 1 : 0);
    }
    // Feasibility: every base list must reach size q^ceil(ell).
    const double need = std::ceil(ell_real) * std::log2(static_cast<double>(f.q()));
    for (std::size_t b = 0; b < parts; ++b) {
        if (plan.weights[b] > plan.blocks[b].size())
            throw DepthInfeasibleError("wagner: block weight exceeds block length");
        const double have =
            log2_sphere(double(plan.blocks[b].size()), double(plan.weights[b]), f.q());
        if (a > 1 && have + 1e-12 < need)
            throw DepthInfeasibleError("wagner: base lists cannot reach q^ceil(l)");
    }
    return plan;
}

}  // namespace

SolveReport wagner(const DecodingInstance& inst0, const WagnerConfig& cfg,
                   WagnerLevelSizes* level_sizes) {
    const DecodingInstance inst = normalized_or_throw(inst0);
    const FieldCtx& f = inst.ctx;
    const std::size_t n = inst.n(), r = inst.h.rows();
    const auto start = Clock::now();
    SolveReport report;
    Rng rng = Rng(cfg.seed).stream(0);
    if (level_sizes) level_sizes->clear();

    for (std::uint64_t it = 0; it < cfg.max_iterations; ++it) {
        ++report.iterations;
        WagnerPlan plan = wagner_plan(inst.h, inst.t, cfg, rng);
        const std::size_t parts = plan.blocks.size();
        std::vector<std::vector<ListEntry>> lists(parts);
        for (std::size_t b = 0; b < parts; ++b) {
            const double full =
                log2_sphere(double(plan.blocks[b].size()), double(plan.weights[b]), f.q());
            if (full <= std::log2(static_cast<double>(plan.list_size)) + 1e-12 || full <= 20.0) {
                lists[b] = enumerate_fragments(inst.h, plan.blocks[b], plan.weights[b],
                                               cfg.candidate_cap);
                if (lists[b].size() > plan.list_size)
                    thin_to(lists[b], static_cast<std::size_t>(plan.list_size), rng);
            } else {
                lists[b] = sample_fragments(inst.h, plan.blocks[b], plan.weights[b],
                                            static_cast<std::size_t>(plan.list_size), rng);
            }
        }
        // Fold s into the last list so every merge targets zero.
        for (auto& entry : lists[parts - 1])
            for (std::size_t i = 0; i < r; ++i) entry.value[i] = f.sub(entry.value[i], inst.s[i]);

        std::size_t level = 1;
        while (lists.size() > 1) {
            const bool final_level = lists.size() == 2;
            const std::size_t lo = final_level ? 0 : r - level * plan.window;
            const std::size_t hi = final_level ? r - (level - 1) * plan.window : lo + plan.window;
            std::vector<std::vector<ListEntry>> next;
            for (std::size_t i = 0; i + 1 < lists.size(); i += 2)
                next.push_back(
                    merge_lists(f, lists[i], lists[i + 1], lo, hi, cfg.candidate_cap));
            if (level_sizes) {
                std::vector<std::size_t> sizes;
                for (auto& l : next) sizes.push_back(l.size());
                level_sizes->push_back(std::move(sizes));
            }
            lists = std::move(next);
            ++level;
        }
        for (auto& entry : lists[0]) {
            FqVector e = scatter(f, n, entry.err);
            if (verify(inst, e)) report.solutions.push_back(std::move(e));
        }
        if (!report.solutions.empty() || cfg.mode == WagnerMode::amortized) break;
    }
    report.success = !report.solutions.empty();
    report.time_ms = elapsed_ms(start);
    return report;
}

std::optional<IsdSplit> isd_prepare(const FqMatrix& h, const FqVector& s,
                                    const std::vector<std::uint32_t>& j_set, std::size_t ell) {
    const std::size_t r = h.rows();
    auto jbar = complement_of(j_set, h.cols());
    auto elim = left_reduce_to_identity(h.columns(jbar));
    if (!elim) return std::nullopt;
    FqMatrix sh = *elim * h.columns(j_set);
    FqVector ss = elim->mul_vec_t(s);
    const std::size_t upper = r - ell;
    FqMatrix h1(h.ctx(), upper, j_set.size()), h2(h.ctx(), ell, j_set.size());
    FqVector s1(h.ctx(), upper), s2(h.ctx(), ell);
    for (std::size_t i = 0; i < upper; ++i) {
        h1.set_row(i, sh.row(i));
        s1.set(i, ss[i]);
    }
    for (std::size_t i = 0; i < ell; ++i) {
        h2.set_row(i, sh.row(upper + i));
        s2.set(i, ss[upper + i]);
    }
    return IsdSplit{j_set, std::move(jbar), std::move(*elim), std::move(h1), std::move(h2),
                    std::move(s1), std::move(s2)};
}

FqVector isd_lift(const IsdSplit& split, std::size_t n, const FqVector& e2) {
    const FieldCtx& f = split.h_upper.ctx();
    FqVector e_jbar = split.s_upper - split.h_upper.mul_vec_t(e2);
    FqVector e(f, n);
    for (std::size_t i = 0; i < split.jbar.size(); ++i) e.set(split.jbar[i], e_jbar[i]);
    for (std::size_t i = 0; i < split.j_set.size(); ++i) e.set(split.j_set[i], e2[i]);
    return e;
}

IsdIterationOutcome isd_iterate_once(const FqMatrix& h, const FqVector& s, std::size_t t,
                                     const IsdConfig& cfg, Rng& rng) {
    const std::size_t n = h.cols(), r = h.rows();
    IsdIterationOutcome outcome;
    std::optional<IsdSplit> split;
    for (int tries = 0; tries < 64 && !split; ++tries) {
        auto j_set = rng.subset(static_cast<std::uint32_t>(n),
                                static_cast<std::uint32_t>(n - r + cfg.ell));
        split = isd_prepare(h, s, j_set, cfg.ell);
    }
    if (!split) throw SingularStreakError("isd: 64 consecutive singular draws of J");
    outcome.prepared = true;

    std::vector<FqVector> candidates;
    switch (cfg.sub) {
        case IsdConfig::Sub::exhaustive:
            candidates = enumerate_solutions(split->h_lower, split->s_lower, cfg.p);
            break;
        case IsdConfig::Sub::dumer:
            candidates = dumer_collisions(split->h_lower, split->s_lower, cfg.p, rng,
                                          cfg.list_size, cfg.candidate_cap);
            break;
        case IsdConfig::Sub::wagner: {
            DecodingInstance sub{h.ctx(), split->h_lower, split->s_lower, cfg.p, std::nullopt};
            WagnerConfig wc;
            wc.depth = cfg.depth;
            wc.mode = WagnerMode::amortized;
            wc.seed = rng.next();
            wc.candidate_cap = cfg.candidate_cap;
            candidates = wagner(sub, wc).solutions;
            break;
        }
    }
    if (candidates.size() > cfg.candidate_cap)
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(cfg.candidate_cap),
                         candidates.end());
    outcome.candidates = candidates.size();
    for (auto& e2 : candidates) {
        FqVector e = isd_lift(*split, n, e2);
        if (hamming_weight(e) == t) outcome.accepted.push_back(std::move(e));
    }
    return outcome;
}

SolveReport isd(const DecodingInstance& inst0, const IsdConfig& cfg) {
    const DecodingInstance inst = normalized_or_throw(inst0);
    const std::size_t n = inst.n(), k = inst.k(), t = inst.t, r = n - k;
    const unsigned q = inst.ctx.q();
    if (cfg.ell > r) throw DomainError("isd: l out of range");
    if (cfg.p > std::min(t, k + cfg.ell)) throw DomainError("isd: p out of range");
    // Sub-decoder feasibility on the punctured [k+l, k] code at weight p.
    if (cfg.sub == IsdConfig::Sub::dumer && cfg.list_size) {
        const double half = log2_sphere(double(k + cfg.ell) / 2.0, double(cfg.p) / 2.0, q);
        if (std::log2(static_cast<double>(*cfg.list_size)) > half + 1e-9)
            throw DepthInfeasibleError("isd: Dumer list size exceeds the half-sphere");
    }
    if (cfg.sub == IsdConfig::Sub::wagner) {
        if (cfg.ell == 0)
            throw DomainError("isd: the birthday sub-decoder needs l >= 1 merge symbols");
        const double parts = std::pow(2.0, cfg.depth);
        const double have = log2_sphere(double(k + cfg.ell) / parts, double(cfg.p) / parts, q);
        if (static_cast<double>(cfg.ell) / cfg.depth * std::log2(double(q)) > have + 1e-9)
            throw DepthInfeasibleError("isd: Wagner depth infeasible for (p, l)");
    }

    std::uint64_t budget = cfg.max_iterations;
    if (budget == 0) {
        // expected candidates per iteration x per-candidate acceptance
        const double cand = log2_sphere(double(k + cfg.ell), double(cfg.p), q) -
                            double(cfg.ell) * std::log2(double(q));
        const double accept =
            log2_sphere(double(r - cfg.ell), double(t - cfg.p), q) -
            std::min(double(r - cfg.ell) * std::log2(double(q)),
                     log2_sphere(double(n), double(t), q) - double(cfg.ell) * std::log2(double(q)));
        budget = auto_budget(std::min(0.0, cand) + std::min(0.0, accept));
    }

    return run_restarts(cfg.workers, cfg.seed, budget, [&](Rng& rng, std::uint64_t& subcalls) {
        ++subcalls;
        auto outcome = isd_iterate_once(inst.h, inst.s, t, cfg, rng);
        std::vector<FqVector> verified;
        for (auto& e : outcome.accepted)
            if (verify(inst, e)) verified.push_back(std::move(e));
        return verified;
    });
}

}  // namespace sdt
