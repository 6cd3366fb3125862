#include "sdt/reductions.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace sdt {

ThreeDmInstance parse_3dm(std::istream& in) {
    std::size_t t_size = 0, count = 0;
    if (!(in >> t_size >> count)) throw ParseError("3dm: bad header");
    ThreeDmInstance inst;
    inst.t_size = t_size;
    std::set<std::array<std::uint32_t, 3>> seen;
    for (std::size_t i = 0; i < count; ++i) {
        std::array<std::uint32_t, 3> u{};
        if (!(in >> u[0] >> u[1] >> u[2])) throw ParseError("3dm: truncated triple list");
        for (auto v : u)
            if (v < 1 || v > t_size) throw ParseError("3dm: coordinate out of range");
        if (!seen.insert(u).second) throw ParseError("3dm: duplicate triple");
        inst.triples.push_back(u);
    }
    return inst;
}

ThreeDmInstance parse_3dm_string(const std::string& text) {
    std::istringstream is(text);
    return parse_3dm(is);
}

std::string render_3dm(const ThreeDmInstance& inst) {
    std::ostringstream os;
    os << inst.t_size << ' ' << inst.triples.size() << '\n';
    for (const auto& u : inst.triples) os << u[0] << ' ' << u[1] << ' ' << u[2] << '\n';
    return os.str();
}

FqMatrix tdm_to_matrix(const ThreeDmInstance& inst) {
    FieldCtx f2(2);
    const std::size_t t = inst.t_size;
    FqMatrix h(f2, 3 * t, inst.triples.size());
    for (std::size_t j = 0; j < inst.triples.size(); ++j)
        for (std::size_t c = 0; c < 3; ++c) h.set(c * t + inst.triples[j][c] - 1, j, 1);
    return h;
}

DecodingInstance tdm_decoding_instance(const ThreeDmInstance& inst) {
    FqMatrix h = tdm_to_matrix(inst);
    FieldCtx f2(2);
    FqVector ones(f2, h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) ones.set(i, 1);
    return DecodingInstance{f2, std::move(h), std::move(ones), inst.t_size, std::nullopt};
}

bool is_valid_matching(const ThreeDmInstance& inst, const std::vector<std::uint32_t>& support) {
    if (support.size() != inst.t_size) return false;
    std::set<std::uint32_t> used[3];
    for (auto j : support) {
        if (j >= inst.triples.size()) return false;
        for (std::size_t c = 0; c < 3; ++c)
            if (!used[c].insert(inst.triples[j][c]).second) return false;
    }
    return true;
}

ThreeDmInstance random_satisfiable_3dm(std::size_t t_size, std::size_t extra, std::uint64_t seed) {
    Rng rng(seed);
    ThreeDmInstance inst;
    inst.t_size = t_size;
    std::set<std::array<std::uint32_t, 3>> seen;
    // planted perfect matching from two random permutations
    std::vector<std::uint32_t> py(t_size), pz(t_size);
    for (std::size_t i = 0; i < t_size; ++i) py[i] = pz[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = t_size; i > 1; --i) {
        std::swap(py[i - 1], py[rng.below(i)]);
        std::swap(pz[i - 1], pz[rng.below(i)]);
    }
    for (std::size_t i = 0; i < t_size; ++i) {
        std::array<std::uint32_t, 3> u = {static_cast<std::uint32_t>(i + 1), py[i] + 1, pz[i] + 1};
        seen.insert(u);
        inst.triples.push_back(u);
    }
    while (inst.triples.size() < t_size + extra) {
        std::array<std::uint32_t, 3> u = {static_cast<std::uint32_t>(rng.below(t_size)) + 1,
                                          static_cast<std::uint32_t>(rng.below(t_size)) + 1,
                                          static_cast<std::uint32_t>(rng.below(t_size)) + 1};
        if (seen.insert(u).second) inst.triples.push_back(u);
    }
    // shuffle so the planted matching is not the prefix
    for (std::size_t i = inst.triples.size(); i > 1; --i)
        std::swap(inst.triples[i - 1], inst.triples[rng.below(i)]);
    return inst;
}

LpnOracle::LpnOracle(std::size_t k, double tau, std::uint64_t seed)
    : k_(k), tau_(tau), secret_(FieldCtx(2), k), rng_(seed) {
    if (tau < 0.0 || tau >= 0.5) throw DomainError("LpnOracle: tau outside [0, 1/2)");
    secret_ = random_vector(FieldCtx(2), k, rng_);
    noise_threshold_ = static_cast<std::uint64_t>(tau * 9007199254740992.0);  // tau * 2^53
}

LpnOracle::Sample LpnOracle::query() {
    ++queries_;
    FqVector a = random_vector(FieldCtx(2), k_, rng_);
    std::uint32_t dot = 0;
    for (std::size_t i = 0; i < k_; ++i) dot ^= a[i] & secret_[i];
    const std::uint32_t noise = (rng_.next() >> 11) < noise_threshold_ ? 1 : 0;
    return Sample{std::move(a), dot ^ noise};
}

LpnCollection lpn_collect(LpnOracle& oracle, std::size_t n, bool white_box) {
    if (n < oracle.k()) throw DomainError("lpn_collect: need at least k samples");
    FieldCtx f2(2);
    FqMatrix g(f2, oracle.k(), n);
    FqVector y(f2, n);
    FqVector error(f2, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto sample = oracle.query();
        for (std::size_t i = 0; i < oracle.k(); ++i) g.set(i, j, sample.a[i]);
        y.set(j, sample.bit);
        std::uint32_t clean = 0;
        for (std::size_t i = 0; i < oracle.k(); ++i)
            clean ^= sample.a[i] & oracle.debug_secret()[i];
        error.set(j, sample.bit ^ clean);
    }
    LpnCollection out{NoisyCodewordInstance{f2, std::move(g), std::move(y), 0, std::nullopt},
                      std::nullopt, std::nullopt};
    const double tau = oracle.tau();
    if (white_box) {
        const std::size_t w = hamming_weight(error);
        out.inst.t = w;
        out.inst.planted = error;
        out.realized_weight = w;
        out.secret = oracle.debug_secret();
    } else {
        out.inst.t = static_cast<std::size_t>(
            std::ceil(tau * n + 3.0 * std::sqrt(n * tau * (1.0 - tau))));
    }
    return out;
}

int std_predictor(const DdpOracle& ddp, const FqMatrix& h, const FqVector& s, const FqVector& r,
                  Rng& rng) {
    if (h.ctx().q() != 2) throw DomainError("std_predictor: stated for binary codes only");
    const std::size_t rows = h.rows(), n = h.cols();
    FqVector u = random_vector(h.ctx(), rows, rng);
    FqMatrix hp(h.ctx(), rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) hp.set(i, j, h(i, j) ^ (u[i] & r[j]));
    // The oracle answers 1 on planted-looking inputs; the complement of its
    // bit agrees with x.r with probability 1/2 + advantage.
    return 1 - ddp(hp, s);
}

AdvantageEstimate ddp_advantage(const DdpOracle& ddp, std::size_t n, std::size_t k, std::size_t t,
                                unsigned q, std::size_t samples, std::uint64_t seed) {
    FieldCtx ctx(q);
    Rng rng(seed);
    std::uint64_t hits1 = 0, n1 = 0, hits0 = 0, n0 = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        FqMatrix h = random_matrix(ctx, n - k, n, rng);
        const bool planted = rng.below(2) == 1;
        FqVector s(ctx, n - k);
        if (planted) {
            FqVector x = random_weight_vector(ctx, n, t, rng);
            s = h.mul_vec_t(x);
        } else {
            s = random_vector(ctx, n - k, rng);
        }
        const int answer = ddp(h, s);
        if (planted) {
            ++n1;
            hits1 += answer == 1;
        } else {
            ++n0;
            hits0 += answer == 1;
        }
    }
    const double p1 = n1 ? static_cast<double>(hits1) / n1 : 0.0;
    const double p0 = n0 ? static_cast<double>(hits0) / n0 : 0.0;
    AdvantageEstimate est;
    est.estimate = 0.5 * (p1 - p0);
    est.sigma = 0.5 * std::sqrt((n1 ? p1 * (1 - p1) / n1 : 0.0) + (n0 ? p0 * (1 - p0) / n0 : 0.0));
    return est;
}

}  // namespace sdt
