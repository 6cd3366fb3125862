#include "sdt/instances.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace sdt {

DecodingInstance gen_dp(FieldCtx ctx, std::size_t n, double rate, double tau,
                        std::uint64_t seed) {
    if (!(rate > 0.0 && rate < 1.0)) throw DomainError("gen_dp: R must lie in (0,1)");
    if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("gen_dp: tau must lie in [0,1]");
    const std::size_t k = static_cast<std::size_t>(rate * static_cast<double>(n));
    const std::size_t t = static_cast<std::size_t>(tau * static_cast<double>(n));
    if (k == 0 || k >= n) throw DomainError("gen_dp: degenerate k");
    Rng rng(seed);
    for (;;) {
        FqMatrix h = random_matrix(ctx, n - k, n, rng);
        if (rank(h) != n - k) continue;
        FqVector x = random_weight_vector(ctx, n, t, rng);
        FqVector s = h.mul_vec_t(x);
        return DecodingInstance{ctx, std::move(h), std::move(s), t, std::move(x)};
    }
}

bool verify(const DecodingInstance& inst, const FqVector& e) {
    if (e.size() != inst.n()) return false;
    return hamming_weight(e) == inst.t && inst.h.mul_vec_t(e) == inst.s;
}

bool verify(const NoisyCodewordInstance& inst, const FqVector& e) {
    if (e.size() != inst.n() || hamming_weight(e) != inst.t) return false;
    // y - e must be a codeword of G: rank((G ; y-e)) stays k.
    FqMatrix stacked(inst.ctx, inst.k() + 1, inst.n());
    for (std::size_t i = 0; i < inst.k(); ++i) stacked.set_row(i, inst.g.row(i));
    stacked.set_row(inst.k(), inst.y - e);
    return rank(stacked) == inst.k();
}

NoisyCodewordInstance syndrome_to_noisy(const DecodingInstance& inst, std::uint64_t seed) {
    LinearCode code = LinearCode::from_parity_check(inst.h);
    FqMatrix g = code.generator();
    auto y0 = solve_linear(inst.h, inst.s);
    if (!y0) throw RankDeficientError("syndrome_to_noisy: inconsistent instance");
    Rng rng(seed);
    FqVector m = random_vector(inst.ctx, g.rows(), rng);
    FqVector y = *y0 + vec_mul(m, g);
    return NoisyCodewordInstance{inst.ctx, std::move(g), std::move(y), inst.t, inst.planted};
}

DecodingInstance noisy_to_syndrome(const NoisyCodewordInstance& inst) {
    LinearCode code = LinearCode::from_generator(inst.g);
    FqMatrix h = code.parity_check();
    FqVector s = h.mul_vec_t(inst.y);
    return DecodingInstance{inst.ctx, std::move(h), std::move(s), inst.t, inst.planted};
}

std::optional<DecodingInstance> normalize_full_rank(const DecodingInstance& inst) {
    const std::size_t r = inst.h.rows(), n = inst.n();
    FqMatrix aug(inst.ctx, r, n + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, inst.h(i, j));
        aug.set(i, n, inst.s[i]);
    }
    FqMatrix basis = row_basis(aug);
    FqMatrix h2(inst.ctx, basis.rows(), n);
    FqVector s2(inst.ctx, basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        bool h_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            h2.set(i, j, basis(i, j));
            h_zero = h_zero && basis(i, j) == 0;
        }
        if (h_zero && basis(i, n) != 0) return std::nullopt;  // 0 = nonzero
        s2.set(i, basis(i, n));
    }
    return DecodingInstance{inst.ctx, std::move(h2), std::move(s2), inst.t, inst.planted};
}

namespace {

double log2_sphere(std::size_t n, std::size_t t, unsigned q) {
    double lg = 0;
    for (std::size_t i = 0; i < t; ++i)
        lg += std::log2(static_cast<double>(n - i)) - std::log2(static_cast<double>(i + 1));
    return lg + static_cast<double>(t) * std::log2(static_cast<double>(q - 1));
}

// Visits every weight-w vector supported on `positions`; syn accumulates
// sum of value * column. fn sees (support positions, values, syndrome).
void visit_weight_vectors(
    const FqMatrix& h, const std::vector<std::uint32_t>& positions, std::size_t w,
    const std::function<void(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&,
                             const FqVector&)>& fn) {
    const FieldCtx& f = h.ctx();
    const std::size_t r = h.rows();
    std::vector<std::uint32_t> support, values;
    FqVector syn(f, r);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            fn(support, values, syn);
            return;
        }
        for (std::size_t idx = start; idx + left <= positions.size(); ++idx) {
            const std::uint32_t col = positions[idx];
            support.push_back(col);
            for (std::uint32_t val = 1; val < f.q(); ++val) {
                for (std::size_t i = 0; i < r; ++i)
                    syn.set(i, f.add(syn[i], f.mul(val, h(i, col))));
                values.push_back(val);
                rec(idx + 1, left - 1);
                values.pop_back();
                for (std::size_t i = 0; i < r; ++i)
                    syn.set(i, f.sub(syn[i], f.mul(val, h(i, col))));
            }
            support.pop_back();
        }
    };
    rec(0, w);
}

std::uint64_t pack_syndrome(const FqVector& v, unsigned q) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < v.size(); ++i) key = key * q + v[i];
    return key;
}

}  // namespace

std::vector<FqVector> enumerate_solutions(const FqMatrix& h, const FqVector& s, std::size_t t) {
    const std::size_t n = h.cols();
    if (log2_sphere(n, t, h.ctx().q()) > 24.0)
        throw TooLargeError("enumerate_solutions: sphere larger than 2^24");
    std::vector<std::uint32_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
    std::vector<FqVector> out;
    visit_weight_vectors(h, all, t,
                         [&](const std::vector<std::uint32_t>& support,
                             const std::vector<std::uint32_t>& values, const FqVector& syn) {
                             if (!(syn == s)) return;
                             FqVector e(h.ctx(), n);
                             for (std::size_t i = 0; i < support.size(); ++i)
                                 e.set(support[i], values[i]);
                             out.push_back(std::move(e));
                         });
    return out;
}

std::uint64_t count_solutions(const FqMatrix& h, const FqVector& s, std::size_t t) {
    const std::size_t n = h.cols();
    const unsigned q = h.ctx().q();
    if (log2_sphere(n, t, q) <= 22.0) {
        std::vector<std::uint32_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
        std::uint64_t cnt = 0;
        visit_weight_vectors(h, all, t,
                             [&](const auto&, const auto&, const FqVector& syn) { cnt += syn == s; });
        return cnt;
    }
    if (t > n / 2) throw TooLargeError("count_solutions: too large for meet-in-the-middle");
    if (static_cast<double>(h.rows()) * std::log2(static_cast<double>(q)) > 62.0)
        throw TooLargeError("count_solutions: syndrome space exceeds packable range");
    // Meet in the middle across a fixed halving of the positions.
    const std::size_t half = n / 2;
    std::vector<std::uint32_t> left, right;
    for (std::size_t i = 0; i < n; ++i)
        (i < half ? left : right).push_back(static_cast<std::uint32_t>(i));
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= t; ++i) {
        if (i > left.size() || t - i > right.size()) continue;
        if (log2_sphere(left.size(), i, q) > 23.0 || log2_sphere(right.size(), t - i, q) > 23.0)
            throw TooLargeError("count_solutions: meet-in-the-middle lists too large");
        std::unordered_map<std::uint64_t, std::uint64_t> table;
        visit_weight_vectors(h, left, i, [&](const auto&, const auto&, const FqVector& syn) {
            ++table[pack_syndrome(syn, q)];
        });
        visit_weight_vectors(h, right, t - i,
                             [&](const auto&, const auto&, const FqVector& syn) {
                                 auto it = table.find(pack_syndrome(s - syn, q));
                                 if (it != table.end()) total += it->second;
                             });
    }
    return total;
}

std::string render_dpi(const DecodingInstance& inst) {
    std::ostringstream os;
    const long long n = static_cast<long long>(inst.n());
    const long long k = n - static_cast<long long>(inst.h.rows());
    os << "DPI 1\n" << inst.ctx.q() << ' ' << n << ' ' << k << ' ' << inst.t << '\n';
    for (std::size_t i = 0; i < inst.h.rows(); ++i) os << inst.h.row(i).str() << '\n';
    os << inst.s.str() << '\n';
    if (inst.planted) os << "# e " << inst.planted->str() << '\n';
    return os.str();
}

DecodingInstance parse_dpi(std::istream& in) {
    std::string magic, version;
    if (!(in >> magic >> version) || magic != "DPI" || version != "1")
        throw ParseError("dpi: bad magic");
    long long q = 0, n = 0, k = 0, t = 0;
    if (!(in >> q >> n >> k >> t) || n <= 0 || t < 0 || k >= n)
        throw ParseError("dpi: bad header");
    FieldCtx ctx(static_cast<unsigned>(q));
    const std::size_t rows = static_cast<std::size_t>(n - k);
    FqMatrix h(ctx, rows, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            long long v;
            if (!(in >> v)) throw ParseError("dpi: truncated H");
            h.set(i, j, static_cast<std::uint32_t>(v));
        }
    FqVector s(ctx, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        long long v;
        if (!(in >> v)) throw ParseError("dpi: truncated syndrome");
        s.set(i, static_cast<std::uint32_t>(v));
    }
    std::optional<FqVector> planted;
    std::string tok;
    if (in >> tok) {
        if (tok != "#") throw ParseError("dpi: unexpected trailer");
        if (!(in >> tok) || tok != "e") throw ParseError("dpi: unexpected trailer");
        FqVector e(ctx, static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            long long v;
            if (!(in >> v)) throw ParseError("dpi: truncated planted error");
            e.set(j, static_cast<std::uint32_t>(v));
        }
        planted = std::move(e);
    }
    return DecodingInstance{ctx, std::move(h), std::move(s), static_cast<std::size_t>(t),
                            std::move(planted)};
}

DecodingInstance parse_dpi_string(const std::string& text) {
    std::istringstream is(text);
    return parse_dpi(is);
}

void write_dpi_file(const DecodingInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << render_dpi(inst);
}

DecodingInstance read_dpi_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    return parse_dpi(in);
}

}  // namespace sdt
