#include "sdt/codes.hpp"

#include <cmath>
#include <mutex>

namespace sdt {

struct LinearCode::Cache {
    std::once_flag g_once, h_once;
    std::optional<FqMatrix> g, h;
};

namespace {

// Given S*M*P = (I | A) data from row_reduce_systematic, build the
// complementary matrix (-A^T | I) and undo the column permutation.
FqMatrix complementary_matrix(const SystematicForm& sys, std::size_t n) {
    const FqMatrix& red = sys.reduced;
    const FieldCtx& f = red.ctx();
    const std::size_t r = red.rows();       // rank of the input
    const std::size_t m = n - r;            // rows of the complement
    FqMatrix out(f, m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            out.set(i, sys.colperm[j], f.neg(red(j, r + i)));  // -A^T block
        out.set(i, sys.colperm[r + i], 1);
    }
    return out;
}

}  // namespace

LinearCode LinearCode::from_generator(FqMatrix g) {
    if (rank(g) != g.rows()) throw RankDeficientError("from_generator: G must have full row rank");
    LinearCode c(g.ctx(), g.cols(), g.rows());
    c.cache_ = std::make_shared<Cache>();
    c.cache_->g = std::move(g);
    return c;
}

LinearCode LinearCode::from_parity_check(FqMatrix h) {
    if (rank(h) != h.rows())
        throw RankDeficientError("from_parity_check: H must have full row rank");
    LinearCode c(h.ctx(), h.cols(), h.cols() - h.rows());
    c.cache_ = std::make_shared<Cache>();
    c.cache_->h = std::move(h);
    return c;
}

const FqMatrix& LinearCode::generator() const {
    std::call_once(cache_->g_once, [&] {
        if (cache_->g) return;
        cache_->g = complementary_matrix(row_reduce_systematic(*cache_->h), n_);
    });
    return *cache_->g;
}

const FqMatrix& LinearCode::parity_check() const {
    std::call_once(cache_->h_once, [&] {
        if (cache_->h) return;
        if (k_ == n_)
            cache_->h = FqMatrix(ctx_, 0, n_);
        else
            cache_->h = complementary_matrix(row_reduce_systematic(*cache_->g), n_);
    });
    return *cache_->h;
}

bool LinearCode::contains(const FqVector& y) const {
    return syndrome(y).is_zero();
}

LinearCode dual(const LinearCode& code) {
    if (code.dimension() == code.length())
        throw DomainError("dual: the full space has a trivial dual, not representable here");
    return LinearCode::from_generator(code.parity_check());
}

LinearCode random_code(FieldCtx ctx, std::size_t n, std::size_t k, RandomCodeModel model,
                       std::uint64_t seed, bool resample) {
    if (k == 0 || k >= n) throw DomainError("random_code: need 0 < k < n");
    Rng rng(seed);
    const std::size_t r = model == RandomCodeModel::generator ? k : n - k;
    for (;;) {
        FqMatrix m = random_matrix(ctx, r, n, rng);
        if (!resample || rank(m) == r)
            return model == RandomCodeModel::generator ? LinearCode::from_generator(std::move(m))
                                                       : LinearCode::from_parity_check(std::move(m));
    }
}

LinearCode hamming_code(unsigned r) {
    if (r < 2) throw DomainError("hamming_code: r >= 2 required");
    const std::size_t n = (std::size_t{1} << r) - 1;
    FqMatrix h(FieldCtx(2), r, n);
    for (std::size_t col = 1; col <= n; ++col)
        for (unsigned bit = 0; bit < r; ++bit)
            h.set(r - 1 - bit, col - 1, (col >> bit) & 1);
    return LinearCode::from_parity_check(std::move(h));
}

GrsCode::GrsCode(FieldCtx ctx, std::vector<std::uint32_t> eval_points,
                 std::vector<std::uint32_t> multipliers, std::size_t k)
    : ctx_(ctx), x_(std::move(eval_points)), z_(std::move(multipliers)), k_(k) {
    const std::size_t n = x_.size();
    if (n > ctx_.q()) throw DomainError("GrsCode: n must not exceed q");
    if (z_.size() != n) throw DomainError("GrsCode: x and z length mismatch");
    if (k_ > n) throw DomainError("GrsCode: k must not exceed n");
    for (auto& v : x_) v %= ctx_.q();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (x_[i] == x_[j]) throw DomainError("GrsCode: duplicate evaluation points");
    for (auto& v : z_) {
        v %= ctx_.q();
        if (v == 0) throw DomainError("GrsCode: zero multiplier");
    }
}

FqMatrix GrsCode::generator() const {
    FqMatrix g(ctx_, k_, x_.size());
    for (std::size_t j = 0; j < x_.size(); ++j) {
        std::uint32_t p = z_[j];
        for (std::size_t i = 0; i < k_; ++i) {
            g.set(i, j, p);
            p = ctx_.mul(p, x_[j]);
        }
    }
    return g;
}

std::vector<std::uint32_t> GrsCode::dual_multipliers() const {
    const std::size_t n = x_.size();
    std::vector<std::uint32_t> zp(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t prod = z_[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = ctx_.mul(prod, ctx_.sub(x_[i], x_[j]));
        zp[i] = ctx_.inv(prod);
    }
    return zp;
}

FqMatrix GrsCode::parity_check() const {
    const std::size_t n = x_.size(), r = n - k_;
    const auto zp = dual_multipliers();
    FqMatrix h(ctx_, r, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t p = zp[j];
        for (std::size_t i = 0; i < r; ++i) {
            h.set(i, j, p);
            p = ctx_.mul(p, x_[j]);
        }
    }
    return h;
}

LinearCode GrsCode::code() const {
    return LinearCode::from_generator(generator());
}

void for_each_codeword(const LinearCode& code, const std::function<void(const FqVector&)>& fn) {
    const std::size_t k = code.dimension(), n = code.length();
    const unsigned q = code.ctx().q();
    if (k * std::log2(static_cast<double>(q)) > 24.0)
        throw TooLargeError("for_each_codeword: q^k exceeds 2^24");
    const FqMatrix& g = code.generator();
    FqVector word(code.ctx(), n);
    std::vector<std::uint32_t> digits(k, 0);
    fn(word);
    for (;;) {
        // Odometer increment; add the changed multiple of the affected row.
        std::size_t i = 0;
        while (i < k && digits[i] == q - 1) {
            digits[i] = 0;
            word = word + g.row(i);  // wrap: adding 1 makes total q = 0 mod q
            ++i;
        }
        if (i == k) break;
        digits[i] += 1;
        word = word + g.row(i);
        fn(word);
    }
}

std::size_t min_distance_bruteforce(const LinearCode& code) {
    std::size_t best = code.length() + 1;
    bool first = true;
    for_each_codeword(code, [&](const FqVector& c) {
        if (first) {  // skip the zero codeword visited first
            first = false;
            return;
        }
        best = std::min(best, hamming_weight(c));
    });
    if (best == code.length() + 1) throw DomainError("min_distance_bruteforce: trivial code");
    return best;
}

FqVector coset_representative(const LinearCode& code, const FqVector& s) {
    auto x = solve_linear(code.parity_check(), s);
    if (!x) throw RankDeficientError("coset_representative: syndrome outside column span");
    return *x;
}

bool same_coset(const LinearCode& code, const FqVector& a, const FqVector& b) {
    return code.syndrome(a) == code.syndrome(b);
}

LinearCode puncture(const LinearCode& code, const std::vector<std::uint32_t>& positions) {
    FqMatrix gj = code.generator().columns(positions);
    // Keep an independent row basis; the punctured dimension may drop.
    FqMatrix basis = row_basis(gj);
    if (basis.rows() == 0) {
        // zero code of the punctured length
        return LinearCode::from_parity_check(FqMatrix::identity(code.ctx(), positions.size()));
    }
    return LinearCode::from_generator(std::move(basis));
}

bool is_information_set(const LinearCode& code, const std::vector<std::uint32_t>& positions) {
    if (positions.size() < code.dimension()) return false;
    return rank(code.generator().columns(positions)) == code.dimension();
}

}  // namespace sdt
