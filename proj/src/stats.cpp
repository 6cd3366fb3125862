#include "sdt/stats.hpp"

#include <cmath>

#include "sdt/codes.hpp"

namespace sdt {

double entropy(unsigned q, double x) {
    if (q < 2) throw DomainError("entropy: q >= 2 required");
    if (x < 0.0 || x > 1.0) throw DomainError("entropy: x outside [0,1]");
    const double lq = std::log(static_cast<double>(q));
    double acc = 0.0;
    if (x > 0.0) acc -= x * (std::log(x / (q - 1)) / lq);
    if (x < 1.0) acc -= (1.0 - x) * (std::log(1.0 - x) / lq);
    return acc;
}

namespace {

double bisect_entropy(unsigned q, double y, double lo, double hi, bool increasing) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < 1e-12) break;
        const bool below = entropy(q, mid) < y;
        if (below == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double entropy_inv_minus(unsigned q, double y) {
    if (y < 0.0 || y > 1.0) throw DomainError("entropy_inv_minus: y outside [0,1]");
    return bisect_entropy(q, y, 0.0, (q - 1.0) / q, true);
}

double entropy_inv_plus(unsigned q, double y) {
    const double floor_val = std::log(q - 1.0) / std::log(static_cast<double>(q));
    if (y < floor_val - 1e-12 || y > 1.0)
        throw DomainError("entropy_inv_plus: y outside [log_q(q-1), 1]");
    return bisect_entropy(q, std::max(y, floor_val), (q - 1.0) / q, 1.0, false);
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class int_pow(std::uint64_t base, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

mpz_class sphere_size(std::size_t n, std::size_t t, unsigned q) {
    if (t > n) throw DomainError("sphere_size: t > n");
    return binomial(n, t) * int_pow(q - 1, t);
}

double sphere_exponent(unsigned q, double tau) {
    return entropy(q, tau);
}

std::size_t gv_distance(std::size_t n, std::size_t k, unsigned q) {
    if (k > n) throw DomainError("gv_distance: k > n");
    const mpz_class budget = int_pow(q, n - k);
    mpz_class sum = 1, term = 1;  // weight-0 term
    std::size_t t = 0;
    while (t < n) {
        // term(t+1) = term(t) * (n-t)/(t+1) * (q-1)
        term *= static_cast<unsigned long>(n - t);
        term /= static_cast<unsigned long>(t + 1);
        term *= q - 1;
        if (sum + term > budget) break;
        sum += term;
        ++t;
    }
    return t;
}

double tau_minus(unsigned q, double rate) {
    if (rate <= 0.0 || rate >= 1.0) throw DomainError("tau_minus: R outside (0,1)");
    return entropy_inv_minus(q, 1.0 - rate);
}

double tau_plus(unsigned q, double rate) {
    const double limit = 1.0 - std::log(q - 1.0) / std::log(static_cast<double>(q));
    if (rate > limit + 1e-12) throw DomainError("tau_plus: defined only for R <= 1 - log_q(q-1)");
    return entropy_inv_plus(q, 1.0 - rate);
}

mpq_class expected_solutions(std::size_t n, std::size_t k, std::size_t t, unsigned q) {
    mpq_class r(sphere_size(n, t, q), int_pow(q, n - k));
    r.canonicalize();
    return r;
}

MomentBounds moment_bounds(std::size_t n, std::size_t k, std::size_t t, unsigned q, double a) {
    if (a <= 0.0) throw DomainError("moment_bounds: a > 0 required");
    const double mu = expected_solutions(n, k, t, q).get_d();
    return MomentBounds{mu / a, (q - 1) * mu / (a * a)};
}

double statistical_distance(const std::vector<double>& p, const std::vector<double>& r) {
    if (p.size() != r.size())
        throw SupportMismatchError("statistical_distance: support sizes differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::fabs(p[i] - r[i]);
    return 0.5 * acc;
}

double statistical_distance_max_form(const std::vector<double>& p, const std::vector<double>& r) {
    if (p.size() != r.size())
        throw SupportMismatchError("statistical_distance_max_form: support sizes differ");
    if (p.size() > 20) throw TooLargeError("statistical_distance_max_form: support too large");
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
        double dp = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (mask >> i & 1) dp += p[i] - r[i];
        best = std::max(best, std::fabs(dp));
    }
    return best;
}

namespace {

double log2_sphere_d(std::size_t n, std::size_t t, unsigned q) {
    double lg = 0;
    for (std::size_t i = 0; i < t; ++i)
        lg += std::log2(static_cast<double>(n - i)) - std::log2(static_cast<double>(i + 1));
    return lg + static_cast<double>(t) * std::log2(static_cast<double>(q - 1));
}

}  // namespace

double syndrome_distance_exact(const FqMatrix& h, std::size_t t) {
    const FieldCtx& f = h.ctx();
    const std::size_t n = h.cols(), r = h.rows();
    if (log2_sphere_d(n, t, f.q()) > 22.0)
        throw TooLargeError("syndrome_distance_exact: sphere exceeds 2^22");
    double rq = static_cast<double>(r) * std::log2(static_cast<double>(f.q()));
    if (rq > 22.0) throw TooLargeError("syndrome_distance_exact: syndrome space exceeds 2^22");
    std::size_t buckets = 1;
    for (std::size_t i = 0; i < r; ++i) buckets *= f.q();
    std::vector<std::uint64_t> hist(buckets, 0);
    std::uint64_t total = 0;

    // recursive sphere walk with incremental syndrome
    FqVector syn(f, r);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < r; ++i) key = key * f.q() + syn[i];
            ++hist[key];
            ++total;
            return;
        }
        for (std::size_t j = start; j + left <= n; ++j)
            for (std::uint32_t v = 1; v < f.q(); ++v) {
                for (std::size_t i = 0; i < r; ++i) syn.set(i, f.add(syn[i], f.mul(v, h(i, j))));
                rec(j + 1, left - 1);
                for (std::size_t i = 0; i < r; ++i) syn.set(i, f.sub(syn[i], f.mul(v, h(i, j))));
            }
    };
    rec(0, t);

    const double uniform = 1.0 / static_cast<double>(buckets);
    double acc = 0.0;
    for (std::uint64_t c : hist)
        acc += std::fabs(static_cast<double>(c) / static_cast<double>(total) - uniform);
    return 0.5 * acc;
}

double lhl_bound(std::size_t n, std::size_t k, std::size_t t, unsigned q) {
    if (k == n) return 0.0;  // no parity checks: the (empty) syndrome is exact
    mpq_class ratio(int_pow(q, n - k) - 1, sphere_size(n, t, q));
    ratio.canonicalize();
    return 0.5 * std::sqrt(ratio.get_d());
}

double lhl_empirical(std::size_t n, std::size_t k, std::size_t t, unsigned q,
                     std::size_t samples, std::uint64_t seed) {
    FieldCtx ctx(q);
    Rng rng(seed);
    double acc = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        FqMatrix h = random_matrix(ctx, n - k, n, rng);
        acc += syndrome_distance_exact(h, t);
    }
    return acc / static_cast<double>(samples);
}

double fixed_matrix_tail(double eps) {
    if (eps <= 0.0 || eps > 1.0) throw DomainError("fixed_matrix_tail: eps outside (0,1]");
    return std::sqrt(eps);
}

double bernoulli_lhl_bound(std::size_t n, std::size_t k, double tau) {
    if (tau < 0.0 || tau > 0.5)
        throw DomainError("bernoulli_lhl_bound: tau outside [0, 1/2]");
    const double inner = std::pow(2.0, -static_cast<double>(k)) *
                         std::pow(1.0 + (1.0 - 2.0 * tau) * (1.0 - 2.0 * tau),
                                  static_cast<double>(n));
    return 0.5 * std::sqrt(inner);
}

double bernoulli_lhl_empirical(std::size_t n, std::size_t k, double tau, std::size_t samples,
                               std::uint64_t seed) {
    if (n > 24) throw TooLargeError("bernoulli_lhl_empirical: n > 24");
    if (tau < 0.0 || tau > 0.5) throw DomainError("bernoulli_lhl_empirical: bad tau");
    FieldCtx ctx(2);
    Rng rng(seed);
    const std::size_t r = n - k;
    const std::size_t buckets = std::size_t{1} << r;
    // weight-indexed Bernoulli mass
    std::vector<double> mass(n + 1);
    for (std::size_t w = 0; w <= n; ++w)
        mass[w] = std::pow(tau, static_cast<double>(w)) *
                  std::pow(1.0 - tau, static_cast<double>(n - w));
    double acc = 0.0;
    for (std::size_t sample = 0; sample < samples; ++sample) {
        FqMatrix h = random_matrix(ctx, r, n, rng);
        std::vector<std::uint32_t> cols(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t c = 0;
            for (std::size_t i = 0; i < r; ++i) c |= h(i, j) << i;
            cols[j] = c;
        }
        std::vector<double> hist(buckets, 0.0);
        // walk all errors in gray-code order, flipping one position at a time
        std::uint32_t syn = 0;
        int weight = 0;
        std::uint64_t e = 0;
        hist[0] += mass[0];
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
            const unsigned bit = static_cast<unsigned>(__builtin_ctzll(i));
            e ^= std::uint64_t{1} << bit;
            weight += (e >> bit & 1) ? 1 : -1;
            syn ^= cols[bit];
            hist[syn] += mass[static_cast<std::size_t>(weight)];
        }
        const double uniform = 1.0 / static_cast<double>(buckets);
        double d = 0.0;
        for (double p : hist) d += std::fabs(p - uniform);
        acc += 0.5 * d;
    }
    return acc / static_cast<double>(samples);
}

double min_distance_concentration(std::size_t n, double rate, unsigned q, double eps,
                                  std::size_t samples, std::uint64_t seed) {
    FieldCtx ctx(q);
    const std::size_t k = static_cast<std::size_t>(rate * static_cast<double>(n));
    if (static_cast<double>(k) * std::log2(static_cast<double>(q)) > 22.0)
        throw TooLargeError("min_distance_concentration: q^k exceeds 2^22");
    const double tm = tau_minus(q, rate);
    const double lo = (1.0 - eps) * tm, hi = (1.0 + eps) * tm;
    Rng rng(seed);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        LinearCode code = random_code(ctx, n, k, RandomCodeModel::parity_check, rng.next());
        const double rel =
            static_cast<double>(min_distance_bruteforce(code)) / static_cast<double>(n);
        if (rel > lo && rel < hi) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace sdt
