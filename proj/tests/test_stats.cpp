#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdt/codes.hpp"
#include "sdt/instances.hpp"
#include "sdt/stats.hpp"
#include "support.hpp"

using namespace sdt;

TEST_CASE("entropy endpoint and maximum values") {
    for (unsigned q : {2u, 3u, 5u}) {
        CHECK(entropy(q, (q - 1.0) / q) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(entropy(q, 0.0) == 0.0);
        CHECK(entropy(q, 1.0) ==
              doctest::Approx(std::log(q - 1.0) / std::log(double(q))).epsilon(1e-12));
    }
}

TEST_CASE("binary entropy inverse at 1/2 hits the known GV point") {
    CHECK(entropy_inv_minus(2, 0.5) == doctest::Approx(0.110028).epsilon(1e-5));
    CHECK(entropy(2, entropy_inv_minus(2, 0.5)) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("entropy inverses round-trip on both branches") {
    for (unsigned q : {2u, 3u, 5u}) {
        for (double x = 0.01; x < (q - 1.0) / q; x += 0.05)
            CHECK(entropy_inv_minus(q, entropy(q, x)) == doctest::Approx(x).epsilon(1e-9));
        for (double x = (q - 1.0) / q + 0.01; x < 0.999; x += 0.05)
            CHECK(entropy_inv_plus(q, entropy(q, x)) == doctest::Approx(x).epsilon(1e-9));
    }
    CHECK_THROWS_AS(entropy_inv_plus(3, 0.1), DomainError);  // below log_3(2)
}

TEST_CASE("sphere sizes exactly") {
    CHECK(sphere_size(10, 0, 3) == 1);
    CHECK(sphere_size(7, 1, 2) == 7);
    CHECK(sphere_size(6, 2, 3) == mpz_class(15 * 4));
}

TEST_CASE("sphere exponent sandwich") {
    const unsigned q = 3;
    const double tau = 0.2;
    for (std::size_t n : {50u, 100u, 200u}) {
        const std::size_t t = static_cast<std::size_t>(tau * n);
        const double lg = mpz_sizeinbase(sphere_size(n, t, q).get_mpz_t(), 2);
        // crude upper bound on log2 is fine for the sandwich in base q
        double logq_sphere = 0.0;
        {
            mpz_class s = sphere_size(n, t, q);
            mpf_class f(s, 256);
            logq_sphere = std::log(mpf_get_d(f.get_mpf_t())) / std::log(double(q));
            // large values stay within double range here (n <= 200)
        }
        const double h = sphere_exponent(q, double(t) / double(n));
        CHECK(logq_sphere / double(n) <= h + 1e-9);
        CHECK(logq_sphere / double(n) >=
              h - 2.0 * std::log(double(n)) / (std::log(double(q)) * double(n)));
        (void)lg;
    }
}

TEST_CASE("gv distance exact values and defining inequality") {
    CHECK(gv_distance(7, 4, 2) == 1);  // 1 + 7 = 8 <= 8 < 8 + 21
    CHECK(gv_distance(10, 10, 2) == 0);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const unsigned q = std::array<unsigned, 3>{2, 3, 5}[rng.below(3)];
        const std::size_t n = 2 + rng.below(63);
        const std::size_t k = rng.below(n + 1);
        const std::size_t t = gv_distance(n, k, q);
        mpz_class sum = 0;
        for (std::size_t l = 0; l <= t; ++l) sum += sphere_size(n, l, q);
        CHECK(sum <= int_pow(q, n - k));
        if (t < n) CHECK(sum + sphere_size(n, t + 1, q) > int_pow(q, n - k));
    }
}

TEST_CASE("relative gv distance approaches tau_minus") {
    const double tm = tau_minus(2, 0.5);
    const double rel = static_cast<double>(gv_distance(10000, 5000, 2)) / 10000.0;
    CHECK(std::fabs(rel - tm) < 0.01);
}

TEST_CASE("expected_solutions is the exact rational sphere/q^(n-k)") {
    mpq_class e = expected_solutions(20, 10, 4, 2);
    CHECK(e == mpq_class(4845, 1024));
    CHECK(expected_solutions(16, 8, 0, 3) == mpq_class(1, 6561));  // 1 / 3^8
}

TEST_CASE("monte-carlo coset count matches the expectation and tail bounds") {
    const std::size_t n = 20, k = 10, t = 4, trials = 2000;
    FieldCtx f2(2);
    Rng rng(2);
    FqVector s = random_vector(f2, n - k, rng);
    const double mu = expected_solutions(n, k, t, 2).get_d();
    sdt::test::RunningStats stats;
    std::uint64_t above_2mu = 0, dev_2mu = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        FqMatrix h = random_matrix(f2, n - k, n, rng);
        const double count = static_cast<double>(count_solutions(h, s, t));
        stats.add(count);
        above_2mu += count > 2.0 * mu;
        dev_2mu += std::fabs(count - mu) >= 2.0 * mu;
    }
    CHECK(sdt::test::mean_within_3sigma(stats.mean(), stats.sd(), stats.n, mu));
    MomentBounds mb = moment_bounds(n, k, t, 2, 2.0 * mu);
    CHECK(static_cast<double>(above_2mu) / trials <= mb.markov + 3.0 / std::sqrt(double(trials)));
    CHECK(static_cast<double>(dev_2mu) / trials <=
          mb.chebyshev + 3.0 / std::sqrt(double(trials)));
}

TEST_CASE("statistical distance basics") {
    std::vector<double> p = {0.5, 0.5, 0.0};
    CHECK(statistical_distance(p, p) == 0.0);
    // point mass vs uniform over q symbols: (q-1)/q
    for (unsigned q : {2u, 3u, 5u}) {
        std::vector<double> point(q, 0.0), uniform(q, 1.0 / q);
        point[0] = 1.0;
        CHECK(statistical_distance(point, uniform) ==
              doctest::Approx((q - 1.0) / q).epsilon(1e-12));
    }
    CHECK_THROWS_AS(statistical_distance({0.5}, {0.5, 0.5}), SupportMismatchError);
}

TEST_CASE("statistical distance equals the max-over-events form") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 2 + rng.below(11);  // support up to 12
        std::vector<double> p(m), r(m);
        double sp = 0, sr = 0;
        for (std::size_t i = 0; i < m; ++i) {
            p[i] = 1.0 + rng.below(100);
            r[i] = 1.0 + rng.below(100);
            sp += p[i];
            sr += r[i];
        }
        for (std::size_t i = 0; i < m; ++i) {
            p[i] /= sp;
            r[i] /= sr;
        }
        CHECK(statistical_distance(p, r) ==
              doctest::Approx(statistical_distance_max_form(p, r)).epsilon(1e-12));
    }
}

TEST_CASE("statistical distance is symmetric, triangular, and contracts under maps") {
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 3 + rng.below(6);
        auto sample = [&](std::vector<double>& v) {
            double s = 0;
            v.resize(m);
            for (auto& x : v) {
                x = 1.0 + rng.below(50);
                s += x;
            }
            for (auto& x : v) x /= s;
        };
        std::vector<double> p, q_, r;
        sample(p);
        sample(q_);
        sample(r);
        CHECK(statistical_distance(p, q_) == doctest::Approx(statistical_distance(q_, p)));
        CHECK(statistical_distance(p, r) <=
              statistical_distance(p, q_) + statistical_distance(q_, r) + 1e-12);
        // data processing: push both through a random map into a smaller set
        const std::size_t m2 = 2 + rng.below(3);
        std::vector<std::size_t> map(m);
        for (auto& v : map) v = rng.below(m2);
        std::vector<double> fp(m2, 0.0), fq(m2, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            fp[map[i]] += p[i];
            fq[map[i]] += q_[i];
        }
        CHECK(statistical_distance(fp, fq) <= statistical_distance(p, q_) + 1e-12);
    }
}

TEST_CASE("leftover-hash bound values and empirical mean below the bound") {
    CHECK(lhl_bound(16, 16, 3, 2) == 0.0);  // k = n: no parity checks
    const double bound = lhl_bound(16, 8, 6, 2);
    CHECK(bound == doctest::Approx(0.5 * std::sqrt(255.0 / 8008.0)).epsilon(1e-12));
    const double mean = lhl_empirical(16, 8, 6, 2, 60, 3);
    CHECK(mean <= bound);
}

TEST_CASE("dense spheres push the bound below q^-(n-k)/2 and the mean follows") {
    // n=16, k=12: (2^4)^2 = 256 <= C(16,6) = 8008
    const double bound = lhl_bound(16, 12, 6, 2);
    CHECK(bound <= 0.5 * std::pow(2.0, -2.0));
    CHECK(lhl_empirical(16, 12, 6, 2, 60, 4) <= bound);
}

TEST_CASE("fixed matrix tail and the empirical fraction") {
    CHECK(fixed_matrix_tail(1.0) == 1.0);
    CHECK(fixed_matrix_tail(0.04) == doctest::Approx(0.2));
    const double eps = lhl_bound(14, 7, 5, 2);
    const double threshold = std::sqrt(eps);
    FieldCtx f2(2);
    Rng rng(6);
    std::uint64_t above = 0;
    const std::size_t samples = 200;
    for (std::size_t i = 0; i < samples; ++i)
        above += syndrome_distance_exact(random_matrix(f2, 7, 14, rng), 5) >= threshold;
    CHECK(static_cast<double>(above) / samples <=
          threshold + 3.0 * std::sqrt(threshold / samples));
}

TEST_CASE("bernoulli leftover-hash bound and empirical distance") {
    CHECK(bernoulli_lhl_bound(16, 8, 0.5) == doctest::Approx(0.5 * std::pow(2.0, -4.0)));
    CHECK(bernoulli_lhl_bound(16, 8, 0.0) == doctest::Approx(0.5 * std::pow(2.0, 4.0)));
    const double bound = bernoulli_lhl_bound(16, 8, 0.25);
    CHECK(bernoulli_lhl_empirical(16, 8, 0.25, 40, 7) <= bound);
    CHECK_THROWS_AS(bernoulli_lhl_bound(16, 8, 0.7), DomainError);
}

TEST_CASE("minimum distance concentrates around tau_minus") {
    // wide window covers everything
    CHECK(min_distance_concentration(14, 0.5, 2, 20.0, 40, 1) == 1.0);
    // At n=24 the window must admit d_min = 4 (4/24 vs (1+eps) tau-), so the
    // finite-size check runs at eps = 0.9; the law is asymptotic.
    const double frac24 = min_distance_concentration(24, 0.5, 2, 0.9, 150, 2);
    CHECK(frac24 >= 0.9);
    const double frac14 = min_distance_concentration(14, 0.5, 2, 0.9, 150, 3);
    CHECK(frac24 >= frac14 - 0.05);  // non-decreasing trend in n, up to noise
}

TEST_CASE("guards fire on oversized inputs") {
    CHECK_THROWS_AS(syndrome_distance_exact(FqMatrix(FieldCtx(2), 30, 60), 20), TooLargeError);
    CHECK_THROWS_AS(min_distance_concentration(60, 0.5, 2, 0.5, 5, 1), TooLargeError);
}
