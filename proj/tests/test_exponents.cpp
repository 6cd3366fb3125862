#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sdt/exponents.hpp"
#include "sdt/stats.hpp"

using namespace sdt;

namespace {

// Independent re-statement of the short-weight objective for cross-checks.
double f_short(unsigned q, double rate, double tau, double lambda) {
    const double slot = rate + lambda;
    if (lambda < 0 || lambda >= std::min(rate, 1.0 - rate)) return 1e300;
    const double pi = lambda == 0.0 ? 0.0 : slot * entropy_inv_minus(q, 2.0 * lambda / slot);
    if (pi > tau) return 1e300;
    const double arg = (tau - pi) / (1.0 - rate - lambda);
    if (arg > 1.0) return 1e300;
    const double head = std::min(1.0 - rate, entropy(q, tau));
    return lambda + std::max(0.0, head - (1.0 - rate - lambda) * entropy(q, arg) - 2.0 * lambda);
}

double g_large(unsigned q, double rate, double tau, double lambda, double sigma) {
    const double arg = (tau - rate - lambda) / (1.0 - rate - lambda);
    if (arg < 0.0 || arg > 1.0) return 1e300;
    const double head = std::min(1.0 - rate, entropy(q, tau));
    return std::max(sigma, 2.0 * sigma - lambda) +
           std::max(0.0, head - (1.0 - rate - lambda) * entropy(q, arg) - 2.0 * sigma);
}

}  // namespace

TEST_CASE("golden section finds the minimum of a parabola") {
    auto f = [](double x) { return (x - 0.3) * (x - 0.3) + 1.0; };
    CHECK(golden_section_min(f, 0.0, 1.0, 1e-9) == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("prange exponent vanishes on the whole easy interval") {
    for (unsigned q : {2u, 3u, 5u})
        for (double rate : {0.3, 0.5, 0.7}) {
            const double lo = (q - 1.0) / q * (1.0 - rate);
            const double hi = rate + lo;
            for (int i = 1; i < 100; ++i) {
                const double tau = lo + (hi - lo) * i / 100.0;
                CHECK(std::fabs(prange_exponent(q, rate, tau)) < 1e-9);
            }
            CHECK(prange_exponent(q, rate, lo * 0.9) > 1e-6);
            CHECK(prange_exponent(q, rate, std::min(0.999, hi * 1.01 + 1e-3)) > 1e-7);
        }
}

TEST_CASE("binary prange exponent is symmetric around 1/2") {
    for (double rate : {0.3, 0.5, 0.7})
        for (double tau = 0.01; tau < 0.5; tau += 0.017)
            CHECK(prange_exponent(2, rate, tau) ==
                  doctest::Approx(prange_exponent(2, rate, 1.0 - tau)).epsilon(1e-9));
}

TEST_CASE("sublinear-weight slope is -log_q(1-R)") {
    for (unsigned q : {2u, 3u})
        for (double rate : {0.3, 0.5, 0.7}) {
            const double tau = 1e-4;
            const double slope = prange_exponent(q, rate, tau) / tau;
            const double expect = -std::log(1.0 - rate) / std::log(double(q));
            CHECK(std::fabs(slope - expect) / expect < 0.01);
        }
}

TEST_CASE("plain collision search at the GV point costs (1-R)/2") {
    for (unsigned q : {2u, 3u})
        for (double rate : {0.3, 0.5, 0.8}) {
            const double tau = tau_minus(q, rate);
            CHECK(dumer_plain_exponent(q, rate, tau) ==
                  doctest::Approx((1.0 - rate) / 2.0).epsilon(1e-9));
        }
}

TEST_CASE("plain collision search below the dense regime is half the sphere") {
    // h(tau) <= 1-R: the half-sphere arm of the max wins
    const double tau = 0.05;
    CHECK(dumer_plain_exponent(2, 0.5, tau) ==
          doctest::Approx(0.5 * entropy(2, tau)).epsilon(1e-12));
}

TEST_CASE("short-weight ISD optimum never beats its own objective curve") {
    for (double tau : {0.05, 0.11, 0.2}) {
        IsdOptimum opt = dumer_isd_exponent_short(2, 0.5, tau);
        for (int i = 0; i <= 32; ++i) {
            const double lambda = 0.5 * i / 32.0;
            CHECK(opt.exponent <= f_short(2, 0.5, tau, lambda) + 1e-7);
        }
        CHECK(opt.exponent == doctest::Approx(f_short(2, 0.5, tau, opt.lambda)).epsilon(1e-6));
    }
}

TEST_CASE("short-weight ISD never exceeds prange and strictly improves at GV") {
    for (unsigned q : {2u, 3u})
        for (double rate : {0.4, 0.5}) {
            for (double tau = 0.02; tau < (q - 1.0) / q * (1.0 - rate); tau += 0.02) {
                IsdOptimum opt = dumer_isd_exponent_short(q, rate, tau);
                CHECK(opt.exponent >= -1e-12);
                CHECK(opt.exponent <= prange_exponent(q, rate, tau) + 1e-9);
            }
        }
    const double tau_gv = tau_minus(2, 0.5);
    IsdOptimum at_gv = dumer_isd_exponent_short(2, 0.5, tau_gv);
    CHECK(at_gv.exponent < prange_exponent(2, 0.5, tau_gv) - 1e-4);
}

TEST_CASE("optimizer is stable under tolerance halving") {
    const double tau = tau_minus(2, 0.5);
    IsdOptimum coarse = dumer_isd_exponent_short(2, 0.5, tau, 1e-7);
    IsdOptimum fine = dumer_isd_exponent_short(2, 0.5, tau, 5e-8);
    CHECK(std::fabs(coarse.exponent - fine.exponent) < 1e-6);
}

TEST_CASE("large-weight ISD delegates to the short case for q = 2") {
    for (double tau : {0.8, 0.9}) {
        IsdOptimum large = dumer_isd_exponent_large(2, 0.5, tau);
        IsdOptimum mirrored = dumer_isd_exponent_short(2, 0.5, 1.0 - tau);
        CHECK(large.exponent == doctest::Approx(mirrored.exponent).epsilon(1e-9));
    }
}

TEST_CASE("amortized-one boundary lambda satisfies its defining identity") {
    for (unsigned q : {3u, 5u, 7u})
        for (double rate : {0.3, 0.5}) {
            const double lambda = dumer_isd_large_boundary_lambda(q, rate);
            const double sigma_max =
                0.5 * (rate + lambda) * std::log(q - 1.0) / std::log(double(q));
            CHECK(sigma_max == doctest::Approx(lambda).epsilon(1e-6));
        }
}

TEST_CASE("large-weight optimum matches a 32x32 grid probe") {
    const unsigned q = 3;
    const double rate = 0.5, tau = 0.85;
    IsdOptimum opt = dumer_isd_exponent_large(q, rate, tau);
    const double c = std::log(q - 1.0) / std::log(double(q));
    double grid_best = 1e300;
    for (int i = 0; i <= 32; ++i) {
        const double lambda = (tau - rate) * i / 32.0;
        if (lambda >= 1.0 - rate) continue;
        const double sigma_max = 0.5 * (rate + lambda) * c;
        for (int j = 0; j <= 32; ++j)
            grid_best = std::min(grid_best, g_large(q, rate, tau, lambda, sigma_max * j / 32.0));
    }
    CHECK(opt.exponent <= grid_best + 1e-6);
    CHECK(opt.exponent >= grid_best - 1e-3);  // the grid may slightly undershoot
}

TEST_CASE("wagner depth-1 exponent coincides with the GV collision cost") {
    // pick tau where only a = 1 is feasible: 3/4 < (1-R)/h < 1
    const double rate = 0.5;
    const double tau = entropy_inv_minus(2, (1.0 - rate) / 0.9);
    WagnerOptimum opt = wagner_exponent(2, rate, tau, WagnerGoal::one_solution);
    CHECK(opt.depth == 1);
    CHECK(opt.exponent == doctest::Approx((1.0 - rate) / 2.0));
}

TEST_CASE("wagner exponent is a non-increasing step function of tau") {
    const unsigned q = 2;
    const double rate = 0.7;
    double prev = 1e300;
    unsigned prev_depth = 0;
    int jumps = 0;
    for (double tau = tau_minus(q, rate) + 1e-4; tau < 0.15; tau += 5e-4) {
        WagnerOptimum opt = wagner_exponent(q, rate, tau, WagnerGoal::one_solution);
        CHECK(opt.exponent <= prev + 1e-12);
        if (prev_depth != 0 && opt.depth != prev_depth) ++jumps;
        prev = opt.exponent;
        prev_depth = opt.depth;
    }
    CHECK(jumps >= 1);  // at least one integer-depth transition in the sweep
}

TEST_CASE("wagner feasibility flips exactly at the constraint boundary") {
    const double rate = 0.7;
    // boundary for a = 2: (1-R)/h(tau) = 3/4  =>  h(tau*) = 4(1-R)/3
    const double tau_star = entropy_inv_minus(2, 4.0 * (1.0 - rate) / 3.0);
    CHECK(wagner_exponent(2, rate, tau_star + 1e-6, WagnerGoal::one_solution).depth >= 2);
    CHECK(wagner_exponent(2, rate, tau_star - 1e-6, WagnerGoal::one_solution).depth == 1);
    // below the a=1 bound nothing is feasible
    const double tau_min = entropy_inv_minus(2, (1.0 - rate) / 1.0);
    CHECK_THROWS_AS(wagner_exponent(2, rate, tau_min - 1e-6, WagnerGoal::one_solution),
                    DepthInfeasibleError);
}

TEST_CASE("wagner ISD stays within [0, prange]") {
    for (double tau = 0.03; tau < 0.12; tau += 0.01) {
        WagnerIsdOptimum opt = wagner_isd_exponent(2, 0.5, tau, WeightGoal::short_weight);
        CHECK(opt.exponent >= -1e-12);
        CHECK(opt.exponent <= prange_exponent(2, 0.5, tau) + 1e-9);
    }
}

TEST_CASE("every exponent function is symmetric around 1/2 at q = 2") {
    // h_2(tau) = h_2(1-tau), so each formula inherits the symmetry; the ISD
    // optimizers route large weights through the mirrored short-weight case.
    for (double tau : {0.12, 0.2, 0.24}) {  // within the short regime (<= 0.25)
        CHECK(prange_exponent(2, 0.5, tau) ==
              doctest::Approx(prange_exponent(2, 0.5, 1.0 - tau)).epsilon(1e-9));
        CHECK(dumer_plain_exponent(2, 0.5, tau) ==
              doctest::Approx(dumer_plain_exponent(2, 0.5, 1.0 - tau)).epsilon(1e-9));
        WagnerOptimum lo = wagner_exponent(2, 0.5, tau, WagnerGoal::one_solution);
        WagnerOptimum hi = wagner_exponent(2, 0.5, 1.0 - tau, WagnerGoal::one_solution);
        CHECK(lo.exponent == doctest::Approx(hi.exponent).epsilon(1e-9));
        CHECK(dumer_isd_exponent_large(2, 0.5, 1.0 - tau).exponent ==
              doctest::Approx(dumer_isd_exponent_short(2, 0.5, tau).exponent).epsilon(1e-9));
    }
}

TEST_CASE("wagner-isd returns a feasible depth and parameters") {
    WagnerIsdOptimum opt = wagner_isd_exponent(2, 0.5, 0.11, WeightGoal::short_weight);
    CHECK(opt.depth >= 1);
    CHECK(opt.pi <= 0.11 + 1e-12);
    CHECK(opt.exponent > 0.0);
    // large-weight goal for q > 2 picks p = k + l
    WagnerIsdOptimum large = wagner_isd_exponent(3, 0.5, 0.9, WeightGoal::large_weight);
    CHECK(large.pi == doctest::Approx(0.5 + large.lambda).epsilon(1e-9));
}

TEST_CASE("wagner-isd improves on dumer-isd at large weights, matches elsewhere") {
    const unsigned q = 3;
    const double rate = 0.5;
    // deep in the large-weight region the generalized-birthday subroutine wins
    bool strict_improvement = false;
    for (double tau : {0.88, 0.92, 0.95}) {
        const double dumer_val = dumer_isd_exponent_large(q, rate, tau).exponent;
        const double wagner_val =
            wagner_isd_exponent(q, rate, tau, WeightGoal::large_weight).exponent;
        CHECK(wagner_val <= dumer_val + 1e-6);
        strict_improvement = strict_improvement || wagner_val < dumer_val - 1e-3;
    }
    CHECK(strict_improvement);
    // at short weights the depth collapses to 1 and the two coincide
    for (double tau : {0.04, 0.08}) {
        WagnerIsdOptimum w = wagner_isd_exponent(q, rate, tau, WeightGoal::short_weight);
        const double d = dumer_isd_exponent_short(q, rate, tau).exponent;
        if (w.depth == 1) CHECK(w.exponent == doctest::Approx(d).epsilon(1e-4));
        CHECK(w.exponent <= d + 1e-6);
    }
}

TEST_CASE("curve emission: easy band is identically zero") {
    // easy interval for q=3, R=1/4 is [0.5, 0.75]
    ExponentCurve curve = emit_curve("prange", 3, 0.25, 0.5, 0.75, 0.01, false);
    REQUIRE(!curve.points.empty());
    for (const auto& pt : curve.points) CHECK(std::fabs(pt.exponent) < 1e-9);
}

TEST_CASE("solution-count curve crosses zero at tau- and tau+") {
    const unsigned q = 3;
    const double rate = 0.25;
    ExponentCurve curve = emit_curve("solutions", q, rate, 0.01, 0.99, 0.001, false);
    const double tm = tau_minus(q, rate), tp = tau_plus(q, rate);
    double prev = curve.points[0].exponent;
    std::vector<double> crossings;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        if ((prev < 0) != (curve.points[i].exponent < 0))
            crossings.push_back(curve.points[i].tau);
        prev = curve.points[i].exponent;
    }
    REQUIRE(crossings.size() == 2);
    CHECK(std::fabs(crossings[0] - tm) < 2e-3);
    CHECK(std::fabs(crossings[1] - tp) < 2e-3);
}

TEST_CASE("wagner curve segments are monotone between depth jumps") {
    ExponentCurve curve = emit_curve("wagner", 2, 0.7, 0.06, 0.2, 0.001, false);
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        CHECK(curve.points[i].exponent <= curve.points[i - 1].exponent + 1e-12);
}

TEST_CASE("base-2 output is exactly log2(q) times the base-q output") {
    ExponentCurve base_q = emit_curve("prange", 3, 0.5, 0.05, 0.15, 0.01, false);
    ExponentCurve base_2 = emit_curve("prange", 3, 0.5, 0.05, 0.15, 0.01, true);
    REQUIRE(base_q.points.size() == base_2.points.size());
    for (std::size_t i = 0; i < base_q.points.size(); ++i)
        CHECK(base_2.points[i].exponent ==
              doctest::Approx(base_q.points[i].exponent * std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("csv rendering carries header and parameters") {
    ExponentCurve curve = emit_curve("isd-dumer", 2, 0.5, 0.05, 0.07, 0.01, false);
    const std::string csv = render_curve_csv(curve);
    CHECK(csv.substr(0, csv.find('\n')) == "tau,exponent,lambda,pi");
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<std::ptrdiff_t>(curve.points.size() + 1));
}
