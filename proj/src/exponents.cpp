#include "sdt/exponents.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sdt/stats.hpp"

namespace sdt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double logq(unsigned q, double x) {
    return std::log(x) / std::log(static_cast<double>(q));
}

// h extended by the continuity conventions of the removable singularities:
// a zero-length slot contributes nothing.
double scaled_entropy(unsigned q, double slot, double arg) {
    if (slot <= 0.0) return 0.0;
    if (arg < 0.0 || arg > 1.0) return kInf;  // marks an infeasible parameter choice
    return slot * entropy(q, arg);
}

struct GridCheck {
    double best_x;
    double best_val;
};

GridCheck grid_probe(const std::function<double(double)>& f, double lo, double hi, int points) {
    GridCheck g{lo, kInf};
    for (int i = 0; i <= points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / points;
        const double v = f(x);
        if (v < g.best_val) g = {x, v};
    }
    return g;
}

}  // namespace

double golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol,
                          int max_iter) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double prange_exponent(unsigned q, double rate, double tau) {
    if (rate <= 0.0 || rate >= 1.0 || tau <= 0.0 || tau >= 1.0)
        throw DomainError("prange_exponent: parameters outside (0,1)");
    const double qr = (q - 1.0) / q;
    const double left = qr * (1.0 - rate), right = rate + qr * (1.0 - rate);
    double gamma = 0.0;
    if (tau > right)
        gamma = rate;
    else if (tau >= left)
        gamma = tau - left;
    const double head = std::min(1.0 - rate, entropy(q, tau));
    return head - scaled_entropy(q, 1.0 - rate, (tau - gamma) / (1.0 - rate));
}

double dumer_plain_exponent(unsigned q, double rate, double tau) {
    const double h = entropy(q, tau);
    return std::max(0.5 * h, h - (1.0 - rate));
}

double solutions_exponent(unsigned q, double rate, double tau) {
    return entropy(q, tau) - (1.0 - rate);
}

namespace {

// f(lambda) for the short-weight collision-ISD; +inf marks infeasible lambda.
double dumer_short_objective(unsigned q, double rate, double tau, double lambda) {
    if (lambda < 0.0 || lambda >= std::min(rate, 1.0 - rate)) return kInf;
    const double slot = rate + lambda;
    const double pi = lambda == 0.0 ? 0.0 : slot * entropy_inv_minus(q, 2.0 * lambda / slot);
    if (pi > tau) return kInf;
    const double head = std::min(1.0 - rate, entropy(q, tau));
    const double spread = scaled_entropy(q, 1.0 - rate - lambda, (tau - pi) / (1.0 - rate - lambda));
    if (std::isinf(spread)) return kInf;
    return lambda + std::max(0.0, head - spread - 2.0 * lambda);
}

double dumer_large_objective(unsigned q, double rate, double tau, double lambda, double sigma) {
    const double head = std::min(1.0 - rate, entropy(q, tau));
    const double spread =
        scaled_entropy(q, 1.0 - rate - lambda, (tau - rate - lambda) / (1.0 - rate - lambda));
    if (std::isinf(spread)) return kInf;
    return std::max(sigma, 2.0 * sigma - lambda) + std::max(0.0, head - spread - 2.0 * sigma);
}

IsdOptimum optimize_1d(const std::function<double(double)>& f, double lo, double hi, double tol) {
    IsdOptimum opt;
    const double x_golden = golden_section_min(f, lo, hi, tol);
    const double v_golden = f(x_golden);
    GridCheck grid = grid_probe(f, lo, hi, 32);
    // Unimodality is an approximation; trust whichever probe is lower and
    // flag a disagreement instead of failing.
    if (grid.best_val + 1e-4 < v_golden) {
        const double refined = golden_section_min(
            f, std::max(lo, grid.best_x - (hi - lo) / 32.0),
            std::min(hi, grid.best_x + (hi - lo) / 32.0), tol);
        opt.warning = true;
        opt.lambda = f(refined) < grid.best_val ? refined : grid.best_x;
    } else {
        opt.lambda = v_golden <= grid.best_val ? x_golden : grid.best_x;
    }
    opt.exponent = f(opt.lambda);
    return opt;
}

}  // namespace

IsdOptimum dumer_isd_exponent_short(unsigned q, double rate, double tau, double tol) {
    const double qr = (q - 1.0) / q;
    if (tau > qr * (1.0 - rate) + 1e-12)
        throw DomainError("dumer_isd_exponent_short: tau beyond the short-weight regime");
    auto f = [&](double lambda) { return dumer_short_objective(q, rate, tau, lambda); };
    const double hi = std::min(rate, 1.0 - rate) - 1e-9;
    IsdOptimum opt = optimize_1d(f, 0.0, hi, tol);
    const double slot = rate + opt.lambda;
    opt.aux = opt.lambda == 0.0 ? 0.0 : slot * entropy_inv_minus(q, 2.0 * opt.lambda / slot);
    return opt;
}

double dumer_isd_large_boundary_lambda(unsigned q, double rate) {
    const double c = logq(q, q - 1.0);
    return 0.5 * rate * c / (1.0 - 0.5 * c);
}

IsdOptimum dumer_isd_exponent_large(unsigned q, double rate, double tau, double tol) {
    if (q == 2) {
        // Symmetry of the binary problem: solving at weight tau and 1 - tau
        // are equivalent.
        IsdOptimum opt = dumer_isd_exponent_short(2, rate, 1.0 - tau, tol);
        return opt;
    }
    if (tau <= rate) throw DomainError("dumer_isd_exponent_large: tau <= R has no p = k+l split");
    const double lam_hi = std::min(1.0 - rate, tau - rate) - 1e-9;
    if (lam_hi <= 0.0) throw DomainError("dumer_isd_exponent_large: empty lambda range");

    const double c = logq(q, q - 1.0);
    auto inner = [&](double lambda, double* sigma_out) {
        const double sigma_max = 0.5 * (rate + lambda) * c;  // p = k + l
        double best = kInf, best_sigma = 0.0;
        auto g = [&](double sigma) { return dumer_large_objective(q, rate, tau, lambda, sigma); };
        const double s_golden = golden_section_min(g, 0.0, sigma_max, tol);
        GridCheck grid = grid_probe(g, 0.0, sigma_max, 32);
        if (g(s_golden) <= grid.best_val) {
            best = g(s_golden);
            best_sigma = s_golden;
        } else {
            best = grid.best_val;
            best_sigma = grid.best_x;
        }
        if (sigma_out) *sigma_out = best_sigma;
        return best;
    };
    auto outer = [&](double lambda) { return inner(lambda, nullptr); };
    IsdOptimum opt = optimize_1d(outer, 0.0, lam_hi, tol);
    double sigma = 0.0;
    opt.exponent = inner(opt.lambda, &sigma);
    opt.aux = sigma;
    return opt;
}

WagnerOptimum wagner_exponent(unsigned q, double rate, double tau, WagnerGoal goal) {
    const double ratio = (1.0 - rate) / entropy(q, tau);
    WagnerOptimum best;
    for (unsigned a = 1; a <= 40; ++a) {
        const double budget = goal == WagnerGoal::one_solution
                                  ? (a + 1.0) / std::pow(2.0, a)
                                  : static_cast<double>(a) / std::pow(2.0, a);
        if (ratio <= budget + 1e-12) best.depth = a;  // keep the largest feasible depth
    }
    if (best.depth == 0)
        throw DepthInfeasibleError("wagner_exponent: no feasible depth for these parameters");
    best.exponent = goal == WagnerGoal::one_solution ? (1.0 - rate) / (best.depth + 1.0)
                                                     : (1.0 - rate) / best.depth;
    return best;
}

namespace {

// Largest depth whose amortized-one sub-decoding fits the list budget,
// l/a <= (slot / 2^a) h(pi / slot); 0 when even a = 1 fails. Scanned
// directly rather than solved for, to dodge root-finding edge cases.
unsigned wagner_isd_depth(unsigned q, double rate, double lambda, double pi) {
    const double slot = rate + lambda;
    if (pi < 0.0 || pi > slot) return 0;
    const double cap = entropy(q, pi / slot);
    unsigned depth = 0;
    for (unsigned a = 1; a <= 40; ++a)
        if (lambda / a <= slot / std::pow(2.0, a) * cap + 1e-12) depth = a;
    return depth;
}

// Composite exponent at (lambda, pi) with the best feasible depth.
double wagner_isd_value(unsigned q, double rate, double tau, double lambda, double pi,
                        unsigned* depth_out) {
    if (lambda < 0.0 || lambda >= 1.0 - rate || pi > tau) return kInf;
    const unsigned a = wagner_isd_depth(q, rate, lambda, pi);
    if (a == 0) return kInf;
    const double head = std::min(1.0 - rate - lambda, entropy(q, tau) - lambda);
    const double spread =
        scaled_entropy(q, 1.0 - rate - lambda, (tau - pi) / (1.0 - rate - lambda));
    if (std::isinf(spread)) return kInf;
    if (depth_out) *depth_out = a;
    const double merge_cost = lambda / a;
    return merge_cost + std::max(0.0, head - spread - merge_cost);
}

}  // namespace

WagnerIsdOptimum wagner_isd_exponent(unsigned q, double rate, double tau, WeightGoal goal,
                                     double tol) {
    if (q == 2 && goal == WeightGoal::large_weight) {
        WagnerIsdOptimum sym = wagner_isd_exponent(2, rate, 1.0 - tau, WeightGoal::short_weight, tol);
        return sym;
    }
    // Short goal: pi ranges over [smallest feasible, tau], with feasibility
    // starting at the a <= 2 bound pi >= slot h^{-1}(2 lambda / slot).
    // Large goal: pi is pinned to slot (p = k + l).
    auto best_pi = [&](double lambda, double* pi_out) -> double {
        const double slot = rate + lambda;
        if (goal == WeightGoal::large_weight) {
            if (pi_out) *pi_out = slot;
            return wagner_isd_value(q, rate, tau, lambda, slot, nullptr);
        }
        if (2.0 * lambda / slot > 1.0) return kInf;
        const double pi_lo = lambda == 0.0 ? 0.0 : slot * entropy_inv_minus(q, 2.0 * lambda / slot);
        if (pi_lo > tau) return kInf;
        auto g = [&](double pi) { return wagner_isd_value(q, rate, tau, lambda, pi, nullptr); };
        const double pi_golden = golden_section_min(g, pi_lo, tau, tol);
        GridCheck grid = grid_probe(g, pi_lo, tau, 32);
        const double pi_best = g(pi_golden) <= grid.best_val ? pi_golden : grid.best_x;
        if (pi_out) *pi_out = pi_best;
        return g(pi_best);
    };
    auto objective = [&](double lambda) { return best_pi(lambda, nullptr); };
    const double hi = (1.0 - rate) - 1e-9;
    IsdOptimum opt = optimize_1d(objective, 0.0, hi, tol);
    WagnerIsdOptimum out;
    out.lambda = opt.lambda;
    out.warning = opt.warning;
    out.exponent = best_pi(opt.lambda, &out.pi);
    if (std::isinf(out.exponent))
        throw DepthInfeasibleError("wagner_isd_exponent: no feasible depth at the optimum");
    wagner_isd_value(q, rate, tau, out.lambda, out.pi, &out.depth);
    return out;
}

ExponentCurve emit_curve(const std::string& algorithm, unsigned q, double rate, double tau_lo,
                         double tau_hi, double step, bool base2, double tol) {
    if (!(tau_lo > 0.0 && tau_hi < 1.0 && tau_lo <= tau_hi && step > 0.0))
        throw DomainError("emit_curve: tau range must stay within (0,1)");
    ExponentCurve curve;
    curve.algorithm = algorithm;
    curve.q = q;
    curve.rate = rate;
    curve.base2 = base2;
    const double scale = base2 ? std::log2(static_cast<double>(q)) : 1.0;

    if (algorithm == "isd-dumer")
        curve.param_names = {"lambda", "pi"};
    else if (algorithm == "isd-dumer-large")
        curve.param_names = {"lambda", "sigma"};
    else if (algorithm == "wagner" || algorithm == "wagner-amortized")
        curve.param_names = {"a"};
    else if (algorithm == "isd-wagner")
        curve.param_names = {"lambda", "pi", "a"};

    for (double tau = tau_lo; tau <= tau_hi + 1e-12; tau += step) {
        CurvePoint pt;
        pt.tau = std::min(tau, tau_hi);
        try {
            if (algorithm == "prange") {
                pt.exponent = prange_exponent(q, rate, pt.tau);
            } else if (algorithm == "dumer") {
                pt.exponent = dumer_plain_exponent(q, rate, pt.tau);
            } else if (algorithm == "solutions") {
                pt.exponent = solutions_exponent(q, rate, pt.tau);
            } else if (algorithm == "isd-dumer") {
                auto opt = dumer_isd_exponent_short(q, rate, pt.tau, tol);
                pt.exponent = opt.exponent;
                pt.params = {opt.lambda, opt.aux};
            } else if (algorithm == "isd-dumer-large") {
                auto opt = dumer_isd_exponent_large(q, rate, pt.tau, tol);
                pt.exponent = opt.exponent;
                pt.params = {opt.lambda, opt.aux};
            } else if (algorithm == "wagner" || algorithm == "wagner-amortized") {
                auto opt = wagner_exponent(q, rate, pt.tau,
                                           algorithm == "wagner" ? WagnerGoal::one_solution
                                                                 : WagnerGoal::amortized);
                pt.exponent = opt.exponent;
                pt.params = {static_cast<double>(opt.depth)};
            } else if (algorithm == "isd-wagner") {
                auto opt = wagner_isd_exponent(q, rate, pt.tau, WeightGoal::short_weight, tol);
                pt.exponent = opt.exponent;
                pt.params = {opt.lambda, opt.pi, static_cast<double>(opt.depth)};
            } else {
                throw DomainError("emit_curve: unknown algorithm " + algorithm);
            }
        } catch (const DepthInfeasibleError&) {
            continue;  // leave a gap where no depth fits
        } catch (const DomainError&) {
            continue;
        }
        pt.exponent *= scale;
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

std::string render_curve_csv(const ExponentCurve& curve) {
    std::ostringstream os;
    os.precision(12);
    os << "tau,exponent";
    for (const auto& name : curve.param_names) os << ',' << name;
    os << '\n';
    for (const auto& pt : curve.points) {
        os << pt.tau << ',' << pt.exponent;
        for (double p : pt.params) os << ',' << p;
        os << '\n';
    }
    return os.str();
}

}  // namespace sdt
