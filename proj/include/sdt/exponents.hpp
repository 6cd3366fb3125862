#ifndef SDT_EXPONENTS_HPP
#define SDT_EXPONENTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdt/errors.hpp"

namespace sdt {

/// Golden-section minimum of a unimodal function on [lo, hi].
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-7, int max_iter = 200);

enum class WeightGoal { short_weight, large_weight };

/// Base-q time exponent of Prange's algorithm at relative weight tau:
/// min(1-R, h_q(tau)) - (1-R) h_q((tau - gamma)/(1-R)) with gamma picked by
/// the weight regime (0 / tau - (q-1)(1-R)/q / R).
double prange_exponent(unsigned q, double rate, double tau);

/// Plain split-and-collide search: max(h_q(tau)/2, h_q(tau) - (1-R)).
double dumer_plain_exponent(unsigned q, double rate, double tau);

/// Exponent of the expected number of solutions, h_q(tau) - (1-R).
double solutions_exponent(unsigned q, double rate, double tau);

struct IsdOptimum {
    double exponent = 0.0;
    double lambda = 0.0;  // optimal l/n
    double aux = 0.0;     // pi (short goal) or sigma (large goal)
    bool warning = false;  // golden-section disagreed with the grid probe
};

/// ISD with the collision sub-decoder in amortized-time-one mode, short
/// weights (tau <= (q-1)(1-R)/q): minimizes
/// f(l) = l + max(0, min(1-R,h(tau)) - (1-R-l) h((tau-pi(l))/(1-R-l)) - 2l)
/// with pi(l) = (R+l) h^{-1}(2l/(R+l)).
IsdOptimum dumer_isd_exponent_short(unsigned q, double rate, double tau, double tol = 1e-7);

/// Large-weight variant (p = k+l). For q = 2 delegates to the short-weight
/// exponent at 1 - tau; otherwise nested minimization of g(l, sigma) under
/// sigma <= ((R+l)/2) log_q(q-1).
IsdOptimum dumer_isd_exponent_large(unsigned q, double rate, double tau, double tol = 1e-7);

/// Closed-form l for the amortized-one boundary sigma = l at p = k+l.
double dumer_isd_large_boundary_lambda(unsigned q, double rate);

enum class WagnerGoal { one_solution, amortized };

struct WagnerOptimum {
    double exponent = 0.0;
    unsigned depth = 0;  // chosen a
};

/// Plain generalized-birthday exponent: largest integer a with
/// (1-R)/h_q(tau) <= (a+1)/2^a (one solution; exponent (1-R)/(a+1)) or
/// <= a/2^a (amortized; exponent (1-R)/a). Throws DepthInfeasibleError when
/// no depth fits.
WagnerOptimum wagner_exponent(unsigned q, double rate, double tau, WagnerGoal goal);

struct WagnerIsdOptimum {
    double exponent = 0.0;
    double lambda = 0.0;
    double pi = 0.0;
    unsigned depth = 0;
    bool warning = false;
};

/// ISD with the generalized-birthday sub-decoder in amortized mode; the
/// depth is the largest feasible integer at each lambda, scanned directly.
WagnerIsdOptimum wagner_isd_exponent(unsigned q, double rate, double tau, WeightGoal goal,
                                     double tol = 1e-7);

struct CurvePoint {
    double tau = 0.0;
    double exponent = 0.0;
    std::vector<double> params;
};

struct ExponentCurve {
    std::string algorithm;
    unsigned q = 2;
    double rate = 0.0;
    bool base2 = false;
    std::vector<std::string> param_names;
    std::vector<CurvePoint> points;
};

/// Algorithms: prange, dumer, isd-dumer, isd-dumer-large, wagner,
/// wagner-amortized, isd-wagner, solutions. Points with infeasible depth are
/// skipped. base2 multiplies base-q exponents by log2(q).
ExponentCurve emit_curve(const std::string& algorithm, unsigned q, double rate, double tau_lo,
                         double tau_hi, double step, bool base2, double tol = 1e-7);

std::string render_curve_csv(const ExponentCurve& curve);

}  // namespace sdt

#endif
