#ifndef SDT_STATS_HPP
#define SDT_STATS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sdt/linalg.hpp"

namespace sdt {

/// q-ary entropy h_q(x) = -x log_q(x/(q-1)) - (1-x) log_q(1-x), extended by
/// continuity at 0 and 1. Increasing on [0, (q-1)/q], decreasing after.
double entropy(unsigned q, double x);
/// Inverse of h_q on [0, (q-1)/q]; y in [0, 1]. Bisection to 1e-12.
double entropy_inv_minus(unsigned q, double y);
/// Inverse of h_q on [(q-1)/q, 1]; y in [log_q(q-1), 1].
double entropy_inv_plus(unsigned q, double y);

mpz_class binomial(std::uint64_t n, std::uint64_t k);
mpz_class int_pow(std::uint64_t base, std::uint64_t e);

/// #S_t = binom(n,t) (q-1)^t, exactly.
mpz_class sphere_size(std::size_t n, std::size_t t, unsigned q);
/// Asymptotic exponent (1/n) log_q #S_t, i.e. h_q(tau).
double sphere_exponent(unsigned q, double tau);

/// Largest t with sum_{l<=t} binom(n,l)(q-1)^l <= q^(n-k).
std::size_t gv_distance(std::size_t n, std::size_t k, unsigned q);
/// Relative Gilbert-Varshamov distance g_q^-(1-R).
double tau_minus(unsigned q, double rate);
/// Second zero of the solution-count exponent; defined for R <= 1 - log_q(q-1).
double tau_plus(unsigned q, double rate);

/// E_H(N_t) = #S_t / q^(n-k) as an exact rational.
mpq_class expected_solutions(std::size_t n, std::size_t k, std::size_t t, unsigned q);

struct MomentBounds {
    double markov;     // P(N_t > a)            <= mu / a
    double chebyshev;  // P(|N_t - mu| >= a)    <= (q-1) mu / a^2
};
MomentBounds moment_bounds(std::size_t n, std::size_t k, std::size_t t, unsigned q, double a);

/// Half the l1 gap between two distributions on a common support.
double statistical_distance(const std::vector<double>& p, const std::vector<double>& r);
/// max_A |P(A) - Q(A)| by subset enumeration; support size <= 20.
double statistical_distance_max_form(const std::vector<double>& p, const std::vector<double>& r);

/// Exact Delta(e H^T, uniform) for fixed H, e uniform on S_t, by full
/// enumeration of the sphere. Requires #S_t <= 2^22 and q^rows <= 2^22.
double syndrome_distance_exact(const FqMatrix& h, std::size_t t);

/// Leftover-hash bound (1/2) sqrt((q^(n-k)-1) / #S_t).
double lhl_bound(std::size_t n, std::size_t k, std::size_t t, unsigned q);
/// Mean of syndrome_distance_exact over `samples` uniform H.
double lhl_empirical(std::size_t n, std::size_t k, std::size_t t, unsigned q,
                     std::size_t samples, std::uint64_t seed);

/// Markov-style tail for fixed matrices: if the mean syndrome distance is at
/// most eps, the fraction of H with Delta >= sqrt(eps) is at most sqrt(eps).
double fixed_matrix_tail(double eps);

/// Binary Bernoulli-error variant: (1/2) sqrt(2^-k (1 + (1-2 tau)^2)^n).
double bernoulli_lhl_bound(std::size_t n, std::size_t k, double tau);
/// Exact Delta(e_Ber H^T, uniform) averaged over sampled H (q = 2, full
/// enumeration of the error space; n <= 24).
double bernoulli_lhl_empirical(std::size_t n, std::size_t k, double tau, std::size_t samples,
                               std::uint64_t seed);

/// Fraction of sampled random codes whose relative brute-force minimum
/// distance falls strictly inside ((1-eps) tau-, (1+eps) tau-).
double min_distance_concentration(std::size_t n, double rate, unsigned q, double eps,
                                  std::size_t samples, std::uint64_t seed);

}  // namespace sdt

#endif
