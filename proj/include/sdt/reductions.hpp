#ifndef SDT_REDUCTIONS_HPP
#define SDT_REDUCTIONS_HPP

#include <array>
#include <functional>
#include <iosfwd>

#include "sdt/instances.hpp"

namespace sdt {

/// Three-dimensional matching instance: triples over {1,...,t_size}^3.
struct ThreeDmInstance {
    std::size_t t_size = 0;
    std::vector<std::array<std::uint32_t, 3>> triples;
};

/// Text format: first line "|T| |U|", then |U| lines "x y z" (1-indexed).
ThreeDmInstance parse_3dm(std::istream& in);
ThreeDmInstance parse_3dm_string(const std::string& text);
std::string render_3dm(const ThreeDmInstance& inst);

/// Incidence matrix over F_2 of size 3|T| x |U|: column j stacks the three
/// indicator blocks of triple j, so every column has weight exactly 3.
FqMatrix tdm_to_matrix(const ThreeDmInstance& inst);

/// Decoding form of the matching problem: H the incidence matrix, s all-one,
/// t = |T|. A verified solution's support is a valid matching.
DecodingInstance tdm_decoding_instance(const ThreeDmInstance& inst);

/// Supports of weight-|T| solutions back to triples; checks disjointness.
bool is_valid_matching(const ThreeDmInstance& inst, const std::vector<std::uint32_t>& support);

/// Random satisfiable instance: a planted perfect matching plus `extra`
/// random distinct triples.
ThreeDmInstance random_satisfiable_3dm(std::size_t t_size, std::size_t extra, std::uint64_t seed);

/// Noisy inner-product oracle: query() returns (a, <secret, a> + e) with a
/// uniform over F_2^k and e Bernoulli(tau). Stateful, single consumer.
class LpnOracle {
  public:
    LpnOracle(std::size_t k, double tau, std::uint64_t seed);

    struct Sample {
        FqVector a;
        std::uint32_t bit;
    };
    Sample query();

    std::size_t k() const { return k_; }
    double tau() const { return tau_; }
    std::uint64_t queries() const { return queries_; }

    /// Test-only access to the hidden secret.
    const FqVector& debug_secret() const { return secret_; }

  private:
    std::size_t k_;
    double tau_;
    FqVector secret_;
    Rng rng_;
    std::uint64_t queries_ = 0;
    std::uint64_t noise_threshold_;  // tau as a 2^-53 fixed-point threshold
};

struct LpnCollection {
    NoisyCodewordInstance inst;
    /// Realized error weight; populated only in white-box mode.
    std::optional<std::size_t> realized_weight;
    std::optional<FqVector> secret;
};

/// Collects n samples into a noisy-codeword instance y = s G + e with the
/// a_i as columns of G. In white-box mode t is the realized |e| and the
/// secret is exposed for testing; otherwise t = ceil(tau n + 3 sqrt(n tau (1-tau))).
LpnCollection lpn_collect(LpnOracle& oracle, std::size_t n, bool white_box = false);

/// Distinguisher interface: given (H, s), guess whether s is a weight-t
/// syndrome (1) or uniform (0).
using DdpOracle = std::function<int(const FqMatrix&, const FqVector&)>;

/// Randomized predictor of x . r built on a distinguisher: draws u uniform,
/// feeds (H - u^T r, s) to the oracle and returns the complement of its bit,
/// so that the agreement rate with x . r is 1/2 + advantage.
int std_predictor(const DdpOracle& ddp, const FqMatrix& h, const FqVector& s, const FqVector& r,
                  Rng& rng);

struct AdvantageEstimate {
    double estimate = 0.0;
    double sigma = 0.0;
};

/// Monte-Carlo estimate of (1/2)(P(A=1 | planted) - P(A=1 | uniform)).
AdvantageEstimate ddp_advantage(const DdpOracle& ddp, std::size_t n, std::size_t k, std::size_t t,
                                unsigned q, std::size_t samples, std::uint64_t seed);

}  // namespace sdt

#endif
