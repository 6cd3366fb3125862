#ifndef SDT_DECODERS_HPP
#define SDT_DECODERS_HPP

#include "sdt/instances.hpp"

namespace sdt {

struct SolveReport {
    std::vector<FqVector> solutions;
    std::uint64_t iterations = 0;
    std::uint64_t sub_invocations = 0;
    double time_ms = 0.0;
    bool success = false;
};

/// Weight class j of the test-vector distribution: 0 below (q-1)(n-k)/q,
/// t - floor((q-1)(n-k)/q) clamped to [0,k] in the middle band, k above it.
std::size_t prange_weight_class(std::size_t t, std::size_t n, std::size_t k, unsigned q);

/// One Prange step for a given information set and test vector x: the unique
/// e with e_I = x, e_Ibar = (s - x H_I^T) S^T where S H_Ibar = 1. Returns
/// nullopt when H_Ibar is singular. The candidate always satisfies e H^T = s.
std::optional<FqVector> prange_candidate(const FqMatrix& h, const FqVector& s,
                                         const std::vector<std::uint32_t>& info_set,
                                         const FqVector& x);

struct PrangeConfig {
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 0;  // 0: 1000 x ceil(1/estimated success rate)
    unsigned workers = 1;
};

SolveReport prange(const DecodingInstance& inst, const PrangeConfig& cfg);

struct DumerConfig {
    std::uint64_t seed = 0;
    std::optional<std::size_t> list_size;  // cap per half-list; full enumeration when absent
    std::uint64_t max_iterations = 50;     // fresh split draws
    bool collect_all = false;              // exhaust the iteration budget, accumulate distinct
    std::size_t candidate_cap = std::size_t{1} << 20;
};

/// Split-and-collide search emitting every (e1, e2) collision found.
SolveReport dumer(const DecodingInstance& inst, const DumerConfig& cfg);

/// Single split draw on a raw (H, s, t) system; used by the ISD composition.
std::vector<FqVector> dumer_collisions(const FqMatrix& h, const FqVector& s, std::size_t t,
                                       Rng& rng, std::optional<std::size_t> list_size,
                                       std::size_t cap);

enum class WagnerMode { one_solution, amortized };

struct WagnerConfig {
    unsigned depth = 1;  // a: 2^a base lists
    WagnerMode mode = WagnerMode::one_solution;
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1;  // fresh partition draws
    std::size_t candidate_cap = std::size_t{1} << 20;
};

/// Sizes of the lists after each merge level, for distribution checks.
using WagnerLevelSizes = std::vector<std::vector<std::size_t>>;

/// 2^a-way split with pairwise merges on l-symbol windows; the syndrome is
/// folded into the last base list. one_solution sizes lists with
/// l = (n-k)/(a+1), amortized with l = (n-k)/a. Throws DepthInfeasibleError
/// when a base list cannot reach size q^ceil(l).
SolveReport wagner(const DecodingInstance& inst, const WagnerConfig& cfg,
                   WagnerLevelSizes* level_sizes = nullptr);

struct IsdConfig {
    enum class Sub { exhaustive, dumer, wagner };
    std::size_t p = 0;
    std::size_t ell = 0;
    Sub sub = Sub::dumer;
    std::optional<std::size_t> list_size;  // Dumer sub-decoder
    unsigned depth = 1;                    // Wagner sub-decoder
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 0;  // 0: auto from the estimated acceptance rate
    std::size_t candidate_cap = std::size_t{1} << 20;
    unsigned workers = 1;
};

/// One draw of the augmented information set, eliminated to the block form
/// S H_Jbar = (1 ; 0), S H_J = (H' ; H''), S s^T = (s', s'').
struct IsdSplit {
    std::vector<std::uint32_t> j_set, jbar;
    FqMatrix elim;      // S
    FqMatrix h_upper;   // H', (n-k-l) x (k+l)
    FqMatrix h_lower;   // H'', l x (k+l)
    FqVector s_upper;   // s'
    FqVector s_lower;   // s''
};

std::optional<IsdSplit> isd_prepare(const FqMatrix& h, const FqVector& s,
                                    const std::vector<std::uint32_t>& j_set, std::size_t ell);

/// Lift of a sub-solution: e_Jbar = s' - e2 H'^T, e_J = e2.
FqVector isd_lift(const IsdSplit& split, std::size_t n, const FqVector& e2);

struct IsdIterationOutcome {
    std::size_t candidates = 0;
    std::vector<FqVector> accepted;  // lifted solutions of full weight t
    bool prepared = false;           // false when no invertible J was found
};

IsdIterationOutcome isd_iterate_once(const FqMatrix& h, const FqVector& s, std::size_t t,
                                     const IsdConfig& cfg, Rng& rng);

/// Information-set decoding composing the configured sub-decoder on the
/// punctured code at weight p.
SolveReport isd(const DecodingInstance& inst, const IsdConfig& cfg);

}  // namespace sdt

#endif
