#ifndef SDT_INSTANCES_HPP
#define SDT_INSTANCES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sdt/codes.hpp"

namespace sdt {

/// Syndrome-form decoding instance: find e with |e| = t and e H^T = s.
/// Instances produced by gen_dp carry a full-row-rank H and the planted error
/// (kept for testing only). Instances arriving through reductions may have
/// redundant rows; solvers normalize as needed.
struct DecodingInstance {
    FieldCtx ctx;
    FqMatrix h;  // (n-k) x n
    FqVector s;  // length n-k
    std::size_t t = 0;
    std::optional<FqVector> planted;

    std::size_t n() const { return h.cols(); }
    std::size_t k() const { return h.cols() - h.rows(); }
};

/// Noisy-codeword form: find e with |e| = t and y - e in the code of G.
struct NoisyCodewordInstance {
    FieldCtx ctx;
    FqMatrix g;  // k x n
    FqVector y;  // length n
    std::size_t t = 0;
    std::optional<FqVector> planted;

    std::size_t n() const { return g.cols(); }
    std::size_t k() const { return g.rows(); }
};

/// DP(n, q, R, tau): k = floor(R n), t = floor(tau n); H uniform of full rank
/// (resampled), planted error uniform of weight exactly t, s = planted H^T.
DecodingInstance gen_dp(FieldCtx ctx, std::size_t n, double rate, double tau, std::uint64_t seed);

/// The acceptance predicate of the decoding problem.
bool verify(const DecodingInstance& inst, const FqVector& e);
bool verify(const NoisyCodewordInstance& inst, const FqVector& e);

/// Form conversions preserving the solution set. The seed randomizes the
/// coset representative y by a uniform codeword.
NoisyCodewordInstance syndrome_to_noisy(const DecodingInstance& inst, std::uint64_t seed);
DecodingInstance noisy_to_syndrome(const NoisyCodewordInstance& inst);

/// Drops redundant parity rows: returns an equivalent instance whose H has
/// full row rank, or nullopt when the system e H^T = s is inconsistent (no
/// solution of any weight).
std::optional<DecodingInstance> normalize_full_rank(const DecodingInstance& inst);

/// All weight-t solutions by direct enumeration of supports and values.
/// Guarded by #S_t <= 2^24.
std::vector<FqVector> enumerate_solutions(const FqMatrix& h, const FqVector& s, std::size_t t);

/// Exact number of weight-t solutions. Direct enumeration while #S_t <= 2^22,
/// then a meet-in-the-middle split for t <= n/2; beyond that TooLargeError.
std::uint64_t count_solutions(const FqMatrix& h, const FqVector& s, std::size_t t);

/// Line-oriented ".dpi" instance format:
///   DPI 1
///   q n k t
///   n-k rows of H, space-separated residues
///   s
///   # e <residues>        (optional planted error)
std::string render_dpi(const DecodingInstance& inst);
DecodingInstance parse_dpi(std::istream& in);
DecodingInstance parse_dpi_string(const std::string& text);
void write_dpi_file(const DecodingInstance& inst, const std::string& path);
DecodingInstance read_dpi_file(const std::string& path);

}  // namespace sdt

#endif
