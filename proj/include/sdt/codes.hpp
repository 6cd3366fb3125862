#ifndef SDT_CODES_HPP
#define SDT_CODES_HPP

#include <functional>
#include <memory>
#include <optional>

#include "sdt/linalg.hpp"

namespace sdt {

/// An [n,k]_q linear code held by generator and/or parity-check matrix.
/// Whichever matrix was not supplied is derived on first use via Gaussian
/// elimination; derivation is guarded so concurrent first access is safe.
/// Code objects are immutable and cheap to copy (matrices are shared).
class LinearCode {
  public:
    static LinearCode from_generator(FqMatrix g);
    static LinearCode from_parity_check(FqMatrix h);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    double rate() const { return static_cast<double>(k_) / static_cast<double>(n_); }

    const FqMatrix& generator() const;
    const FqMatrix& parity_check() const;

    FqVector encode(const FqVector& message) const { return vec_mul(message, generator()); }
    FqVector syndrome(const FqVector& y) const { return parity_check().mul_vec_t(y); }
    bool contains(const FqVector& y) const;

  private:
    LinearCode(FieldCtx ctx, std::size_t n, std::size_t k) : ctx_(ctx), n_(n), k_(k) {}

    struct Cache;
    FieldCtx ctx_;
    std::size_t n_, k_;
    std::shared_ptr<Cache> cache_;
};

LinearCode dual(const LinearCode& code);

enum class RandomCodeModel { generator, parity_check };

/// Uniform generator- or parity-check-model random code. With `resample` the
/// draw is repeated until the matrix has the stated full rank (expected O(1)
/// tries); disable it to sample the raw model for distribution tests.
LinearCode random_code(FieldCtx ctx, std::size_t n, std::size_t k, RandomCodeModel model,
                       std::uint64_t seed, bool resample = true);

/// [2^r - 1, 2^r - 1 - r]_2 Hamming code; column i of H is i in binary, most
/// significant bit in row 0.
LinearCode hamming_code(unsigned r);

/// Generalized Reed-Solomon code: evaluations (z_1 f(x_1), ..., z_n f(x_n))
/// of polynomials of degree < k.
class GrsCode {
  public:
    GrsCode(FieldCtx ctx, std::vector<std::uint32_t> eval_points,
            std::vector<std::uint32_t> multipliers, std::size_t k);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t length() const { return x_.size(); }
    std::size_t dimension() const { return k_; }
    const std::vector<std::uint32_t>& eval_points() const { return x_; }
    const std::vector<std::uint32_t>& multipliers() const { return z_; }

    FqMatrix generator() const;
    /// Vandermonde(n-k rows) * diag(z') with z'_i = 1/(z_i prod_{j!=i}(x_i - x_j)).
    FqMatrix parity_check() const;
    /// Dual multipliers z' as above.
    std::vector<std::uint32_t> dual_multipliers() const;
    LinearCode code() const;

  private:
    FieldCtx ctx_;
    std::vector<std::uint32_t> x_, z_;
    std::size_t k_;
};

/// Visits every codeword exactly once (gray-style incremental encoding).
/// Guarded by q^k <= 2^24.
void for_each_codeword(const LinearCode& code, const std::function<void(const FqVector&)>& fn);

/// Exhaustive minimum distance; guard q^k <= 2^24.
std::size_t min_distance_bruteforce(const LinearCode& code);

/// Canonical coset representative a_s with H a_s^T = s^T.
FqVector coset_representative(const LinearCode& code, const FqVector& s);
bool same_coset(const LinearCode& code, const FqVector& a, const FqVector& b);

/// Restriction of the code to the listed positions. The dimension of the
/// result is computed, never assumed.
LinearCode puncture(const LinearCode& code, const std::vector<std::uint32_t>& positions);

/// True when the positions determine codewords uniquely: rank(G_I) = k.
/// Accepts plain (size k) and augmented (size k + l) sets.
bool is_information_set(const LinearCode& code, const std::vector<std::uint32_t>& positions);

}  // namespace sdt

#endif
