#ifndef SDT_ALGEBRAIC_HPP
#define SDT_ALGEBRAIC_HPP

#include <optional>

#include "sdt/codes.hpp"
#include "sdt/poly.hpp"

namespace sdt {

struct HammingDecodeResult {
    FqVector codeword;
    FqVector error;  // weight <= 1
};

/// Single-error correction for the [2^r-1, 2^r-1-r] Hamming code: a nonzero
/// syndrome read as a binary integer is the 1-based error position.
HammingDecodeResult hamming_decode(unsigned r, const FqVector& y);

struct BwDecodeResult {
    PolyFq f;        // message polynomial, deg < k
    FqVector error;  // y - codeword
};

/// Berlekamp-Welch decoding of a GRS code up to floor((n-k)/2) errors.
/// Solves the linearized system y_i E(x_i) = N(x_i) with deg E <= floor((n-k)/2)
/// (monic, degree lowered on inconsistency) and deg N < k + ceil((n-k)/2),
/// then recovers f = N / E. Returns nullopt when no solution within the
/// radius exists (division leaves a remainder, or the recovered codeword is
/// too far from y).
std::optional<BwDecodeResult> bw_decode(const GrsCode& code, const FqVector& y);

}  // namespace sdt

#endif
