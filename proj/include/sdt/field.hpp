#ifndef SDT_FIELD_HPP
#define SDT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "sdt/errors.hpp"

namespace sdt {

/// Arithmetic context for a prime field F_q, 2 <= q <= 2^16.
/// Residues are plain machine integers in [0, q). For q < 2^12 inverses come
/// from a precomputed table shared between copies; larger moduli fall back to
/// exponentiation.
class FieldCtx {
  public:
    explicit FieldCtx(unsigned q);

    unsigned q() const { return q_; }

    unsigned add(unsigned a, unsigned b) const {
        unsigned s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    unsigned sub(unsigned a, unsigned b) const { return a >= b ? a - b : a + q_ - b; }
    unsigned neg(unsigned a) const { return a == 0 ? 0 : q_ - a; }
    unsigned mul(unsigned a, unsigned b) const {
        return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    unsigned reduce(std::uint64_t a) const { return static_cast<unsigned>(a % q_); }
    unsigned pow(unsigned a, std::uint64_t e) const;
    unsigned inv(unsigned a) const;

    bool operator==(const FieldCtx& other) const { return q_ == other.q_; }

  private:
    unsigned q_ = 0;
    std::shared_ptr<const std::vector<std::uint16_t>> inv_table_;
};

bool is_prime(unsigned q);

}  // namespace sdt

#endif
