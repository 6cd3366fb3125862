#ifndef SDT_POLY_HPP
#define SDT_POLY_HPP

#include "sdt/linalg.hpp"

namespace sdt {

/// Polynomial over F_q, coefficients stored low degree first; the leading
/// coefficient is nonzero unless the polynomial is zero.
class PolyFq {
  public:
    explicit PolyFq(FieldCtx ctx) : ctx_(ctx) {}
    PolyFq(FieldCtx ctx, std::vector<std::uint32_t> coeffs);

    const FieldCtx& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    std::uint32_t eval(std::uint32_t x) const;

    PolyFq operator+(const PolyFq& o) const;
    PolyFq operator-(const PolyFq& o) const;
    PolyFq operator*(const PolyFq& o) const;
    bool operator==(const PolyFq& o) const { return ctx_.q() == o.ctx_.q() && c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyFq, PolyFq> divmod(const PolyFq& divisor) const;

    static PolyFq from_roots(FieldCtx ctx, const std::vector<std::uint32_t>& roots);

    std::string str() const;

  private:
    void trim();
    FieldCtx ctx_;
    std::vector<std::uint32_t> c_;
};

}  // namespace sdt

#endif
