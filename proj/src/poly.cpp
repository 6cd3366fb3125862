#include "sdt/poly.hpp"

#include <sstream>

namespace sdt {

PolyFq::PolyFq(FieldCtx ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= ctx_.q();
    trim();
}

void PolyFq::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t PolyFq::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
    return acc;
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_.add(coeff(i), o.coeff(i));
    return PolyFq(ctx_, std::move(r));
}

PolyFq PolyFq::operator-(const PolyFq& o) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_.sub(coeff(i), o.coeff(i));
    return PolyFq(ctx_, std::move(r));
}

PolyFq PolyFq::operator*(const PolyFq& o) const {
    if (is_zero() || o.is_zero()) return PolyFq(ctx_);
    std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = ctx_.add(r[i + j], ctx_.mul(c_[i], o.c_[j]));
    return PolyFq(ctx_, std::move(r));
}

std::pair<PolyFq, PolyFq> PolyFq::divmod(const PolyFq& divisor) const {
    if (divisor.is_zero()) throw DomainError("PolyFq::divmod: division by zero");
    PolyFq rem = *this;
    std::vector<std::uint32_t> quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(rem.degree() - dd + 1, 0);
    const std::uint32_t lead_inv = ctx_.inv(divisor.c_.back());
    while (!rem.is_zero() && rem.degree() >= dd) {
        const std::size_t shift = rem.degree() - dd;
        const std::uint32_t factor = ctx_.mul(rem.c_.back(), lead_inv);
        quot[shift] = factor;
        for (int i = 0; i <= dd; ++i)
            rem.c_[shift + i] = ctx_.sub(rem.c_[shift + i], ctx_.mul(factor, divisor.c_[i]));
        rem.trim();
    }
    return {PolyFq(ctx_, std::move(quot)), std::move(rem)};
}

PolyFq PolyFq::from_roots(FieldCtx ctx, const std::vector<std::uint32_t>& roots) {
    PolyFq p(ctx, {1});
    for (auto r : roots) p = p * PolyFq(ctx, {ctx.neg(r), 1});
    return p;
}

std::string PolyFq::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i];
    }
    return os.str();
}

}  // namespace sdt
