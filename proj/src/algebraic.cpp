#include "sdt/algebraic.hpp"

namespace sdt {

HammingDecodeResult hamming_decode(unsigned r, const FqVector& y) {
    const std::size_t n = (std::size_t{1} << r) - 1;
    if (y.size() != n) throw DomainError("hamming_decode: wrong length");
    LinearCode code = hamming_code(r);
    FqVector syn = code.syndrome(y);
    FqVector e(y.ctx(), n);
    std::size_t pos = 0;
    for (unsigned i = 0; i < r; ++i) pos = (pos << 1) | syn[i];
    if (pos != 0) e.set(pos - 1, 1);
    return HammingDecodeResult{y - e, std::move(e)};
}

std::optional<BwDecodeResult> bw_decode(const GrsCode& code, const FqVector& y) {
    const FieldCtx& f = code.ctx();
    const std::size_t n = code.length(), k = code.dimension();
    if (y.size() != n) throw DomainError("bw_decode: wrong length");
    const std::size_t radius = (n - k) / 2;
    const std::size_t n_deg = k + (n - k + 1) / 2;  // deg N < k + ceil((n-k)/2)
    const auto& xs = code.eval_points();
    const auto& zs = code.multipliers();

    // Reduce general multipliers to the z = 1 case coordinate-wise.
    FqVector yn(f, n);
    for (std::size_t i = 0; i < n; ++i) yn.set(i, f.mul(y[i], f.inv(zs[i])));

    for (std::size_t d = radius + 1; d-- > 0;) {
        // Unknowns: E_0..E_{d-1} (E monic of degree d), then N_0..N_{n_deg-1}.
        FqMatrix a(f, n, d + n_deg);
        FqVector b(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t p = 1;
            for (std::size_t j = 0; j < d; ++j) {
                a.set(i, j, f.mul(yn[i], p));
                p = f.mul(p, xs[i]);
            }
            b.set(i, f.neg(f.mul(yn[i], p)));  // -y_i x_i^d from the monic term
            p = 1;
            for (std::size_t l = 0; l < n_deg; ++l) {
                a.set(i, d + l, f.neg(p));
                p = f.mul(p, xs[i]);
            }
        }
        auto sol = solve_linear(a, b);
        if (!sol) continue;  // inconsistent at this degree, lower the normalization

        std::vector<std::uint32_t> ec(d + 1, 0), nc(n_deg, 0);
        for (std::size_t j = 0; j < d; ++j) ec[j] = (*sol)[j];
        ec[d] = 1;
        for (std::size_t l = 0; l < n_deg; ++l) nc[l] = (*sol)[d + l];
        PolyFq locator(f, std::move(ec)), numer(f, std::move(nc));
        auto [quot, rem] = numer.divmod(locator);
        if (!rem.is_zero()) return std::nullopt;  // beyond the decoding radius
        if (quot.degree() >= static_cast<int>(k)) return std::nullopt;

        FqVector c(f, n), e(f, n);
        for (std::size_t i = 0; i < n; ++i) c.set(i, f.mul(zs[i], quot.eval(xs[i])));
        e = y - c;
        if (hamming_weight(e) > radius) return std::nullopt;
        return BwDecodeResult{std::move(quot), std::move(e)};
    }
    return std::nullopt;
}

}  // namespace sdt
