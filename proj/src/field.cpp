#include "sdt/field.hpp"

namespace sdt {

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FieldCtx::FieldCtx(unsigned q) : q_(q) {
    if (q < 2 || q > (1u << 16) || !is_prime(q))
        throw DomainError("FieldCtx: modulus must be a prime in [2, 2^16], got " + std::to_string(q));
    if (q < (1u << 12)) {
        std::vector<std::uint16_t> table(q, 0);
        table[1] = 1;
        // inv(i) = -(q/i) * inv(q%i) mod q
        for (unsigned i = 2; i < q; ++i)
            table[i] = static_cast<std::uint16_t>(
                (static_cast<std::uint64_t>(q - q / i) * table[q % i]) % q);
        inv_table_ = std::make_shared<const std::vector<std::uint16_t>>(std::move(table));
    }
}

unsigned FieldCtx::pow(unsigned a, std::uint64_t e) const {
    std::uint64_t base = a % q_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<unsigned>(acc);
}

unsigned FieldCtx::inv(unsigned a) const {
    if (a == 0) throw DomainError("FieldCtx::inv: zero has no inverse");
    a %= q_;
    if (inv_table_) return (*inv_table_)[a];
    return pow(a, q_ - 2);
}

}  // namespace sdt
