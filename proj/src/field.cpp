#include "steenrod/field.hpp"

#include <vector>

namespace steenrod {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(std::uint32_t value) : value_(value)
{
    if (value < 3 || value % 2 == 0 || !is_prime(value))
        throw AlgebraError("not an odd prime: " + std::to_string(value));
    if (value > 65521)
        throw AlgebraError("prime too large: " + std::to_string(value));
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept
{
    std::uint32_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw AlgebraError("inverse of zero mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::int64_t balanced(std::uint32_t v, std::uint32_t p) noexcept
{
    return v > p / 2 ? static_cast<std::int64_t>(v) - p : static_cast<std::int64_t>(v);
}

std::uint32_t primitive_root(Prime p)
{
    const std::uint32_t order = p.value() - 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t m = order;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    }
    if (m > 1)
        factors.push_back(m);
    for (std::uint32_t g = 2; g < p.value(); ++g) {
        bool ok = true;
        for (auto q : factors)
            if (mod_pow(g, order / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    throw AlgebraError("no primitive root found");
}

namespace {

// C(a, b) for 0 <= b <= a < p
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    if (b > a)
        return 0;
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < b; ++i) {
        num = mod_mul(num, a - i, p);
        den = mod_mul(den, i + 1, p);
    }
    return mod_mul(num, mod_inv(den, p), p);
}

}  // namespace

std::uint32_t binom_residue(std::uint64_t k, std::uint64_t r, std::uint32_t p)
{
    if (r > k)
        return 0;
    std::uint32_t result = 1;
    while (r > 0 || k > 0) {
        auto kd = static_cast<std::uint32_t>(k % p);
        auto rd = static_cast<std::uint32_t>(r % p);
        if (rd > kd)
            return 0;
        result = mod_mul(result, small_binom(kd, rd, p), p);
        k /= p;
        r /= p;
    }
    return result;
}

FieldScalar binom_mod_p(std::uint64_t k, std::uint64_t r, Prime p)
{
    return FieldScalar(binom_residue(k, r, p.value()), p);
}

}  // namespace steenrod
