#include "steenrod/oracles.hpp"

#include <optional>

#include "steenrod/invariants.hpp"

namespace steenrod {

namespace {

Polynomial zero2(Prime p)
{
    return Polynomial(2, p);
}

// Q_{2,0}^a Q_{2,1}^b
Polynomial Qm(Prime p, std::uint64_t a, std::uint64_t b)
{
    return dickson_monomial(p, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

Polynomial L2(Prime p)
{
    return l_poly(2, 2, p);
}

Polynomial signed_term(std::int64_t coef, const Polynomial& f)
{
    return f.scaled(reduce(coef, f.prime().value()));
}

std::optional<Polynomial> table_L2(std::uint64_t i, std::uint64_t j, Prime prime)
{
    const std::uint64_t p = prime.value();
    const Polynomial l = L2(prime);
    if (i == 0 && j == 0)
        return l;
    if (i == 0 && j == 1)
        return -(l * Qm(prime, 1, 0));
    if (i == 0 && j == p)
        return l * (Qm(prime, 0, p + 1) - Qm(prime, p, 0));
    if (i == 0 && j == p + 1)
        return l * Qm(prime, p + 1, 0);
    if (i == 1 && j == p)
        return l * Qm(prime, 1, p);
    if (i == p && j == 0)
        return l * Qm(prime, 0, 1);
    if (i == p + 1 && j == 0)
        return l * Qm(prime, 1, 0);
    return std::nullopt;
}

std::optional<Polynomial> table_L20(std::uint64_t i, std::uint64_t j, Prime prime)
{
    const std::uint64_t p = prime.value(), p2 = p * p;
    const Polynomial l = L2(prime);
    if (i == 0 && j == 0)
        return l * Qm(prime, 1, 0);
    if (i == 0 && j == p)
        return -(l * Qm(prime, p + 1, 0));
    if (i == 0 && j == p2)
        return l * (Qm(prime, 1, p2 + p) - Qm(prime, p2 + 1, 0));
    if (i == 0 && j == p2 + p)
        return l * Qm(prime, p2 + p + 1, 0);
    if (i == p && j == p2)
        return l * Qm(prime, p + 1, p2);
    if (i == p2 && j == 0)
        return l * Qm(prime, 1, p);
    if (i == p2 + p && j == 0)
        return l * Qm(prime, p + 1, 0);
    return std::nullopt;
}

std::optional<Polynomial> table_L21(std::uint64_t i, std::uint64_t j, Prime prime)
{
    const std::uint64_t p = prime.value(), p2 = p * p;
    const Polynomial l = L2(prime);
    if (i == 0 && j == 0)
        return l * Qm(prime, 0, 1);
    if (i == 0 && j == p2)
        return l * (Qm(prime, 0, p2 + p + 1) - Qm(prime, p, p2) - Qm(prime, p2, 1));
    if (i == 0 && j == p2 + 1)
        return l * Qm(prime, p + 1, p2);
    if (i == 1 && j == 0)
        return l * Qm(prime, 1, 0);
    if (i == 1 && j == p2)
        return l * (Qm(prime, 1, p2 + p) - Qm(prime, p2 + 1, 0));
    if (i == p2 && j == 0)
        return l * (Qm(prime, 0, p + 1) - Qm(prime, p, 0));
    if (i == p2 && j == 1)
        return l * Qm(prime, p + 1, 0);
    if (i == p2 + 1 && j == 0)
        return l * Qm(prime, 1, p);
    return std::nullopt;
}

std::optional<Polynomial> table_entry(LemmaTarget target, std::uint32_t i, std::uint32_t j, Prime p)
{
    switch (target) {
    case LemmaTarget::L2:
        return table_L2(i, j, p);
    case LemmaTarget::L20:
        return table_L20(i, j, p);
    case LemmaTarget::L21:
        return table_L21(i, j, p);
    }
    return std::nullopt;
}

std::int64_t minus_one_pow(std::uint64_t e)
{
    return e % 2 ? -1 : 1;
}

void require(bool ok, Thm33Part part)
{
    if (!ok)
        throw AlgebraError("T33-" + to_string(part) + ": indices outside the stated range");
}

}  // namespace

std::string to_string(LemmaTarget t)
{
    switch (t) {
    case LemmaTarget::L2:
        return "L2";
    case LemmaTarget::L20:
        return "L20";
    case LemmaTarget::L21:
        return "L21";
    }
    return "?";
}

std::string to_string(Thm33Part part)
{
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
    return names[static_cast<int>(part)];
}

Polynomial lemma_target(LemmaTarget t, Prime p)
{
    switch (t) {
    case LemmaTarget::L2:
        return l_poly(2, 2, p);
    case LemmaTarget::L20:
        return l_poly(2, 0, p);
    case LemmaTarget::L21:
        return l_poly(2, 1, p);
    }
    throw AlgebraError("unknown target");
}

std::uint32_t binom_or_zero(std::int64_t n, std::int64_t m, std::uint32_t p)
{
    if (n < 0 || m < 0 || m > n)
        return 0;
    return binom_residue(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m), p);
}

Polynomial oracle_lemma22(LemmaTarget target, std::uint32_t i, std::uint32_t j, Prime p)
{
    auto entry = table_entry(target, i, j, p);
    return entry ? *entry : zero2(p);
}

bool lemma22_listed(LemmaTarget target, std::uint32_t i, std::uint32_t j, Prime p)
{
    return table_entry(target, i, j, p).has_value();
}

Polynomial oracle_prop31(std::uint32_t s, std::uint32_t i, Prime prime)
{
    const std::uint64_t p = prime.value();
    const std::uint64_t k = i / p, r = i % p;
    if (s == 0) {
        if (i == p * p - 1)
            return Qm(prime, p, 0);
        if (r <= k && k < p)
            return signed_term(minus_one_pow(k), Qm(prime, r + 1, k - r))
                .scaled(binom_residue(k, r, prime.value()));
        return zero2(prime);
    }
    if (s == 1) {
        if (i == p * p - p)
            return Qm(prime, 0, p);
        if (r <= k + 1 && k + 1 <= p)
            return signed_term(minus_one_pow(k), Qm(prime, r, k + 1 - r))
                .scaled(binom_residue(k + 1, r, prime.value()));
        return zero2(prime);
    }
    throw AlgebraError("oracle_prop31: s must be 0 or 1");
}

Polynomial oracle_thm32(std::uint32_t s, std::uint32_t j, Prime prime)
{
    if (s > 1)
        throw AlgebraError("oracle_thm32: s must be 0 or 1");
    const std::uint64_t p = prime.value();
    if (j >= p * p)
        return zero2(prime);
    const std::uint64_t k = j / p, r = j % p;
    Polynomial sum = zero2(prime);
    for (std::uint64_t i = 0; i <= k; ++i) {
        std::uint32_t c = mod_mul(binom_residue(k + s, i + s, prime.value()), binom_residue(r + i, i, prime.value()),
                                  prime.value());
        if (c == 0)
            continue;
        sum = sum + signed_term(minus_one_pow(i), Qm(prime, (k - i) * p, i * (p + 1))).scaled(c);
    }
    return Qm(prime, r, 0) * dickson(2, s, prime) * sum;
}

Polynomial oracle_thm33(Thm33Part part, const Thm33Indices& idx, Prime prime)
{
    const std::uint64_t p = prime.value();
    const std::uint32_t pv = prime.value();
    switch (part) {
    case Thm33Part::i:
        require(idx.k < idx.i && idx.i < p && idx.r < p, part);
        return zero2(prime);
    case Thm33Part::ii:
        require(idx.i < p, part);
        return signed_term(minus_one_pow(idx.i), Qm(prime, idx.i + 1, static_cast<std::uint64_t>(idx.i) * p));
    case Thm33Part::iii: {
        if (idx.j >= p * p)
            return zero2(prime);
        const std::int64_t k = idx.j / pv, r = idx.j % pv;
        Polynomial sum = zero2(prime);
        for (std::int64_t i = 0; i <= k - 1; ++i) {
            std::uint32_t first = mod_mul(reduce(k, pv),
                                          mod_mul(binom_or_zero(k - 1, i, pv), binom_or_zero(r + i + 1, i + 1, pv), pv),
                                          pv);
            std::uint32_t second = mod_mul(binom_or_zero(k - 2, i - 1, pv), binom_or_zero(r + i, i + 1, pv), pv);
            std::uint32_t c = mod_sub(first, second, pv);
            if (c == 0)
                continue;
            sum = sum + signed_term(minus_one_pow(static_cast<std::uint64_t>(i)),
                                    Qm(prime, static_cast<std::uint64_t>(k - 1 - i) * p,
                                       static_cast<std::uint64_t>(i) * (p + 1)))
                            .scaled(c);
        }
        return -(Qm(prime, static_cast<std::uint64_t>(r) + 2, p) * sum);
    }
    case Thm33Part::iv:
        require(idx.k + 1 < idx.i && idx.i < p && idx.r < p, part);
        return zero2(prime);
    case Thm33Part::v:
        require(idx.k < p, part);
        return signed_term(minus_one_pow(idx.k), Qm(prime, idx.k + 1, static_cast<std::uint64_t>(idx.k) * p));
    case Thm33Part::vi: {
        if (idx.j >= p * p)
            return zero2(prime);
        const std::uint64_t k = idx.j / p, r = idx.j % p;
        Polynomial sum = zero2(prime);
        for (std::uint64_t i = 0; i <= k; ++i) {
            std::uint32_t c = mod_mul(binom_residue(k, i, pv), binom_residue(r + i, i, pv), pv);
            if (c == 0)
                continue;
            sum = sum + signed_term(minus_one_pow(i), Qm(prime, (k - i) * p, i * (p + 1))).scaled(c);
        }
        return (Qm(prime, r + 1, 0) * sum).scaled(reduce(static_cast<std::int64_t>(k + 1), pv));
    }
    }
    throw AlgebraError("unknown part");
}

std::optional<AlternativeReading> oracle_thm33_alternative(Thm33Part part, const Thm33Indices& idx, Prime prime)
{
    const std::uint64_t p = prime.value();
    const std::uint32_t pv = prime.value();
    if (part == Thm33Part::v && idx.k + 1 == p)
        return AlternativeReading{zero2(prime), "k = p-1: r1 + r2 = p^2 exceeds the y-degree of Q21, so the value is 0"};
    if (part != Thm33Part::iii || idx.j >= p * p)
        return std::nullopt;
    const std::uint64_t k = idx.j / p, r = idx.j % p;
    Polynomial sum = zero2(prime);
    for (std::uint64_t i = 0; i + 1 <= k; ++i) {
        std::uint32_t c = mod_mul(binom_residue(k - 1, i, pv), binom_residue(r + i + 1, i + 1, pv), pv);
        if (c == 0)
            continue;
        sum = sum + signed_term(minus_one_pow(i), Qm(prime, (k - 1 - i) * p, i * (p + 1))).scaled(c);
    }
    Polynomial value = -(Qm(prime, r + 2, p) * sum).scaled(reduce(static_cast<std::int64_t>(k), pv));
    return AlternativeReading{value, "matches -k Q20^(r+2) Q21^p sum_i (-1)^i C(k-1,i) C(r+i+1,i+1) ..., "
                                     "i.e. without the C(k-2,i-1) C(r+i,i+1) term"};
}

}  // namespace steenrod
