#include "steenrod/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace steenrod {

namespace {

std::uint32_t pow_u32(std::uint32_t p, std::uint32_t e)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= p;
        if (r > std::numeric_limits<std::uint32_t>::max())
            throw AlgebraError("bracket exponent p^" + std::to_string(e) + " too large");
    }
    return static_cast<std::uint32_t>(r);
}

std::mutex& memo_mutex()
{
    static std::mutex mu;
    return mu;
}

}  // namespace

Polynomial bracket(const BracketSpec& spec, std::size_t n, Prime p)
{
    if (spec.k > n)
        throw AlgebraError("bracket: more x-rows than variables");
    if (spec.k >= p.value())
        throw AlgebraError("bracket: k! is not invertible mod p");
    if (spec.exps.size() != n - spec.k)
        throw AlgebraError("bracket: need exactly n - k exponent rows");

    std::vector<Monomial> ypow;  // row r (0-based, r >= k), column c -> y_c^{p^e_r}
    std::vector<std::uint32_t> row_pow;
    for (auto e : spec.exps)
        row_pow.push_back(pow_u32(p.value(), e));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    PolyAccumulator acc(n, p);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += perm[a] > perm[b];
        int sign = inversions % 2 ? -1 : 1;
        Monomial prod(n);
        for (std::size_t r = 0; r < n && sign != 0; ++r) {
            Monomial entry = r < spec.k ? Monomial::x(n, perm[r]) : Monomial::y(n, perm[r], row_pow[r - spec.k]);
            auto [s, m] = mono_mul(prod, entry);
            sign *= s;
            prod = m;
        }
        if (sign != 0)
            acc.add(prod, sign > 0 ? 1 : p.value() - 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::uint32_t fact = 1;
    for (std::uint32_t i = 2; i <= spec.k; ++i)
        fact = mod_mul(fact, i, p.value());
    return acc.finish().scaled(mod_inv(fact, p.value()));
}

Polynomial l_poly(std::size_t n, std::size_t s, Prime p)
{
    if (s > n)
        throw AlgebraError("l_poly: s must lie in [0, n]");
    static std::map<std::tuple<std::size_t, std::size_t, std::uint32_t>, Polynomial> memo;
    auto key = std::make_tuple(n, s, p.value());
    {
        std::lock_guard lock(memo_mutex());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    BracketSpec spec;
    for (std::uint32_t e = 0; e <= n; ++e)
        if (e != s)
            spec.exps.push_back(e);
    Polynomial value = bracket(spec, n, p);
    std::lock_guard lock(memo_mutex());
    return memo.try_emplace(key, std::move(value)).first->second;
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw AlgebraError("exact_div: division by zero");
    if (f.nvars() != g.nvars() || !(f.prime() == g.prime()))
        throw AlgebraError("exact_div: incompatible polynomials");
    const std::size_t n = f.nvars();
    const std::uint32_t p = f.prime().value();
    const Term& lg = g.leading();
    const std::uint32_t lg_inv = mod_inv(lg.coef, p);
    const std::uint32_t g_ext = lg.mono.ext_mask();

    PolyAccumulator quotient(n, f.prime());
    PolyAccumulator remainder(n, f.prime());
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const Term lt = rest.leading();
        bool divides = (lt.mono.ext_mask() & g_ext) == g_ext;
        for (std::size_t i = 1; i <= n && divides; ++i)
            divides = lt.mono.exp(i) >= lg.mono.exp(i);
        if (!divides) {
            remainder.add(lt.mono, lt.coef);
            rest = rest - Polynomial::monomial(lt.mono, f.prime(), lt.coef);
            continue;
        }
        Monomial qm(n);
        for (auto i : lt.mono.ext())
            if (!((g_ext >> (i - 1)) & 1u))
                qm = qm.with_x(i, true);
        for (std::size_t i = 1; i <= n; ++i)
            qm = qm.with_exp(i, lt.mono.exp(i) - lg.mono.exp(i));
        auto [sign, check] = mono_mul(qm, lg.mono);
        if (sign == 0 || !(check == lt.mono))
            throw AlgebraError("exact_div: internal monomial mismatch");
        std::uint32_t c = mod_mul(lt.coef, lg_inv, p);
        if (sign < 0)
            c = mod_neg(c, p);
        quotient.add(qm, c);
        rest = rest - Polynomial::monomial(qm, f.prime(), c) * g;
        // the order is not multiplicative across exterior parts; refuse rather than loop
        if (!rest.is_zero() && !term_before(lt.mono, rest.leading().mono))
            throw AlgebraError("exact_div: leading term did not decrease");
    }
    Polynomial r = remainder.finish();
    if (!r.is_zero())
        throw NotDivisibleError(std::move(r));
    return quotient.finish();
}

Polynomial dickson(std::size_t n, std::size_t s, Prime p)
{
    if (s >= n)
        throw AlgebraError("dickson: s must lie in [0, n)");
    static std::map<std::tuple<std::size_t, std::size_t, std::uint32_t>, Polynomial> memo;
    auto key = std::make_tuple(n, s, p.value());
    {
        std::lock_guard lock(memo_mutex());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    Polynomial value = exact_div(l_poly(n, s, p), l_poly(n, n, p));
    std::lock_guard lock(memo_mutex());
    return memo.try_emplace(key, std::move(value)).first->second;
}

std::vector<LinearMap> group_generators(std::size_t n, Prime p, Group group)
{
    std::vector<LinearMap> gens;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j)
                gens.push_back(LinearMap::transvection(n, p, i, j, 1));
    if (group == Group::GL) {
        std::vector<std::uint32_t> d(n, 1);
        d[0] = primitive_root(p);
        gens.push_back(LinearMap::diagonal(n, p, d));
    }
    return gens;
}

bool check_invariance(const Polynomial& f, Group group)
{
    for (const auto& g : group_generators(f.nvars(), f.prime(), group))
        if (!(substitute(f, g) == f))
            return false;
    return true;
}

Polynomial dickson_monomial(Prime p, std::uint32_t a, std::uint32_t b)
{
    static std::map<std::tuple<std::uint32_t, int, std::uint32_t>, Polynomial> powers;
    auto power = [&](int which, std::uint32_t e) {
        auto key = std::make_tuple(p.value(), which, e);
        {
            std::lock_guard lock(memo_mutex());
            if (auto it = powers.find(key); it != powers.end())
                return it->second;
        }
        Polynomial value = poly_pow(dickson(2, static_cast<std::size_t>(which), p), e);
        std::lock_guard lock(memo_mutex());
        return powers.try_emplace(key, std::move(value)).first->second;
    };
    return power(0, a) * power(1, b);
}

std::optional<std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>>
dickson_coordinates(const Polynomial& f)
{
    if (f.nvars() != 2)
        throw AlgebraError("dickson_coordinates: only n = 2 is supported");
    if (f.has_exterior())
        return std::nullopt;
    const Prime prime = f.prime();
    const std::uint32_t p = prime.value();
    // leading monomials: Q_{2,0} -> y1^{p^2-p} y2^{p-1}, Q_{2,1} -> y1^{p^2-p}
    const std::uint64_t step1 = static_cast<std::uint64_t>(p) * p - p;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> coords;
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const Term lt = rest.leading();
        std::uint64_t u = lt.mono.exp(1), v = lt.mono.exp(2);
        if (v % (p - 1) || u % step1)
            return std::nullopt;
        std::uint64_t a = v / (p - 1), total = u / step1;
        if (a > total)
            return std::nullopt;
        auto b = static_cast<std::uint32_t>(total - a);
        Polynomial basis = dickson_monomial(prime, static_cast<std::uint32_t>(a), b);
        if (!(basis.leading().mono == lt.mono))
            throw AlgebraError("dickson_coordinates: unexpected leading monomial");
        std::uint32_t c = mod_mul(lt.coef, mod_inv(basis.leading().coef, p), p);
        coords[{static_cast<std::uint32_t>(a), b}] = c;
        rest = rest - basis.scaled(c);
    }
    return coords;
}

}  // namespace steenrod
