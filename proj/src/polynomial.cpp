#include "steenrod/polynomial.hpp"

#include <algorithm>

namespace steenrod {

Polynomial::Polynomial(std::size_t n, Prime p) : n_(n), p_(p)
{
    if (n == 0 || n > kMaxVars)
        throw AlgebraError("number of variables out of range");
}

Polynomial Polynomial::constant(std::size_t n, Prime p, std::int64_t c)
{
    return monomial(Monomial(n), p, c);
}

Polynomial Polynomial::monomial(const Monomial& m, Prime p, std::int64_t c)
{
    Polynomial f(m.nvars(), p);
    auto r = reduce(c, p.value());
    if (r)
        f.terms_.push_back({m, r});
    return f;
}

Polynomial Polynomial::from_terms(std::size_t n, Prime p, std::vector<std::pair<Monomial, std::int64_t>> terms)
{
    PolyAccumulator acc(n, p);
    for (auto& [m, c] : terms) {
        if (m.nvars() != n)
            throw AlgebraError("term has wrong variable count");
        acc.add(m, reduce(c, p.value()));
    }
    return acc.finish();
}

const Term& Polynomial::leading() const
{
    if (terms_.empty())
        throw AlgebraError("leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::coefficient(const Monomial& m) const noexcept
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return term_before(t.mono, key); });
    if (it != terms_.end() && it->mono == m)
        return it->coef;
    return 0;
}

bool Polynomial::is_homogeneous() const noexcept
{
    // sorted by degree first, so the extremes decide
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

std::optional<std::uint64_t> Polynomial::degree() const noexcept
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.front().mono.degree();
}

bool Polynomial::has_exterior() const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.ext_mask() != 0; });
}

void Polynomial::check_compatible(const Polynomial& o) const
{
    if (n_ != o.n_)
        throw AlgebraError("mismatched variable counts");
    if (!(p_ == o.p_))
        throw AlgebraError("mismatched primes");
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    check_compatible(o);
    const std::uint32_t p = p_.value();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->mono == b->mono) {
            auto c = mod_add(a->coef, b->coef, p);
            if (c)
                out.push_back({a->mono, c});
            ++a;
            ++b;
        }
        else if (term_before(a->mono, b->mono))
            out.push_back(*a++);
        else
            out.push_back(*b++);
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, o.terms_.end());
    return Polynomial(n_, p_, std::move(out));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef = p_.value() - t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    return poly_mul(*this, o);
}

Polynomial Polynomial::scaled(std::uint32_t c) const
{
    c %= p_.value();
    if (c == 0)
        return Polynomial(n_, p_);
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef = mod_mul(t.coef, c, p_.value());
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint32_t c) const
{
    if (m.nvars() != n_)
        throw AlgebraError("mismatched variable counts");
    const std::uint32_t p = p_.value();
    c %= p;
    std::vector<Term> out;
    if (c == 0)
        return Polynomial(n_, p_);
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto [sign, mono] = mono_mul(t.mono, m);
        if (sign == 0)
            continue;
        auto coef = mod_mul(t.coef, c, p);
        out.push_back({mono, sign > 0 ? coef : p - coef});
    }
    // multiplying by a pure y-monomial preserves the order
    if (m.ext_mask() != 0)
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return term_before(a.mono, b.mono); });
    return Polynomial(n_, p_, std::move(out));
}

void PolyAccumulator::add(const Monomial& m, std::uint32_t c)
{
    if (c == 0)
        return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted)
        it->second = mod_add(it->second, c, p_.value());
}

void PolyAccumulator::add(const Polynomial& f, std::uint32_t c)
{
    if (f.nvars() != n_ || !(f.prime() == p_))
        throw AlgebraError("accumulator: incompatible polynomial");
    c %= p_.value();
    if (c == 0)
        return;
    for (const auto& t : f.terms())
        add(t.mono, mod_mul(t.coef, c, p_.value()));
}

void PolyAccumulator::merge(const PolyAccumulator& other)
{
    for (const auto& [m, c] : other.acc_)
        add(m, c);
}

Polynomial PolyAccumulator::finish() const
{
    std::vector<Term> out;
    out.reserve(acc_.size());
    for (const auto& [m, c] : acc_)
        if (c)
            out.push_back({m, c});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return term_before(a.mono, b.mono); });
    return Polynomial(n_, p_, std::move(out));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g)
{
    return f + g;
}

Polynomial poly_scale(FieldScalar c, const Polynomial& f)
{
    if (!(c.prime() == f.prime()))
        throw AlgebraError("poly_scale: mismatched primes");
    return f.scaled(c.value());
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g)
{
    if (f.nvars() != g.nvars())
        throw AlgebraError("poly_mul: mismatched variable counts");
    if (!(f.prime() == g.prime()))
        throw AlgebraError("poly_mul: mismatched primes");
    const std::uint32_t p = f.prime().value();
    if (g.size() == 1) {
        const auto& t = g.terms().front();
        return f.times_monomial(t.mono, t.coef);
    }
    PolyAccumulator acc(f.nvars(), f.prime());
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            auto [sign, mono] = mono_mul(a.mono, b.mono);
            if (sign == 0)
                continue;
            auto c = mod_mul(a.coef, b.coef, p);
            acc.add(mono, sign > 0 ? c : p - c);
        }
    }
    return acc.finish();
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t e)
{
    Polynomial result = Polynomial::constant(f.nvars(), f.prime(), 1);
    Polynomial base = f;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

}  // namespace steenrod
