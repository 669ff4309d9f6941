#include "steenrod/monomial.hpp"

#include <bit>
#include <limits>
#include <string>

namespace steenrod {

namespace {

void check_nvars(std::size_t n)
{
    if (n == 0 || n > kMaxVars)
        throw AlgebraError("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
}

void check_index(std::size_t n, std::size_t i)
{
    if (i < 1 || i > n)
        throw AlgebraError("variable index " + std::to_string(i) + " out of [1, " + std::to_string(n) + "]");
}

}  // namespace

Monomial::Monomial(std::size_t n) : n_(static_cast<std::uint8_t>(n))
{
    check_nvars(n);
}

Monomial::Monomial(std::size_t n, std::span<const std::size_t> ext, std::span<const std::uint32_t> exps)
    : Monomial(n)
{
    if (exps.size() != n)
        throw AlgebraError("exponent vector length does not match variable count");
    std::size_t prev = 0;
    for (auto i : ext) {
        check_index(n, i);
        if (i <= prev)
            throw AlgebraError("exterior indices must be strictly increasing");
        prev = i;
        ext_ |= 1u << (i - 1);
    }
    for (std::size_t i = 0; i < n; ++i)
        exps_[i] = exps[i];
}

Monomial Monomial::x(std::size_t n, std::size_t i)
{
    Monomial m(n);
    check_index(n, i);
    m.ext_ = 1u << (i - 1);
    return m;
}

Monomial Monomial::y(std::size_t n, std::size_t i, std::uint32_t e)
{
    Monomial m(n);
    check_index(n, i);
    m.exps_[i - 1] = e;
    return m;
}

std::size_t Monomial::ext_size() const noexcept
{
    return static_cast<std::size_t>(std::popcount(ext_));
}

std::vector<std::size_t> Monomial::ext() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if ((ext_ >> i) & 1u)
            out.push_back(i + 1);
    return out;
}

std::uint64_t Monomial::y_degree() const noexcept
{
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        d += exps_[i];
    return d;
}

bool Monomial::is_one() const noexcept
{
    return ext_ == 0 && y_degree() == 0;
}

Monomial Monomial::with_x(std::size_t i, bool present) const
{
    check_index(n_, i);
    Monomial m = *this;
    if (present)
        m.ext_ |= 1u << (i - 1);
    else
        m.ext_ &= ~(1u << (i - 1));
    return m;
}

Monomial Monomial::with_exp(std::size_t i, std::uint32_t e) const
{
    check_index(n_, i);
    Monomial m = *this;
    m.exps_[i - 1] = e;
    return m;
}

std::size_t Monomial::hash() const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(n_) << 32) ^ ext_;
    for (std::size_t i = 0; i < n_; ++i) {
        h ^= exps_[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

bool term_before(const Monomial& a, const Monomial& b) noexcept
{
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    if (a.ext_mask() != b.ext_mask()) {
        // lexicographic comparison of the increasing index lists
        std::uint32_t ma = a.ext_mask(), mb = b.ext_mask();
        while (ma && mb) {
            int ia = std::countr_zero(ma), ib = std::countr_zero(mb);
            if (ia != ib)
                return ia < ib;
            ma &= ma - 1;
            mb &= mb - 1;
        }
        return ma == 0;  // a is a proper prefix of b
    }
    const auto ea = a.exps(), eb = b.exps();
    for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
        if (ea[i] != eb[i])
            return ea[i] > eb[i];
    return false;
}

SignedMonomial mono_mul(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw AlgebraError("mono_mul: mismatched variable counts");
    if (a.ext_mask() & b.ext_mask())
        return {0, Monomial(a.nvars())};
    // every pair (i in a, j in b) with i > j is one transposition
    int swaps = 0;
    std::uint32_t mb = b.ext_mask();
    while (mb) {
        int j = std::countr_zero(mb);
        swaps += std::popcount(a.ext_mask() >> (j + 1));
        mb &= mb - 1;
    }
    Monomial out = a;
    out.ext_ |= b.ext_;
    for (std::size_t j = 0; j < a.n_; ++j) {
        std::uint64_t e = static_cast<std::uint64_t>(a.exps_[j]) + b.exps_[j];
        if (e > std::numeric_limits<std::uint32_t>::max())
            throw AlgebraError("exponent overflow");
        out.exps_[j] = static_cast<std::uint32_t>(e);
    }
    return {swaps % 2 ? -1 : 1, out};
}

}  // namespace steenrod
