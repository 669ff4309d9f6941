#include "steenrod/linear_map.hpp"

#include <map>

namespace steenrod {

LinearMap::LinearMap(std::size_t n, Prime p) : n_(n), p_(p), a_(n * n, 0)
{
    if (n == 0 || n > kMaxVars)
        throw AlgebraError("matrix size out of range");
}

LinearMap::LinearMap(std::size_t n, Prime p, const std::vector<std::vector<std::int64_t>>& rows) : LinearMap(n, p)
{
    if (rows.size() != n)
        throw AlgebraError("matrix must have n rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw AlgebraError("matrix must have n columns");
        for (std::size_t j = 0; j < n; ++j)
            a_[i * n + j] = reduce(rows[i][j], p.value());
    }
}

LinearMap LinearMap::identity(std::size_t n, Prime p)
{
    LinearMap m(n, p);
    for (std::size_t i = 1; i <= n; ++i)
        m.at(i, i) = 1;
    return m;
}

LinearMap LinearMap::transvection(std::size_t n, Prime p, std::size_t i, std::size_t j, std::uint32_t c)
{
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw AlgebraError("transvection needs distinct indices in range");
    LinearMap m = identity(n, p);
    m.at(i, j) = c % p.value();
    return m;
}

LinearMap LinearMap::diagonal(std::size_t n, Prime p, const std::vector<std::uint32_t>& d)
{
    if (d.size() != n)
        throw AlgebraError("diagonal needs n entries");
    LinearMap m(n, p);
    for (std::size_t i = 1; i <= n; ++i)
        m.at(i, i) = d[i - 1] % p.value();
    return m;
}

LinearMap LinearMap::swap(std::size_t n, Prime p, std::size_t i, std::size_t j)
{
    LinearMap m = identity(n, p);
    m.at(i, i) = 0;
    m.at(j, j) = 0;
    m.at(i, j) = 1;
    m.at(j, i) = 1;
    return m;
}

LinearMap LinearMap::random_invertible(std::size_t n, Prime p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, p.value() - 1);
    while (true) {
        LinearMap m(n, p);
        for (auto& v : m.a_)
            v = dist(rng);
        if (m.invertible())
            return m;
    }
}

std::uint32_t LinearMap::det() const
{
    const std::uint32_t p = p_.value();
    std::vector<std::uint32_t> a = a_;
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a[pivot * n_ + col] == 0)
            ++pivot;
        if (pivot == n_)
            return 0;
        if (pivot != col) {
            for (std::size_t k = 0; k < n_; ++k)
                std::swap(a[pivot * n_ + k], a[col * n_ + k]);
            det = mod_neg(det, p);
        }
        auto pv = a[col * n_ + col];
        det = mod_mul(det, pv, p);
        auto inv = mod_inv(pv, p);
        for (std::size_t r = col + 1; r < n_; ++r) {
            auto factor = mod_mul(a[r * n_ + col], inv, p);
            if (!factor)
                continue;
            for (std::size_t k = col; k < n_; ++k)
                a[r * n_ + k] = mod_sub(a[r * n_ + k], mod_mul(factor, a[col * n_ + k], p), p);
        }
    }
    return det;
}

LinearMap LinearMap::operator*(const LinearMap& o) const
{
    if (n_ != o.n_ || !(p_ == o.p_))
        throw AlgebraError("incompatible matrices");
    const std::uint32_t p = p_.value();
    LinearMap r(n_, p_);
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; j <= n_; ++j) {
            std::uint32_t s = 0;
            for (std::size_t k = 1; k <= n_; ++k)
                s = mod_add(s, mod_mul((*this)(i, k), o(k, j), p), p);
            r.at(i, j) = s;
        }
    return r;
}

Polynomial substitute(const Polynomial& f, const LinearMap& g)
{
    const std::size_t n = f.nvars();
    const Prime p = f.prime();
    if (g.size() != n || !(g.prime() == p))
        throw AlgebraError("substitute: incompatible linear map");

    std::vector<Polynomial> xs, ys;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::pair<Monomial, std::int64_t>> xt, yt;
        for (std::size_t j = 1; j <= n; ++j) {
            if (g(i, j) == 0)
                continue;
            xt.emplace_back(Monomial::x(n, j), g(i, j));
            yt.emplace_back(Monomial::y(n, j), g(i, j));
        }
        xs.push_back(Polynomial::from_terms(n, p, std::move(xt)));
        ys.push_back(Polynomial::from_terms(n, p, std::move(yt)));
    }

    std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> powers;
    auto y_power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, poly_pow(ys[i - 1], e)).first;
        return it->second;
    };

    PolyAccumulator acc(n, p);
    for (const auto& t : f.terms()) {
        Polynomial img = Polynomial::constant(n, p, t.coef);
        for (auto i : t.mono.ext())
            img = img * xs[i - 1];
        for (std::size_t i = 1; i <= n && !img.is_zero(); ++i)
            if (auto e = t.mono.exp(i))
                img = img * y_power(i, e);
        acc.add(img);
    }
    return acc.finish();
}

}  // namespace steenrod
