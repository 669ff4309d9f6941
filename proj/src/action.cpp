#include "steenrod/action.hpp"

#include <limits>
#include <mutex>
#include <numeric>

namespace steenrod {

namespace {

std::uint32_t prime_power(Prime p, std::uint32_t e)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= p.value();
        if (r > std::numeric_limits<std::uint32_t>::max())
            throw AlgebraError("p^" + std::to_string(e) + " exceeds the exponent range");
    }
    return static_cast<std::uint32_t>(r);
}

std::uint64_t r_total(const MilnorOp& op)
{
    return std::accumulate(op.R().begin(), op.R().end(), std::uint64_t{0});
}

// op - Q(s) for s = S[idx]
MilnorOp drop_s(const MilnorOp& op, std::size_t idx)
{
    auto S = op.S();
    S.erase(S.begin() + static_cast<std::ptrdiff_t>(idx));
    return MilnorOp(std::move(S), op.R());
}

// op - Delta_i
MilnorOp drop_delta(const MilnorOp& op, std::size_t i)
{
    auto R = op.R();
    R[i - 1] -= 1;
    return MilnorOp(op.S(), std::move(R));
}

}  // namespace

Polynomial act_generator(const MilnorOp& op, Generator g, std::size_t n, Prime p)
{
    if (g.k < 1 || g.k > n)
        throw AlgebraError("generator index " + std::to_string(g.k) + " out of [1, " + std::to_string(n) + "]");
    if (g.kind == Generator::Kind::x) {
        if (op.is_identity())
            return Polynomial::x(n, p, g.k);
        if (op.S().size() == 1 && op.R().empty())
            return Polynomial::y(n, p, g.k, prime_power(p, op.S()[0]));
        return Polynomial(n, p);
    }
    if (op.is_identity())
        return Polynomial::y(n, p, g.k);
    if (op.S().empty() && r_total(op) == 1)
        return Polynomial::y(n, p, g.k, prime_power(p, static_cast<std::uint32_t>(op.R().size())));
    return Polynomial(n, p);
}

ActionEngine::ActionEngine(std::size_t n, Prime p, SignConvention signs) : n_(n), p_(p), signs_(signs)
{
    if (n == 0 || n > kMaxVars)
        throw AlgebraError("number of variables out of range");
}

Polynomial ActionEngine::act_monomial(const MilnorOp& op, const Monomial& m) const
{
    if (m.nvars() != n_)
        throw AlgebraError("act: monomial has wrong variable count");
    if (op.is_identity())
        return Polynomial::monomial(m, p_);
    // each x factor absorbs at most one tau, each y factor at most one xi
    if (op.S().size() > m.ext_size() || r_total(op) > m.y_degree())
        return Polynomial(n_, p_);

    Key key{op, m};
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }
    Polynomial value = compute(op, m);
    std::unique_lock lock(mu_);
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

Polynomial ActionEngine::compute(const MilnorOp& op, const Monomial& m) const
{
    // m = u * v with u the first generator in canonical order
    Generator u{Generator::Kind::x, 0};
    Monomial v = m;
    if (m.ext_mask() != 0) {
        u = Generator::x(m.ext().front());
        v = m.with_x(u.k, false);
    }
    else {
        for (std::size_t k = 1; k <= n_; ++k)
            if (m.exp(k) > 0) {
                u = Generator::y(k);
                v = m.with_exp(k, m.exp(k) - 1);
                break;
            }
    }
    if (v.is_one())
        return act_generator(op, u, n_, p_);

    const bool odd_u = u.kind == Generator::Kind::x;
    const std::uint32_t p = p_.value();

    // the only op1 with act(op1, u) != 0 are the identity, Q(s) on x, Delta_i on y
    struct Piece {
        MilnorOp op1, op2;
        int shuffle;
    };
    std::vector<Piece> pieces;
    pieces.push_back({MilnorOp::identity(), op, 1});
    if (odd_u) {
        for (std::size_t idx = 0; idx < op.S().size(); ++idx)
            pieces.push_back({MilnorOp::Q(op.S()[idx]), drop_s(op, idx), idx % 2 ? -1 : 1});
    }
    else {
        for (std::size_t i = 1; i <= op.R().size(); ++i)
            if (op.r(i) > 0)
                pieces.push_back({MilnorOp::Delta(static_cast<std::uint32_t>(i)), drop_delta(op, i), 1});
    }

    PolyAccumulator acc(n_, p_);
    for (const auto& piece : pieces) {
        Polynomial left = act_generator(piece.op1, u, n_, p_);
        if (left.is_zero())
            continue;
        Polynomial right = act_monomial(piece.op2, v);
        if (right.is_zero())
            continue;
        int sign = 1;
        if (signs_ == SignConvention::koszul) {
            sign = piece.shuffle;
            if (odd_u && piece.op2.parity())
                sign = -sign;
        }
        const auto& lt = left.leading();
        for (const auto& t : right.terms()) {
            auto [s, mono] = mono_mul(lt.mono, t.mono);
            if (s == 0)
                continue;
            std::uint32_t c = mod_mul(lt.coef, t.coef, p);
            acc.add(mono, s * sign > 0 ? c : mod_neg(c, p));
        }
    }
    return acc.finish();
}

Polynomial ActionEngine::act(const MilnorOp& op, const Polynomial& f) const
{
    if (f.nvars() != n_ || !(f.prime() == p_))
        throw AlgebraError("act: polynomial does not live in this engine's ring");
    if (op.is_identity())
        return f;
    PolyAccumulator acc(n_, p_);
    for (const auto& t : f.terms())
        acc.add(act_monomial(op, t.mono), t.coef);
    return acc.finish();
}

std::size_t ActionEngine::cache_size() const
{
    std::shared_lock lock(mu_);
    return cache_.size();
}

void ActionEngine::clear_cache()
{
    std::unique_lock lock(mu_);
    cache_.clear();
}

Polynomial cartan_expand(const ActionEngine& engine, const MilnorOp& op, const Polynomial& f, const Polynomial& g)
{
    Polynomial out(engine.nvars(), engine.prime());
    if (f.is_zero() || g.is_zero())
        return out;
    auto deg = f.degree();
    if (!deg)
        throw AlgebraError("cartan_expand: left factor must be homogeneous");
    const bool odd_f = *deg % 2 == 1;
    for (const auto& split : splits(op)) {
        Polynomial a = engine.act(split.left, f);
        if (a.is_zero())
            continue;
        Polynomial b = engine.act(split.right, g);
        if (b.is_zero())
            continue;
        int sign = 1;
        if (engine.signs() == SignConvention::koszul) {
            sign = split.shuffle_sign;
            if (odd_f && split.right.parity())
                sign = -sign;
        }
        Polynomial prod = a * b;
        out = sign > 0 ? out + prod : out - prod;
    }
    return out;
}

}  // namespace steenrod
