#include "properties.hpp"

#include <functional>
#include <random>

#include "random_algebra.hpp"
#include "steenrod/action.hpp"
#include "steenrod/linear_map.hpp"
#include "steenrod/text.hpp"

namespace steenrod::testing {

namespace {

const Prime kP{3};

PropertyOutcome run(std::string name, std::size_t count, const std::function<std::string()>& instance)
{
    PropertyOutcome out{std::move(name)};
    for (std::size_t t = 0; t < count; ++t) {
        ++out.instances;
        std::string failure = instance();
        if (failure.empty())
            continue;
        if (out.failures++ == 0)
            out.first_failure = failure;
    }
    return out;
}

std::string mismatch(const Polynomial& a, const Polynomial& b)
{
    return format_polynomial(a) + "  !=  " + format_polynomial(b);
}

std::uint32_t sign_mod(bool negative)
{
    return negative ? kP.value() - 1 : 1;
}

}  // namespace

PropertyOutcome graded_commutativity(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    return run("graded commutativity of poly_mul", count, [&] {
        auto f = random_homogeneous(rng, 3, kP, rng() % 9);
        auto g = random_homogeneous(rng, 3, kP, rng() % 9);
        bool odd = (*f.degree() % 2) && (*g.degree() % 2);
        auto fg = f * g;
        auto gf = (g * f).scaled(sign_mod(odd));
        return fg == gf ? std::string{} : mismatch(fg, gf);
    });
}

PropertyOutcome associativity_distributivity(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    return run("associativity and distributivity of poly_mul", count, [&] {
        auto f = random_polynomial(rng, 3, kP, 6);
        auto g = random_polynomial(rng, 3, kP, 6);
        auto h = random_polynomial(rng, 3, kP, 6);
        auto a = (f * g) * h, b = f * (g * h);
        if (a != b)
            return mismatch(a, b);
        auto c = f * (g + h), d = f * g + f * h;
        return c == d ? std::string{} : mismatch(c, d);
    });
}

PropertyOutcome derivation_rule(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    ActionEngine engine(3, kP);
    return run("St_u derivation rule", count, [&] {
        auto op = MilnorOp::Q(static_cast<std::uint32_t>(rng() % 3));
        auto f = random_homogeneous(rng, 3, kP, rng() % 7);
        auto g = random_polynomial(rng, 3, kP, 6);
        auto lhs = engine.act(op, f * g);
        auto rhs = engine.act(op, f) * g + (f * engine.act(op, g)).scaled(sign_mod(*f.degree() % 2));
        return lhs == rhs ? std::string{} : op.to_string() + ": " + mismatch(lhs, rhs);
    });
}

PropertyOutcome cartan_consistency(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    ActionEngine engine(3, kP);
    return run("Cartan sum consistency on products", count, [&] {
        auto op = random_op(rng);
        auto f = random_homogeneous(rng, 3, kP, rng() % 7);
        auto g = random_polynomial(rng, 3, kP, 6);
        auto lhs = engine.act(op, f * g);
        auto rhs = cartan_expand(engine, op, f, g);
        return lhs == rhs ? std::string{} : op.to_string() + ": " + mismatch(lhs, rhs);
    });
}

PropertyOutcome gl2_commutation(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    ActionEngine engine(2, kP);
    return run("action commutes with GL2 substitution", count, [&] {
        auto op = random_op(rng);
        auto g = LinearMap::random_invertible(2, kP, rng);
        auto f = random_polynomial(rng, 2, kP, 8);
        auto lhs = engine.act(op, substitute(f, g));
        auto rhs = substitute(engine.act(op, f), g);
        return lhs == rhs ? std::string{} : op.to_string() + ": " + mismatch(lhs, rhs);
    });
}

PropertyOutcome degree_bookkeeping(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    ActionEngine engine(3, kP);
    return run("degree bookkeeping for act", count, [&] {
        auto op = random_op(rng);
        auto f = random_homogeneous(rng, 3, kP, rng() % 9);
        auto v = engine.act(op, f);
        if (v.is_zero())
            return std::string{};
        if (!v.is_homogeneous() || *v.degree() != *f.degree() + op.degree(kP))
            return op.to_string() + " on " + format_polynomial(f) + " gave " + format_polynomial(v);
        return std::string{};
    });
}

PropertyOutcome substitution_composition(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    return run("substitute(substitute(f, g), h) = substitute(f, g h)", count, [&] {
        auto g = LinearMap::random_invertible(3, kP, rng);
        auto h = LinearMap::random_invertible(3, kP, rng);
        auto f = random_polynomial(rng, 3, kP, 6);
        auto a = substitute(substitute(f, g), h), b = substitute(f, g * h);
        return a == b ? std::string{} : mismatch(a, b);
    });
}

PropertyOutcome parse_format_roundtrip(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    return run("parse(format(f)) = f", count, [&] {
        auto f = random_polynomial(rng, 3, kP, 10);
        auto text = format_polynomial(f);
        auto back = parse_polynomial(text, 3, kP);
        return back == f ? std::string{} : text + " reparsed as " + format_polynomial(back);
    });
}

std::vector<PropertyOutcome> all_properties(std::uint64_t seed, std::size_t count)
{
    return {graded_commutativity(seed, count),     associativity_distributivity(seed + 1, count),
            derivation_rule(seed + 2, count),      cartan_consistency(seed + 3, count),
            gl2_commutation(seed + 4, count),      degree_bookkeeping(seed + 5, count),
            substitution_composition(seed + 6, count), parse_format_roundtrip(seed + 7, count)};
}

}  // namespace steenrod::testing
