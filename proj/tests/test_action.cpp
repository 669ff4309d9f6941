#include <doctest.h>

#include <random>

#include "support/random_algebra.hpp"
#include "steenrod/action.hpp"
#include "steenrod/invariants.hpp"
#include "steenrod/text.hpp"

using namespace steenrod;

namespace {

const Prime p3(3);

Polynomial P(std::string_view s, std::size_t n = 2, Prime p = p3)
{
    return parse_polynomial(s, n, p);
}

// Multinomial coefficient e! / ((e - sum r)! r_1! r_2! ...) mod p via a
// Pascal triangle, independent of the Lucas code.
std::uint32_t pascal_multinomial(std::uint32_t e, const std::vector<std::uint32_t>& R, std::uint32_t p)
{
    std::vector<std::vector<std::uint32_t>> c(e + 1);
    for (std::uint32_t a = 0; a <= e; ++a) {
        c[a].assign(a + 1, 1);
        for (std::uint32_t b = 1; b < a; ++b)
            c[a][b] = (c[a - 1][b - 1] + c[a - 1][b]) % p;
    }
    std::uint64_t out = 1;
    std::uint32_t left = e;
    for (auto r : R) {
        if (r > left)
            return 0;
        out = out * c[left][r] % p;
        left -= r;
    }
    return static_cast<std::uint32_t>(out);
}

}  // namespace

TEST_CASE("generator rules")
{
    CHECK(act_generator(MilnorOp::Q(1), Generator::x(1), 2, p3) == P("y1^3"));
    CHECK(act_generator(MilnorOp::Q(0), Generator::x(2), 2, p3) == P("y2"));
    CHECK(act_generator(MilnorOp::Delta(2), Generator::y(1), 2, p3) == P("y1^9"));
    CHECK(act_generator(MilnorOp({0}, {1}), Generator::x(1), 2, p3).is_zero());
    CHECK(act_generator(MilnorOp::Q(0), Generator::y(1), 2, p3).is_zero());
    CHECK(act_generator(MilnorOp::P(2), Generator::y(1), 2, p3).is_zero());
    CHECK(act_generator(MilnorOp::identity(), Generator::x(2), 2, p3) == P("x2"));
    CHECK_THROWS_AS(act_generator(MilnorOp::Q(0), Generator::x(3), 2, p3), AlgebraError);
}

TEST_CASE("small expansions")
{
    ActionEngine e(2, p3);
    CHECK(e.act(MilnorOp::Q(0), P("x1*x2")) == P("y1*x2 - x1*y2"));
    CHECK(e.act(MilnorOp::Delta(1), P("y1*y2")) == P("y1^3*y2 + y1*y2^3"));
    CHECK(e.act(MilnorOp::Q(1), P("x1")) == P("y1^3"));
    CHECK(e.act(st_ij(0, 1), l_poly(2, 2, p3)) == -(l_poly(2, 2, p3) * dickson(2, 0, p3)));
    CHECK(e.act(MilnorOp::P(3), P("y1^2")).is_zero());
    CHECK(e.act(MilnorOp({0, 1, 2}, {}), P("x1*x2")).is_zero());

    // tau and xi parts landing on different factors of one monomial
    ActionEngine e3(3, p3);
    CHECK(e3.act(MilnorOp({0}, {1}), P("x1*x3*y3", 3)) == P("x3*y1*y3^3 - x1*y3^4", 3));
    CHECK(e3.act(MilnorOp({1}, {0, 1}), P("x2*y1", 3)) == P("y2^3*y1^9", 3));
}

TEST_CASE("identity acts trivially")
{
    ActionEngine e(3, p3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto f = testing::random_polynomial(rng, 3, p3, 8);
        CHECK(e.act(MilnorOp::identity(), f) == f);
    }
}

TEST_CASE("St^R on a power of y matches the multinomial expansion")
{
    for (std::uint32_t p : {3u, 5u}) {
        Prime prime(p);
        ActionEngine e(1, prime);
        for (std::uint32_t exp = 0; exp <= 12; ++exp)
            for (std::uint32_t r1 = 0; r1 <= 4; ++r1)
                for (std::uint32_t r2 = 0; r2 <= 3; ++r2) {
                    std::vector<std::uint32_t> R{r1, r2};
                    auto got = e.act(MilnorOp({}, R), Polynomial::monomial(Monomial::y(1, 1, exp), prime));
                    std::uint32_t c = pascal_multinomial(exp, R, p);
                    std::uint32_t out_exp = exp + r1 * (p - 1) + r2 * (p * p - 1);
                    auto want = c ? Polynomial::monomial(Monomial::y(1, 1, out_exp), prime, c) : Polynomial(1, prime);
                    CAPTURE(p);
                    CAPTURE(exp);
                    CAPTURE(r1);
                    CAPTURE(r2);
                    CHECK(got == want);
                }
    }
}

TEST_CASE("St^{(0,1)} with S = (0,1) is Q0 after Q1")
{
    ActionEngine e(3, p3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto f = testing::random_polynomial(rng, 3, p3, 7);
        CHECK(e.act(MilnorOp({0, 1}, {}), f) == e.act(MilnorOp::Q(0), e.act(MilnorOp::Q(1), f)));
        CHECK(e.act(MilnorOp::Q(0), e.act(MilnorOp::Q(0), f)).is_zero());
        // the Q's anticommute
        CHECK(e.act(MilnorOp::Q(1), e.act(MilnorOp::Q(0), f)) == -e.act(MilnorOp::Q(0), e.act(MilnorOp::Q(1), f)));
    }
}

TEST_CASE("unsigned convention breaks the exterior relations")
{
    ActionEngine unsigned_engine(2, p3, SignConvention::unsigned_);
    ActionEngine koszul(2, p3);
    // Q0 (x1 x2) = y1 x2 - x1 y2 needs the Koszul sign
    CHECK(unsigned_engine.act(MilnorOp::Q(0), P("x1*x2")) == P("y1*x2 + x1*y2"));
    CHECK(unsigned_engine.act(MilnorOp::Q(0), P("x1*x2")) != koszul.act(MilnorOp::Q(0), P("x1*x2")));
    // Q0 Q0 must vanish; without signs it does not
    CHECK_FALSE(unsigned_engine.act(MilnorOp::Q(0), unsigned_engine.act(MilnorOp::Q(0), P("x1*x2"))).is_zero());
}

TEST_CASE("on exterior-free targets the sign conventions agree")
{
    ActionEngine unsigned_engine(2, p3, SignConvention::unsigned_);
    ActionEngine koszul(2, p3);
    for (std::size_t s : {0u, 1u, 2u})
        for (std::uint32_t i = 0; i <= 14; ++i)
            for (std::uint32_t j = 0; j <= 14; ++j)
                CHECK(unsigned_engine.act(st_ij(i, j), l_poly(2, s, p3)) == koszul.act(st_ij(i, j), l_poly(2, s, p3)));
}

TEST_CASE("memo is transparent")
{
    ActionEngine e(2, p3);
    auto f = P("(x1 + y2)^2*(y1 + x2)*y1^3");
    auto first = e.act(MilnorOp({0}, {2, 1}), f);
    CHECK(e.cache_size() > 0);
    auto cached = e.act(MilnorOp({0}, {2, 1}), f);
    e.clear_cache();
    CHECK(e.cache_size() == 0);
    CHECK(first == cached);
    CHECK(e.act(MilnorOp({0}, {2, 1}), f) == first);
}

TEST_CASE("cartan_expand requires a homogeneous left factor")
{
    ActionEngine e(2, p3);
    CHECK_THROWS_AS(cartan_expand(e, MilnorOp::Q(0), P("x1 + y1"), P("y2")), AlgebraError);
    CHECK(cartan_expand(e, MilnorOp::Q(0), P("x1"), P("x2")) == P("y1*x2 - x1*y2"));
}
