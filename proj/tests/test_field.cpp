#include <doctest.h>

#include "steenrod/field.hpp"

using namespace steenrod;

namespace {

// C(k, r) mod p straight from the product formula, reducing as we go
std::uint32_t factorial_binom(std::uint64_t k, std::uint64_t r, std::uint32_t p)
{
    if (r > k)
        return 0;
    // count factors of p in k! / (r! (k-r)!) and multiply the unit parts
    auto split = [p](std::uint64_t m, std::uint64_t& units, int& vp) {
        for (std::uint64_t t = 2; t <= m; ++t) {
            std::uint64_t u = t;
            while (u % p == 0) {
                u /= p;
                ++vp;
            }
            units = units * (u % p) % p;
        }
    };
    std::uint64_t num = 1, den = 1;
    int vnum = 0, vden = 0;
    split(k, num, vnum);
    split(r, den, vden);
    split(k - r, den, vden);
    if (vnum > vden)
        return 0;
    return mod_mul(static_cast<std::uint32_t>(num), mod_inv(static_cast<std::uint32_t>(den), p), p);
}

}  // namespace

TEST_CASE("primes are validated")
{
    CHECK_NOTHROW(Prime(3));
    CHECK_NOTHROW(Prime(65521));
    CHECK_THROWS_AS(Prime(2), AlgebraError);
    CHECK_THROWS_AS(Prime(9), AlgebraError);
    CHECK_THROWS_AS(Prime(1), AlgebraError);
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("modular helpers")
{
    CHECK(reduce(-1, 3) == 2);
    CHECK(reduce(-7, 5) == 3);
    CHECK(balanced(2, 3) == -1);
    CHECK(balanced(1, 3) == 1);
    CHECK(balanced(3, 7) == 3);
    CHECK(balanced(4, 7) == -3);
    CHECK(mod_inv(2, 5) == 3);
    CHECK_THROWS_AS(mod_inv(0, 5), AlgebraError);
    CHECK(mod_pow(2, 10, 11) == 1);
    CHECK(primitive_root(Prime(3)) == 2);
    CHECK(primitive_root(Prime(7)) == 3);
}

TEST_CASE("field scalars")
{
    Prime p(5);
    FieldScalar a(3, p), b(4, p);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK((a * b).value() == 2);
    CHECK((-a).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(FieldScalar(-1, p).value() == 4);
    CHECK_THROWS_AS(a + FieldScalar(1, Prime(3)), AlgebraError);
}

TEST_CASE("binomials mod p")
{
    Prime p3(3);
    CHECK(binom_mod_p(0, 0, p3).value() == 1);
    CHECK(binom_mod_p(5, 7, p3).value() == 0);
    CHECK(binom_mod_p(7, 2, p3).value() == 0);
    CHECK(binom_mod_p(4, 1, p3).value() == 1);
}

TEST_CASE("Lucas digits agree with the factorial formula below 2p^2")
{
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint64_t k = 0; k < 2ull * p * p; ++k)
            for (std::uint64_t r = 0; r <= k + 1; ++r) {
                CAPTURE(p);
                CAPTURE(k);
                CAPTURE(r);
                REQUIRE(binom_residue(k, r, p) == factorial_binom(k, r, p));
            }
}
