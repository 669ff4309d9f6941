#include <doctest.h>

#include "steenrod/text.hpp"

using namespace steenrod;

namespace {

const Prime p3(3);

std::size_t error_position(std::string_view s, std::size_t n = 2)
{
    try {
        parse_polynomial(s, n, p3);
    }
    catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << s);
    return 0;
}

}  // namespace

TEST_CASE("parsing")
{
    CHECK(parse_polynomial("0", 2, p3).is_zero());
    auto l2 = parse_polynomial("y1*y2^3 - y1^3*y2", 2, p3);
    CHECK(l2.size() == 2);
    CHECK(l2.coefficient(Monomial(2, std::vector<std::size_t>{}, std::vector<std::uint32_t>{1, 3})) == 1);
    CHECK(l2.coefficient(Monomial(2, std::vector<std::size_t>{}, std::vector<std::uint32_t>{3, 1})) == 2);
    CHECK(parse_polynomial("x2*x1", 2, p3) == -parse_polynomial("x1*x2", 2, p3));
    CHECK(parse_polynomial("(y1 + y2)^3", 2, p3) == parse_polynomial("y1^3 + y2^3", 2, p3));
    CHECK(parse_polynomial("-2*y1 + 4", 2, p3) == parse_polynomial("y1 + 1", 2, p3));
    CHECK(parse_polynomial("y1 \xE2\x88\x92 y2", 2, p3) == parse_polynomial("y1 - y2", 2, p3));
}

TEST_CASE("parse errors carry a position")
{
    CHECK(error_position("y1 + ") == 5);
    CHECK(error_position("y3", 2) == 0);
    CHECK(error_position("y1 + z") == 5);
    CHECK(error_position("x1*y2*x1") == 6);
    CHECK(error_position("y1 + x1^2") == 5);
    CHECK_THROWS_AS(parse_polynomial("(y1", 2, p3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("L2", 2, p3), ParseError);
}

TEST_CASE("named constants")
{
    NameResolver r = [](std::string_view name) -> std::optional<Polynomial> {
        if (name == "A")
            return parse_polynomial("y1 - y2", 2, p3);
        return std::nullopt;
    };
    CHECK(parse_polynomial("A^3 + y2^3", 2, p3, r) == parse_polynomial("y1^3", 2, p3));
}

TEST_CASE("formatting uses balanced coefficients")
{
    auto f = parse_polynomial("y1*y2^3 - y1^3*y2", 2, p3);
    CHECK(format_polynomial(f) == "-y1^3*y2 + y1*y2^3");
    CHECK(format_polynomial(Polynomial(2, p3)) == "0");
    CHECK(format_polynomial(parse_polynomial("2", 2, p3)) == "-1");
    CHECK(format_polynomial(parse_polynomial("x2*x1*y1", 2, p3)) == "-x1*x2*y1");
    CHECK(format_polynomial(parse_polynomial("3*y1 + 2*y2", 2, Prime(7))) == "3*y1 + 2*y2");
}

TEST_CASE("polynomial JSON")
{
    auto f = parse_polynomial("x1*y2^2 - y1", 2, p3);
    auto j = to_json(f);
    CHECK(j["n"] == 2);
    CHECK(j["p"] == 3);
    CHECK(j["terms"].size() == 2);
    CHECK(polynomial_from_json(j) == f);
    CHECK(j.dump() == R"({"n":2,"p":3,"terms":[{"c":1,"exps":[0,2],"ext":[1]},{"c":2,"exps":[1,0],"ext":[]}]})");
}
