#include <doctest.h>

#include <set>

#include "steenrod/milnor_op.hpp"

using namespace steenrod;

TEST_CASE("operations normalise and validate")
{
    MilnorOp a({0, 2}, {1, 0, 0});
    CHECK(a.R() == std::vector<std::uint32_t>{1});
    CHECK(a.r(1) == 1);
    CHECK(a.r(5) == 0);
    CHECK(a.parity() == 0);
    CHECK(MilnorOp::Q(1).parity() == 1);
    CHECK(MilnorOp({}, {0, 0}).is_identity());
    CHECK(MilnorOp::Delta(2) == MilnorOp({}, {0, 1}));
    CHECK_THROWS_AS(MilnorOp({2, 2}, {}), AlgebraError);
    CHECK_THROWS_AS(MilnorOp({2, 1}, {}), AlgebraError);
}

TEST_CASE("degrees")
{
    Prime p(3);
    CHECK(MilnorOp::identity().degree(p) == 0);
    CHECK(MilnorOp::Q(0).degree(p) == 1);
    CHECK(MilnorOp::Q(1).degree(p) == 5);
    CHECK(MilnorOp::P(1).degree(p) == 4);
    CHECK(MilnorOp::Delta(2).degree(p) == 16);
    // St^(i,j): i copies of 2(p-1) plus j copies of 2(p^2-1)
    CHECK(st_ij(1, 3).degree(p) == 4 + 3 * 16);
    CHECK(st_ij(0, 1) == MilnorOp({}, {0, 1}));
    CHECK(st_ij(2, 2) == MilnorOp({}, {2, 2}));
    CHECK(MilnorOp({0, 1}, {}).degree(p) == 1 + 5);
}

TEST_CASE("splits")
{
    CHECK(splits(MilnorOp::identity()).size() == 1);
    auto q = splits(MilnorOp::Q(0));
    REQUIRE(q.size() == 2);
    auto r2 = splits(MilnorOp::P(2));
    REQUIRE(r2.size() == 3);
    std::set<std::uint32_t> left;
    for (const auto& s : r2) {
        CHECK(s.left.r(1) + s.right.r(1) == 2);
        CHECK(s.shuffle_sign == 1);
        left.insert(s.left.r(1));
    }
    CHECK(left == std::set<std::uint32_t>{0, 1, 2});
    CHECK(splits(MilnorOp({0, 1}, {1, 2})).size() == 4 * 2 * 3);

    // moving Q1 left past Q0 costs a sign
    for (const auto& s : splits(MilnorOp({0, 1}, {})))
        if (s.left == MilnorOp::Q(1))
            CHECK(s.shuffle_sign == -1);
        else
            CHECK(s.shuffle_sign == 1);
}

TEST_CASE("textual forms")
{
    auto op = MilnorOp({0, 3}, {2, 0, 1});
    CHECK(op.to_string() == "St{S=(0,3);R=(2,0,1)}");
    CHECK(parse_milnor_op(op.to_string()) == op);
    CHECK(parse_milnor_op("St(0,1)") == st_ij(0, 1));
    CHECK(parse_milnor_op("P(4)") == MilnorOp::P(4));
    CHECK(parse_milnor_op("Q(2)") == MilnorOp::Q(2));
    CHECK(parse_milnor_op("St{R=(1)}") == MilnorOp::P(1));
    CHECK(parse_milnor_op("St{S=(1)}") == MilnorOp::Q(1));
    CHECK_THROWS_AS(parse_milnor_op("St(1"), AlgebraError);
    CHECK_THROWS_AS(parse_milnor_op("Sq(1)"), AlgebraError);
}

TEST_CASE("operation JSON")
{
    auto op = MilnorOp({1}, {0, 2});
    auto j = to_json(op);
    CHECK(j.dump() == R"({"R":[0,2],"S":[1]})");
    CHECK(milnor_op_from_json(j) == op);
}
