#include <doctest.h>

#include "steenrod/invariants.hpp"
#include "steenrod/verify.hpp"

using namespace steenrod;

namespace {

const Prime p3(3);

std::size_t count_of(const std::vector<TheoremCase>& cases, TheoremId id)
{
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [id](auto& c) { return c.id == id; }));
}

}  // namespace

TEST_CASE("theorem ids round trip")
{
    CHECK(all_theorems().size() == 13);
    for (auto id : all_theorems())
        CHECK(theorem_from_string(to_string(id)) == id);
    CHECK_FALSE(theorem_from_string("T34").has_value());
}

TEST_CASE("case enumeration covers the stated ranges")
{
    auto cases = enumerate_cases(p3, {all_theorems().begin(), all_theorems().end()}, {});
    CHECK(count_of(cases, TheoremId::L22_L2) == 15 * 15);
    CHECK(count_of(cases, TheoremId::P31_Q0) == 10);
    CHECK(count_of(cases, TheoremId::T32_Q1) == 13);
    CHECK(count_of(cases, TheoremId::T33_ii) == 3);
    CHECK(count_of(cases, TheoremId::T33_v) == 3);
    CHECK(count_of(cases, TheoremId::T33_iii) == 13);
    // 0 <= k < i < p, r < p
    CHECK(count_of(cases, TheoremId::T33_i) == 3 * 3);
    // 0 <= k < i - 1, i < p, r < p
    CHECK(count_of(cases, TheoremId::T33_iv) == 3);

    SuiteOptions small;
    small.rect = 3;
    small.max_index = 4;
    auto few = enumerate_cases(p3, {TheoremId::L22_L2, TheoremId::T32_Q0}, small);
    CHECK(count_of(few, TheoremId::L22_L2) == 16);
    CHECK(count_of(few, TheoremId::T32_Q0) == 5);
}

TEST_CASE("single cases")
{
    ActionEngine e(2, p3);
    auto r = verify_case(e, {TheoremId::L22_L2, 3, 0, 0});
    CHECK(r.equal);
    CHECK(r.lhs == l_poly(2, 2, p3));
    CHECK(r.status == CaseStatus::pass);

    auto prop = verify_case(e, {TheoremId::P31_Q0, 3, 1});
    CHECK(prop.equal);
    CHECK(prop.lhs.is_zero());

    auto ii = verify_case(e, {.id = TheoremId::T33_ii, .p = 3, .i = 2});
    CHECK(ii.equal);
    CHECK(ii.lhs == dickson_monomial(p3, 3, 6));

    auto v = verify_case(e, {.id = TheoremId::T33_v, .p = 3, .k = 2});
    CHECK_FALSE(v.equal);
    CHECK(v.status == CaseStatus::boundary_mismatch);
    CHECK_FALSE(v.note.empty());

    CHECK_THROWS_AS(verify_case(ActionEngine(2, Prime(5)), {TheoremId::L22_L2, 3}), AlgebraError);
}

TEST_CASE("report JSON")
{
    ActionEngine e(2, p3);
    auto j = verify_case(e, {TheoremId::L22_L2, 3, 0, 1}).to_json();
    CHECK(j["equal"] == true);
    CHECK(j["status"] == "pass");
    CHECK(j["case"]["theorem"] == "L22-L2");
    CHECK(j["case"]["op"] == "St{S=();R=(0,1)}");
    CHECK_FALSE(j.contains("ms"));
    CHECK(verify_case(e, {TheoremId::L22_L2, 3}).to_json(true).contains("ms"));
}

TEST_CASE("suite at p = 3 has no failures")
{
    auto reports = verify_suite(p3, {all_theorems().begin(), all_theorems().end()});
    auto s = summarize(reports);
    CHECK(s.failed == 0);
    CHECK(s.boundary == 2);
    CHECK(s.passed + s.boundary == reports.size());
    for (const auto& r : reports)
        CHECK(r.oracle_degree_ok);
}

TEST_CASE("p = 5 spot checks")
{
    SuiteOptions opts;
    auto reports = verify_suite(Prime(5), {TheoremId::T33_ii}, opts);
    CHECK(reports.size() == 5);
    CHECK(summarize(reports).passed == 5);
}

TEST_CASE("serial and OpenMP suites agree")
{
    std::set<TheoremId> sel{all_theorems().begin(), all_theorems().end()};
    SuiteOptions serial, parallel;
    parallel.jobs = 4;
    auto a = verify_suite(p3, sel, serial);
    auto b = verify_suite(p3, sel, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        CHECK(a[t].to_json() == b[t].to_json());
}

TEST_CASE("cross checks on boundary mismatches")
{
    ActionEngine e(2, p3);
    for (const auto& r : verify_suite(p3, {TheoremId::T33_iii, TheoremId::T33_v})) {
        if (r.status != CaseStatus::boundary_mismatch)
            continue;
        auto cc = cross_check(e, r.tcase, r.lhs);
        CHECK(cc.degree_ok);
        CHECK(cc.gl_invariant);
        CHECK(cc.cartan_ok);
        // the literal oracle value fails the same checks or differs from the engine
        CHECK(r.rhs != r.lhs);
    }
}
