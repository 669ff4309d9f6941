#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "steenrod/action.hpp"
#include "steenrod/milnor_op.hpp"
#include "steenrod/oracles.hpp"

namespace steenrod {

enum class TheoremId {
    L22_L2,
    L22_L20,
    L22_L21,
    P31_Q0,
    P31_Q1,
    T32_Q0,
    T32_Q1,
    T33_i,
    T33_ii,
    T33_iii,
    T33_iv,
    T33_v,
    T33_vi,
};

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// One instance of a closed formula. Only the indices the theorem uses are
/// meaningful; `probe` marks an "otherwise => 0" check.
struct TheoremCase {
    TheoremId id;
    std::uint32_t p;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;
    bool probe = false;

    /// The operation St^{(a,b)} that the case applies.
    MilnorOp op() const;
    /// The polynomial it is applied to (L_2, L_{2,0}, L_{2,1}, Q_{2,0} or Q_{2,1}).
    Polynomial target() const;
    /// The closed-form value.
    Polynomial oracle() const;
    /// T33-iii and T33-v only: see oracle_thm33_alternative.
    std::optional<AlternativeReading> alternative() const;

    nlohmann::json to_json() const;
};

enum class CaseStatus { pass, fail, boundary_mismatch };

std::string to_string(CaseStatus s);

struct VerificationReport {
    TheoremCase tcase;
    Polynomial lhs;  // engine
    Polynomial rhs;  // oracle
    bool equal = false;
    CaseStatus status = CaseStatus::fail;
    /// Nonzero oracle values must have degree deg(target) + deg(op).
    bool oracle_degree_ok = true;
    /// Set for boundary mismatches: which alternative reading the engine matched.
    std::string note;
    std::chrono::duration<double, std::milli> elapsed{0};

    /// {"case", "status", "equal", "lhs", "rhs"} plus "ms" when requested.
    nlohmann::json to_json(bool with_timing = false) const;
};

VerificationReport verify_case(const ActionEngine& engine, const TheoremCase& tcase);

struct SuiteOptions {
    /// Probe rectangle [0, rect]^2 for the table cases; default p^2 + p + 2.
    std::optional<std::uint32_t> rect;
    /// Upper bound for the single-index sweeps (i for P31, j for T32, T33-iii, T33-vi).
    /// Defaults: p^2 for P31, p^2 + p otherwise.
    std::optional<std::uint32_t> max_index;
    /// Worker threads; 1 runs the serial loop.
    int jobs = 1;
};

/// Every case of the selected theorems, in a fixed order.
std::vector<TheoremCase> enumerate_cases(Prime p, const std::set<TheoremId>& selection, const SuiteOptions& opts);

/// Runs enumerate_cases through verify_case; results in enumeration order
/// regardless of `jobs`.
std::vector<VerificationReport> verify_suite(Prime p, const std::set<TheoremId>& selection,
                                             const SuiteOptions& opts = {});

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t boundary = 0;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

/// Independent sanity checks on an engine value v = St(target):
/// homogeneous of the right degree, invariant under GL_2, and equal to the
/// Cartan re-derivation from St(L_{2,s}) = St(L_2 * Q_{2,s}) when the target
/// is a Dickson invariant.
struct CrossCheck {
    bool degree_ok = false;
    bool gl_invariant = false;
    bool cartan_ok = false;
};

CrossCheck cross_check(const ActionEngine& engine, const TheoremCase& tcase, const Polynomial& value);

}  // namespace steenrod
