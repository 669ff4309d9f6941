#include "steenrod/verify.hpp"

#include <exception>

#include <omp.h>

#include "steenrod/invariants.hpp"
#include "steenrod/text.hpp"

namespace steenrod {

namespace {

struct TheoremName {
    TheoremId id;
    const char* name;
};

constexpr TheoremName kNames[] = {
    {TheoremId::L22_L2, "L22-L2"},   {TheoremId::L22_L20, "L22-L20"}, {TheoremId::L22_L21, "L22-L21"},
    {TheoremId::P31_Q0, "P31-Q0"},   {TheoremId::P31_Q1, "P31-Q1"},   {TheoremId::T32_Q0, "T32-Q0"},
    {TheoremId::T32_Q1, "T32-Q1"},   {TheoremId::T33_i, "T33-i"},     {TheoremId::T33_ii, "T33-ii"},
    {TheoremId::T33_iii, "T33-iii"}, {TheoremId::T33_iv, "T33-iv"},   {TheoremId::T33_v, "T33-v"},
    {TheoremId::T33_vi, "T33-vi"},
};

LemmaTarget lemma_of(TheoremId id)
{
    switch (id) {
    case TheoremId::L22_L2:
        return LemmaTarget::L2;
    case TheoremId::L22_L20:
        return LemmaTarget::L20;
    default:
        return LemmaTarget::L21;
    }
}

bool is_lemma(TheoremId id)
{
    return id == TheoremId::L22_L2 || id == TheoremId::L22_L20 || id == TheoremId::L22_L21;
}

/// 0 for Q_{2,0} targets, 1 for Q_{2,1} targets, -1 for the L targets.
int dickson_index(TheoremId id)
{
    switch (id) {
    case TheoremId::P31_Q0:
    case TheoremId::T32_Q0:
    case TheoremId::T33_i:
    case TheoremId::T33_ii:
    case TheoremId::T33_iii:
        return 0;
    case TheoremId::P31_Q1:
    case TheoremId::T32_Q1:
    case TheoremId::T33_iv:
    case TheoremId::T33_v:
    case TheoremId::T33_vi:
        return 1;
    default:
        return -1;
    }
}

// Split a monomial into two factors along a different seam than the engine's
// one-generator peel: the first variable block against the rest, or a power
// block in half.
std::pair<Monomial, Monomial> reseam(const Monomial& m)
{
    const std::size_t n = m.nvars();
    for (std::size_t k = 1; k <= n; ++k) {
        if (m.exp(k) == 0)
            continue;
        Monomial left = Monomial::y(n, k, m.exp(k));
        Monomial right = m.with_exp(k, 0);
        if (!right.is_one())
            return {left, right};
        std::uint32_t half = m.exp(k) / 2;
        return {Monomial::y(n, k, m.exp(k) - half), Monomial::y(n, k, half)};
    }
    return {m, Monomial(n)};
}

}  // namespace

const std::vector<TheoremId>& all_theorems()
{
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& n : kNames)
            v.push_back(n.id);
        return v;
    }();
    return ids;
}

std::string to_string(TheoremId id)
{
    for (const auto& n : kNames)
        if (n.id == id)
            return n.name;
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name)
{
    for (const auto& n : kNames)
        if (name == n.name)
            return n.id;
    return std::nullopt;
}

std::string to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::pass:
        return "pass";
    case CaseStatus::fail:
        return "fail";
    case CaseStatus::boundary_mismatch:
        return "boundary-mismatch";
    }
    return "?";
}

MilnorOp TheoremCase::op() const
{
    switch (id) {
    case TheoremId::L22_L2:
    case TheoremId::L22_L20:
    case TheoremId::L22_L21:
        return st_ij(i, j);
    case TheoremId::P31_Q0:
    case TheoremId::P31_Q1:
        return st_ij(i, 0);
    case TheoremId::T32_Q0:
    case TheoremId::T32_Q1:
        return st_ij(0, j);
    case TheoremId::T33_i:
    case TheoremId::T33_iv:
        return st_ij(i, k * p + r);
    case TheoremId::T33_ii:
        return st_ij(i, i * p);
    case TheoremId::T33_iii:
    case TheoremId::T33_vi:
        return st_ij(1, j);
    case TheoremId::T33_v:
        return st_ij(k + 1, k * p);
    }
    throw AlgebraError("unknown theorem");
}

Polynomial TheoremCase::target() const
{
    Prime prime(p);
    if (is_lemma(id))
        return lemma_target(lemma_of(id), prime);
    return dickson(2, static_cast<std::size_t>(dickson_index(id)), prime);
}

Polynomial TheoremCase::oracle() const
{
    Prime prime(p);
    switch (id) {
    case TheoremId::L22_L2:
    case TheoremId::L22_L20:
    case TheoremId::L22_L21:
        return oracle_lemma22(lemma_of(id), i, j, prime);
    case TheoremId::P31_Q0:
        return oracle_prop31(0, i, prime);
    case TheoremId::P31_Q1:
        return oracle_prop31(1, i, prime);
    case TheoremId::T32_Q0:
        return oracle_thm32(0, j, prime);
    case TheoremId::T32_Q1:
        return oracle_thm32(1, j, prime);
    case TheoremId::T33_i:
        return oracle_thm33(Thm33Part::i, {.i = i, .k = k, .r = r}, prime);
    case TheoremId::T33_ii:
        return oracle_thm33(Thm33Part::ii, {.i = i}, prime);
    case TheoremId::T33_iii:
        return oracle_thm33(Thm33Part::iii, {.j = j}, prime);
    case TheoremId::T33_iv:
        return oracle_thm33(Thm33Part::iv, {.i = i, .k = k, .r = r}, prime);
    case TheoremId::T33_v:
        return oracle_thm33(Thm33Part::v, {.k = k}, prime);
    case TheoremId::T33_vi:
        return oracle_thm33(Thm33Part::vi, {.j = j}, prime);
    }
    throw AlgebraError("unknown theorem");
}

std::optional<AlternativeReading> TheoremCase::alternative() const
{
    Prime prime(p);
    switch (id) {
    case TheoremId::T33_iii:
        return oracle_thm33_alternative(Thm33Part::iii, {.j = j}, prime);
    case TheoremId::T33_v:
        return oracle_thm33_alternative(Thm33Part::v, {.k = k}, prime);
    default:
        return std::nullopt;
    }
}

nlohmann::json TheoremCase::to_json() const
{
    nlohmann::json j_out = {{"theorem", to_string(id)}, {"p", p}};
    switch (id) {
    case TheoremId::L22_L2:
    case TheoremId::L22_L20:
    case TheoremId::L22_L21:
        j_out["i"] = i;
        j_out["j"] = j;
        break;
    case TheoremId::P31_Q0:
    case TheoremId::P31_Q1:
    case TheoremId::T33_ii:
        j_out["i"] = i;
        break;
    case TheoremId::T32_Q0:
    case TheoremId::T32_Q1:
    case TheoremId::T33_iii:
    case TheoremId::T33_vi:
        j_out["j"] = j;
        break;
    case TheoremId::T33_i:
    case TheoremId::T33_iv:
        j_out["i"] = i;
        j_out["k"] = k;
        j_out["r"] = r;
        break;
    case TheoremId::T33_v:
        j_out["k"] = k;
        break;
    }
    j_out["op"] = op().to_string();
    j_out["probe"] = probe;
    return j_out;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const
{
    nlohmann::json out = {
        {"case", tcase.to_json()},
        {"status", to_string(status)},
        {"equal", equal},
        {"lhs", steenrod::to_json(lhs)},
        {"rhs", steenrod::to_json(rhs)},
    };
    if (!note.empty())
        out["note"] = note;
    if (with_timing)
        out["ms"] = elapsed.count();
    return out;
}

VerificationReport verify_case(const ActionEngine& engine, const TheoremCase& tcase)
{
    auto start = std::chrono::steady_clock::now();
    const Prime prime(tcase.p);
    if (!(engine.prime() == prime) || engine.nvars() != 2)
        throw AlgebraError("verify_case: engine must be rank 2 over the case's prime");
    const MilnorOp op = tcase.op();
    const Polynomial target = tcase.target();
    Polynomial lhs = engine.act(op, target);
    Polynomial rhs = tcase.oracle();
    VerificationReport report{.tcase = tcase, .lhs = lhs, .rhs = rhs, .note = {}};
    report.equal = lhs == rhs;
    report.status = report.equal ? CaseStatus::pass : CaseStatus::fail;
    if (!report.equal) {
        if (auto alt = tcase.alternative(); alt && alt->value == lhs) {
            report.status = CaseStatus::boundary_mismatch;
            report.note = alt->note;
        }
    }
    if (!rhs.is_zero()) {
        auto deg = rhs.degree();
        report.oracle_degree_ok = deg && *deg == *target.degree() + op.degree(prime);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<TheoremCase> enumerate_cases(Prime prime, const std::set<TheoremId>& selection, const SuiteOptions& opts)
{
    const std::uint32_t p = prime.value();
    const std::uint32_t rect = opts.rect.value_or(p * p + p + 2);
    std::vector<TheoremCase> cases;
    for (TheoremId id : all_theorems()) {
        if (!selection.contains(id))
            continue;
        switch (id) {
        case TheoremId::L22_L2:
        case TheoremId::L22_L20:
        case TheoremId::L22_L21:
            for (std::uint32_t i = 0; i <= rect; ++i)
                for (std::uint32_t j = 0; j <= rect; ++j)
                    cases.push_back({.id = id, .p = p, .i = i, .j = j,
                                     .probe = !lemma22_listed(lemma_of(id), i, j, prime)});
            break;
        case TheoremId::P31_Q0:
        case TheoremId::P31_Q1:
            for (std::uint32_t i = 0; i <= opts.max_index.value_or(p * p); ++i)
                cases.push_back({.id = id, .p = p, .i = i, .probe = oracle_prop31(id == TheoremId::P31_Q1, i, prime).is_zero()});
            break;
        case TheoremId::T32_Q0:
        case TheoremId::T32_Q1:
            for (std::uint32_t j = 0; j <= opts.max_index.value_or(p * p + p); ++j)
                cases.push_back({.id = id, .p = p, .j = j, .probe = j >= p * p});
            break;
        case TheoremId::T33_i:
            for (std::uint32_t i = 1; i < p; ++i)
                for (std::uint32_t k = 0; k < i; ++k)
                    for (std::uint32_t r = 0; r < p; ++r)
                        cases.push_back({.id = id, .p = p, .i = i, .k = k, .r = r, .probe = true});
            break;
        case TheoremId::T33_iv:
            for (std::uint32_t i = 2; i < p; ++i)
                for (std::uint32_t k = 0; k + 1 < i; ++k)
                    for (std::uint32_t r = 0; r < p; ++r)
                        cases.push_back({.id = id, .p = p, .i = i, .k = k, .r = r, .probe = true});
            break;
        case TheoremId::T33_ii:
            for (std::uint32_t i = 0; i < p; ++i)
                cases.push_back({.id = id, .p = p, .i = i});
            break;
        case TheoremId::T33_v:
            for (std::uint32_t k = 0; k < p; ++k)
                cases.push_back({.id = id, .p = p, .k = k});
            break;
        case TheoremId::T33_iii:
        case TheoremId::T33_vi:
            for (std::uint32_t j = 0; j <= opts.max_index.value_or(p * p + p); ++j)
                cases.push_back({.id = id, .p = p, .j = j, .probe = j >= p * p});
            break;
        }
    }
    return cases;
}

std::vector<VerificationReport> verify_suite(Prime p, const std::set<TheoremId>& selection, const SuiteOptions& opts)
{
    const auto cases = enumerate_cases(p, selection, opts);
    ActionEngine engine(2, p);
    // warm the shared invariant caches before any threads start
    for (std::size_t s = 0; s <= 2; ++s)
        l_poly(2, s, p);
    dickson(2, 0, p);
    dickson(2, 1, p);

    std::vector<VerificationReport> reports;
    reports.reserve(cases.size());
    if (opts.jobs <= 1) {
        for (const auto& c : cases)
            reports.push_back(verify_case(engine, c));
        return reports;
    }

    std::vector<std::optional<VerificationReport>> slots(cases.size());
    std::exception_ptr error;
    const auto count = static_cast<long>(cases.size());
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic)
    for (long idx = 0; idx < count; ++idx) {
        try {
            slots[static_cast<std::size_t>(idx)] = verify_case(engine, cases[static_cast<std::size_t>(idx)]);
        }
        catch (...) {
#pragma omp critical(verify_suite_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    for (auto& s : slots)
        reports.push_back(std::move(*s));
    return reports;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports)
{
    SuiteSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
        case CaseStatus::pass:
            ++s.passed;
            break;
        case CaseStatus::fail:
            ++s.failed;
            break;
        case CaseStatus::boundary_mismatch:
            ++s.boundary;
            break;
        }
    }
    return s;
}

CrossCheck cross_check(const ActionEngine& engine, const TheoremCase& tcase, const Polynomial& value)
{
    const Prime prime(tcase.p);
    const MilnorOp op = tcase.op();
    const Polynomial target = tcase.target();
    CrossCheck out;

    out.degree_ok = value.is_zero() || (value.degree() && *value.degree() == *target.degree() + op.degree(prime));

    // Q targets are GL_2-invariant; the L targets transform by det(g)
    const bool semi = is_lemma(tcase.id);
    out.gl_invariant = true;
    for (const auto& g : group_generators(2, prime, Group::GL)) {
        Polynomial expected = semi ? value.scaled(g.det()) : value;
        if (!(substitute(value, g) == expected)) {
            out.gl_invariant = false;
            break;
        }
    }

    // Cartan along a different factorization of every term of the target
    PolyAccumulator acc(2, prime);
    for (const auto& t : target.terms()) {
        auto [u, v] = reseam(t.mono);
        acc.add(cartan_expand(engine, op, Polynomial::monomial(u, prime), Polynomial::monomial(v, prime)), t.coef);
    }
    out.cartan_ok = acc.finish() == value;
    if (out.cartan_ok && !semi) {
        // St(L_{2,s}) = sum St'(L_2) St''(Q_{2,s})
        const auto s = static_cast<std::size_t>(dickson_index(tcase.id));
        Polynomial direct = engine.act(op, l_poly(2, s, prime));
        out.cartan_ok = cartan_expand(engine, op, l_poly(2, 2, prime), target) == direct;
    }
    return out;
}

}  // namespace steenrod
