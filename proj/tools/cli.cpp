#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steenrod/action.hpp"
#include "steenrod/invariants.hpp"
#include "steenrod/text.hpp"
#include "steenrod/verify.hpp"

namespace steenrod::cli {

namespace {

struct Globals {
    std::uint32_t p = 3;
    std::size_t n = 2;
    std::string format = "text";
    int jobs = 1;
    std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

NameResolver named_constants(std::size_t n, Prime p)
{
    return [n, p](std::string_view name) -> std::optional<Polynomial> {
        if (n != 2)
            return std::nullopt;
        if (name == "L2")
            return l_poly(2, 2, p);
        if (name == "L20")
            return l_poly(2, 0, p);
        if (name == "L21")
            return l_poly(2, 1, p);
        if (name == "Q20")
            return dickson(2, 0, p);
        if (name == "Q21")
            return dickson(2, 1, p);
        return std::nullopt;
    };
}

std::string format_dickson_sum(const std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>& coords,
                               std::uint32_t p, bool* single)
{
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>> terms(coords.begin(),
                                                                                          coords.end());
    // Q21-heavy terms first
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second)
            return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    *single = terms.size() == 1;
    std::ostringstream out;
    bool first = true;
    for (const auto& [ab, c] : terms) {
        std::int64_t v = balanced(c, p);
        bool neg = v < 0;
        std::int64_t mag = neg ? -v : v;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        if (ab.first)
            factors.push_back(ab.first == 1 ? "Q20" : "Q20^" + std::to_string(ab.first));
        if (ab.second)
            factors.push_back(ab.second == 1 ? "Q21" : "Q21^" + std::to_string(ab.second));
        if (factors.empty()) {
            out << mag;
            continue;
        }
        if (mag != 1)
            out << mag << '*';
        for (std::size_t i = 0; i < factors.size(); ++i)
            out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

/// f written as L2 * (Dickson polynomial) or as a Dickson polynomial; nullopt
/// when neither applies.
std::optional<std::string> dickson_expression(const Polynomial& f)
{
    if (f.nvars() != 2)
        return std::nullopt;
    if (f.is_zero())
        return "0";
    const Prime p = f.prime();
    bool single = false;
    try {
        Polynomial q = exact_div(f, l_poly(2, 2, p));
        if (auto coords = dickson_coordinates(q)) {
            std::string body = format_dickson_sum(*coords, p.value(), &single);
            if (body == "1")
                return "L2";
            if (body == "-1")
                return "-L2";
            if (single) {
                if (body.front() == '-')
                    return "-L2*" + body.substr(1);
                return "L2*" + body;
            }
            return "L2*(" + body + ")";
        }
    }
    catch (const NotDivisibleError&) {
    }
    if (auto coords = dickson_coordinates(f))
        return format_dickson_sum(*coords, p.value(), &single);
    return std::nullopt;
}

void emit(std::ostream& out, const nlohmann::json& j)
{
    out << j.dump(2) << '\n';
}

int cmd_apply(const Globals& g, const std::string& op_text, const std::string& expr, std::ostream& out)
{
    Prime p(g.p);
    MilnorOp op = parse_milnor_op(op_text);
    Polynomial f = parse_polynomial(expr, g.n, p, named_constants(g.n, p));
    ActionEngine engine(g.n, p);
    Polynomial result = engine.act(op, f);
    auto expr_form = dickson_expression(result);
    if (g.format == "json") {
        emit(out, {{"op", to_json(op)},
                   {"input", to_json(f)},
                   {"result", to_json(result)},
                   {"dickson", expr_form ? nlohmann::json(*expr_form) : nlohmann::json(nullptr)}});
        return 0;
    }
    out << format_polynomial(result) << '\n';
    if (expr_form && !result.is_zero())
        out << "= " << *expr_form << '\n';
    return 0;
}

int cmd_poly(const Globals& g, const Polynomial& f, std::ostream& out)
{
    if (g.format == "json")
        emit(out, to_json(f));
    else
        out << format_polynomial(f) << '\n';
    return 0;
}

std::set<TheoremId> parse_selection(const std::vector<std::string>& names)
{
    std::set<TheoremId> sel;
    if (names.empty())
        return {all_theorems().begin(), all_theorems().end()};
    for (const auto& name : names) {
        if (name == "all") {
            sel.insert(all_theorems().begin(), all_theorems().end());
            continue;
        }
        // a bare prefix such as "T33" or "L22" selects the whole family
        bool any = false;
        for (auto id : all_theorems()) {
            auto s = to_string(id);
            if (s == name || s.rfind(name + "-", 0) == 0) {
                sel.insert(id);
                any = true;
            }
        }
        if (!any)
            throw UsageError("unknown theorem id '" + name + "'");
    }
    return sel;
}

std::string describe(const TheoremCase& c)
{
    auto j = c.to_json();
    std::ostringstream out;
    out << std::left << std::setw(8) << to_string(c.id);
    for (const char* key : {"i", "j", "k", "r"})
        if (j.contains(key))
            out << ' ' << key << '=' << j[key].get<std::uint32_t>();
    out << "  " << j["op"].get<std::string>();
    return out.str();
}

int cmd_verify(const Globals& g, const std::vector<std::string>& ids, std::optional<std::uint32_t> rect,
               std::optional<std::uint32_t> max_index, std::optional<std::size_t> sample, bool timing,
               std::ostream& out)
{
    Prime p(g.p);
    SuiteOptions opts;
    opts.rect = rect;
    opts.max_index = max_index;
    opts.jobs = g.jobs;
    auto selection = parse_selection(ids);

    std::vector<VerificationReport> reports;
    if (sample) {
        auto cases = enumerate_cases(p, selection, opts);
        std::mt19937_64 rng(g.seed);
        std::shuffle(cases.begin(), cases.end(), rng);
        cases.resize(std::min(*sample, cases.size()));
        std::sort(cases.begin(), cases.end(), [](const TheoremCase& a, const TheoremCase& b) {
            return std::tie(a.id, a.i, a.j, a.k, a.r) < std::tie(b.id, b.i, b.j, b.k, b.r);
        });
        ActionEngine engine(2, p);
        for (const auto& c : cases)
            reports.push_back(verify_case(engine, c));
    }
    else
        reports = verify_suite(p, selection, opts);

    auto summary = summarize(reports);
    if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(r.to_json(timing));
        emit(out, arr);
    }
    else {
        std::map<TheoremId, SuiteSummary> per;
        for (const auto& r : reports) {
            auto& s = per[r.tcase.id];
            if (r.status == CaseStatus::pass)
                ++s.passed;
            else if (r.status == CaseStatus::fail)
                ++s.failed;
            else
                ++s.boundary;
            if (r.status == CaseStatus::pass)
                continue;
            out << to_string(r.status) << "  " << describe(r.tcase) << '\n';
            out << "    engine: " << format_polynomial(r.lhs) << '\n';
            out << "    oracle: " << format_polynomial(r.rhs) << '\n';
            if (!r.note.empty())
                out << "    note:   " << r.note << '\n';
        }
        for (const auto& [id, s] : per) {
            out << std::left << std::setw(8) << to_string(id) << " p=" << g.p << "  pass " << s.passed;
            if (s.boundary)
                out << "  boundary-mismatch " << s.boundary;
            if (s.failed)
                out << "  FAIL " << s.failed;
            out << '\n';
        }
        out << "total: " << reports.size() << " cases, " << summary.passed << " pass, " << summary.boundary
            << " boundary-mismatch, " << summary.failed << " fail\n";
    }
    return summary.failed ? 1 : 0;
}

int cmd_table(const Globals& g, const std::string& target_name, std::optional<std::uint32_t> rect, std::ostream& out)
{
    if (g.n != 2)
        throw UsageError("table works in rank n = 2");
    Prime p(g.p);
    auto target = named_constants(2, p)(target_name);
    if (!target)
        throw UsageError("table target must be one of L2, L20, L21, Q20, Q21");
    const std::uint32_t bound = rect.value_or(g.p * g.p + g.p + 2);
    ActionEngine engine(2, p);

    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> text_rows;
    for (std::uint32_t i = 0; i <= bound; ++i)
        for (std::uint32_t j = 0; j <= bound; ++j) {
            Polynomial v = engine.act(st_ij(i, j), *target);
            if (v.is_zero())
                continue;
            auto expr = dickson_expression(v);
            std::string label = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            rows.push_back({{"i", i},
                            {"j", j},
                            {"value", to_json(v)},
                            {"expr", expr ? nlohmann::json(*expr) : nlohmann::json(nullptr)}});
            text_rows.emplace_back(label, expr ? *expr : format_polynomial(v));
        }
    if (g.format == "json") {
        emit(out, rows);
        return 0;
    }
    out << "St^(i,j) " << target_name << "  p=" << g.p << "  (i,j) in [0," << bound << "]^2, nonzero rows\n";
    for (const auto& [label, value] : text_rows)
        out << std::left << std::setw(10) << label << "| " << value << '\n';
    out << "otherwise | 0\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Steenrod-Milnor operations on Dickson invariants", "steenrod-cli"};
    app.require_subcommand(1);
    Globals g;

    auto add_globals = [&g](CLI::App* sub) {
        sub->add_option("-p,--prime", g.p, "odd prime")->capture_default_str();
        sub->add_option("-n,--rank", g.n, "number of variables")->capture_default_str();
        sub->add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", g.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
        sub->add_option("--seed", g.seed, "seed for --sample");
    };

    std::string op_text, expr;
    auto* apply = app.add_subcommand("apply", "apply an operation to a polynomial expression");
    add_globals(apply);
    apply->add_option("op", op_text, "St(i,j), P(r), Q(u) or St{S=(..);R=(..)}")->required();
    apply->add_option("expr", expr, "polynomial; L2, L20, L21, Q20, Q21 are predefined for n = 2")->required();

    std::size_t s_index = 0;
    auto* dick = app.add_subcommand("dickson", "Dickson invariant Q_{n,s}");
    add_globals(dick);
    dick->add_option("-s", s_index, "index s, 0 <= s < n")->required();

    std::size_t k_rows = 0;
    std::vector<std::uint32_t> bexps;
    auto* brk = app.add_subcommand("bracket", "graded determinant [k; e_{k+1}, ..., e_n]");
    add_globals(brk);
    brk->add_option("-k", k_rows, "number of x rows")->capture_default_str();
    brk->add_option("--exps", bexps, "exponents e_{k+1},...,e_n")->delimiter(',');

    std::vector<std::string> ids;
    std::optional<std::uint32_t> rect, max_index;
    std::optional<std::size_t> sample;
    bool timing = false;
    auto* ver = app.add_subcommand("verify", "check the closed formulas against the engine");
    add_globals(ver);
    ver->add_option("ids", ids, "theorem ids (L22-L2 ... T33-vi), families (L22, P31, T32, T33) or all");
    ver->add_option("--rect", rect, "probe rectangle [0,R]^2 for the tables");
    ver->add_option("--max-index", max_index, "upper bound for the single-index sweeps");
    ver->add_option("--sample", sample, "verify a seeded random subset of this size");
    ver->add_flag("--timing", timing, "include per-case milliseconds in JSON");

    std::string target_name;
    auto* tab = app.add_subcommand("table", "nonzero values of St^(i,j) on a rank-2 invariant");
    add_globals(tab);
    tab->add_option("target", target_name, "L2, L20, L21, Q20 or Q21")->required();
    tab->add_option("--rect", rect, "rectangle [0,R]^2");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (g.n < 1 || g.n > kMaxVars)
            throw UsageError("rank must be in [1, " + std::to_string(kMaxVars) + "]");
        try {
            Prime check(g.p);
        }
        catch (const AlgebraError& e) {
            throw UsageError(e.what());
        }
        if (*apply)
            return cmd_apply(g, op_text, expr, out);
        if (*dick)
            return cmd_poly(g, dickson(g.n, s_index, Prime(g.p)), out);
        if (*brk)
            return cmd_poly(g, bracket({k_rows, bexps}, g.n, Prime(g.p)), out);
        if (*ver)
            return cmd_verify(g, ids, rect, max_index, sample, timing, out);
        if (*tab)
            return cmd_table(g, target_name, rect, out);
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    }
    catch (const AlgebraError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace steenrod::cli
