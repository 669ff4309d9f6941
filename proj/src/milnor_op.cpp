#include "steenrod/milnor_op.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace steenrod {

namespace {

std::string join(const std::vector<std::uint32_t>& v)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    return out.str();
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            throw AlgebraError("operation degree overflows");
        r *= p;
    }
    return r;
}

}  // namespace

MilnorOp::MilnorOp(std::vector<std::uint32_t> S, std::vector<std::uint32_t> R) : S_(std::move(S)), R_(std::move(R))
{
    for (std::size_t i = 1; i < S_.size(); ++i)
        if (S_[i] <= S_[i - 1])
            throw AlgebraError("St: S must be strictly increasing");
    while (!R_.empty() && R_.back() == 0)
        R_.pop_back();
}

MilnorOp MilnorOp::Delta(std::uint32_t i)
{
    if (i == 0)
        throw AlgebraError("Delta_i needs i >= 1");
    std::vector<std::uint32_t> R(i, 0);
    R[i - 1] = 1;
    return MilnorOp({}, std::move(R));
}

std::uint64_t MilnorOp::degree(Prime p) const
{
    std::uint64_t d = 0;
    for (auto s : S_)
        d += 2 * checked_pow(p, s) - 1;
    for (std::size_t i = 0; i < R_.size(); ++i)
        d += static_cast<std::uint64_t>(R_[i]) * (2 * checked_pow(p, i + 1) - 2);
    return d;
}

std::string MilnorOp::to_string() const
{
    return "St{S=(" + join(S_) + ");R=(" + join(R_) + ")}";
}

std::size_t MilnorOp::hash() const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 0x100000001b3ull; };
    for (auto s : S_)
        mix(s + 1);
    mix(0xffffffffull);
    for (auto r : R_)
        mix(r);
    return static_cast<std::size_t>(h);
}

MilnorOp st_ij(std::uint32_t i, std::uint32_t j)
{
    return MilnorOp({}, {i, j});
}

std::vector<OpSplit> splits(const MilnorOp& op)
{
    const auto& S = op.S();
    const auto& R = op.R();
    std::vector<OpSplit> out;

    // compositions R = R1 + R2, enumerated as R1 in the box [0, R]
    std::vector<std::vector<std::uint32_t>> lefts{{}};
    for (auto r : R) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& prefix : lefts)
            for (std::uint32_t a = 0; a <= r; ++a) {
                auto v = prefix;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        lefts = std::move(next);
    }

    const std::size_t subsets = std::size_t{1} << S.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::uint32_t> S1, S2;
        for (std::size_t b = 0; b < S.size(); ++b)
            ((mask >> b) & 1 ? S1 : S2).push_back(S[b]);
        int inversions = 0;
        for (auto a : S1)
            for (auto b : S2)
                inversions += a > b;
        for (const auto& R1 : lefts) {
            std::vector<std::uint32_t> R2(R.size());
            for (std::size_t i = 0; i < R.size(); ++i)
                R2[i] = R[i] - R1[i];
            out.push_back({MilnorOp(S1, R1), MilnorOp(S2, std::move(R2)), inversions % 2 ? -1 : 1});
        }
    }
    return out;
}

namespace {

class OpParser {
public:
    explicit OpParser(std::string_view t) : t_(t) {}

    MilnorOp run()
    {
        MilnorOp op;
        if (accept("St{"))
            op = long_form();
        else if (accept("St("))
            op = pair_form();
        else if (accept("P(")) {
            auto r = number();
            expect(")");
            op = MilnorOp::P(r);
        }
        else if (accept("Q(")) {
            auto u = number();
            expect(")");
            op = MilnorOp::Q(u);
        }
        else
            fail("expected St{...}, St(i,j), P(r) or Q(u)");
        skip_ws();
        if (pos_ != t_.size())
            fail("trailing characters");
        return op;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw AlgebraError("bad operation '" + std::string(t_) + "': " + msg + " at position " +
                           std::to_string(pos_));
    }

    void skip_ws()
    {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (t_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    std::uint32_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(t_[pos_++] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                fail("number too large");
        }
        if (pos_ == start)
            fail("expected number");
        return static_cast<std::uint32_t>(v);
    }

    std::vector<std::uint32_t> tuple()
    {
        expect("(");
        std::vector<std::uint32_t> v;
        if (accept(")"))
            return v;
        do
            v.push_back(number());
        while (accept(","));
        expect(")");
        return v;
    }

    MilnorOp long_form()
    {
        std::vector<std::uint32_t> S, R;
        bool seenS = false, seenR = false;
        while (!accept("}")) {
            if (!seenS && accept("S=")) {
                S = tuple();
                seenS = true;
            }
            else if (!seenR && accept("R=")) {
                R = tuple();
                seenR = true;
            }
            else
                fail("expected S=(...) or R=(...)");
            accept(";");
        }
        return MilnorOp(std::move(S), std::move(R));
    }

    MilnorOp pair_form()
    {
        auto i = number();
        expect(",");
        auto j = number();
        expect(")");
        return st_ij(i, j);
    }

    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

MilnorOp parse_milnor_op(std::string_view text)
{
    return OpParser(text).run();
}

nlohmann::json to_json(const MilnorOp& op)
{
    return {{"S", op.S()}, {"R", op.R()}};
}

MilnorOp milnor_op_from_json(const nlohmann::json& j)
{
    try {
        return MilnorOp(j.at("S").get<std::vector<std::uint32_t>>(), j.at("R").get<std::vector<std::uint32_t>>());
    }
    catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("malformed operation JSON: ") + e.what());
    }
}

}  // namespace steenrod
