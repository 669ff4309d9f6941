#include "steenrod/text.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace steenrod {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t n, Prime p, const NameResolver& resolve)
        : text_(normalize_minus(text)), n_(n), p_(p), resolve_(resolve)
    {
    }

    Polynomial run()
    {
        auto f = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return f;
    }

private:
    // U+2212 (minus sign) is accepted as '-'
    static std::string normalize_minus(std::string_view in)
    {
        std::string out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
                static_cast<unsigned char>(in[i + 1]) == 0x88 && static_cast<unsigned char>(in[i + 2]) == 0x92) {
                out.push_back('-');
                i += 2;
            }
            else
                out.push_back(in[i]);
        }
        return out;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t integer()
    {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError("expected integer", start);
        return v;
    }

    Polynomial expr()
    {
        Polynomial sum(n_, p_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        while (true) {
            auto t = term();
            sum = negate ? sum - t : sum + t;
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                return sum;
        }
    }

    Polynomial term()
    {
        std::set<std::size_t> xs;
        Polynomial prod = factor(xs);
        while (accept('*'))
            prod = prod * factor(xs);
        return prod;
    }

    Polynomial factor(std::set<std::size_t>& xs)
    {
        skip_ws();
        std::size_t start = pos_;
        std::optional<std::size_t> xindex;
        Polynomial base = primary(xindex);
        std::uint64_t e = 1;
        if (accept('^'))
            e = integer();
        if (xindex && e > 0) {
            if (e > 1 || !xs.insert(*xindex).second)
                throw ParseError("repeated exterior variable x" + std::to_string(*xindex), start);
        }
        if (e == 1)
            return base;
        return poly_pow(base, e);
    }

    std::size_t var_index(std::size_t start)
    {
        auto i = integer();
        if (i < 1 || i > n_)
            throw ParseError("variable index " + std::to_string(i) + " out of [1, " + std::to_string(n_) + "]",
                             start);
        return static_cast<std::size_t>(i);
    }

    Polynomial primary(std::optional<std::size_t>& xindex)
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(n_, p_, static_cast<std::int64_t>(integer()));
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unexpected '") + c + "'", pos_);

        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        std::string_view word(text_.data() + pos_, end - pos_);
        bool numeric_tail = word.size() > 1 && word.find_first_not_of("0123456789", 1) == std::string_view::npos;
        if ((c == 'x' || c == 'y') && numeric_tail) {
            ++pos_;
            auto i = var_index(start);
            if (c == 'x') {
                xindex = i;
                return Polynomial::x(n_, p_, i);
            }
            return Polynomial::y(n_, p_, i);
        }
        if (resolve_) {
            if (auto value = resolve_(word)) {
                if (value->nvars() != n_ || !(value->prime() == p_))
                    throw ParseError("constant '" + std::string(word) + "' has incompatible ring", start);
                pos_ = end;
                return *value;
            }
        }
        throw ParseError("unknown identifier '" + std::string(word) + "'", start);
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t n_;
    Prime p_;
    const NameResolver& resolve_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n, Prime p, const NameResolver& resolve)
{
    return Parser(text, n, p, resolve).run();
}

std::string format_polynomial(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    const std::uint32_t p = f.prime().value();
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::int64_t c = balanced(t.coef, p);
        bool neg = c < 0;
        std::int64_t mag = neg ? -c : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;

        std::ostringstream factors;
        bool any = false;
        auto sep = [&] {
            if (any)
                factors << '*';
            any = true;
        };
        for (auto i : t.mono.ext()) {
            sep();
            factors << 'x' << i;
        }
        for (std::size_t i = 1; i <= t.mono.nvars(); ++i) {
            auto e = t.mono.exp(i);
            if (e == 0)
                continue;
            sep();
            factors << 'y' << i;
            if (e > 1)
                factors << '^' << e;
        }
        if (!any)
            out << mag;
        else if (mag == 1)
            out << factors.str();
        else
            out << mag << '*' << factors.str();
    }
    return out.str();
}

nlohmann::json to_json(const Polynomial& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (auto e : t.mono.exps())
            exps.push_back(e);
        terms.push_back({{"ext", t.mono.ext()}, {"exps", exps}, {"c", t.coef}});
    }
    return {{"n", f.nvars()}, {"p", f.prime().value()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    try {
        auto n = j.at("n").get<std::size_t>();
        Prime p(j.at("p").get<std::uint32_t>());
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        for (const auto& t : j.at("terms")) {
            auto ext = t.at("ext").get<std::vector<std::size_t>>();
            auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
            terms.emplace_back(Monomial(n, ext, exps), t.at("c").get<std::int64_t>());
        }
        return Polynomial::from_terms(n, p, std::move(terms));
    }
    catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace steenrod
