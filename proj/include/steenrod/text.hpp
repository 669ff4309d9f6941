#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "steenrod/polynomial.hpp"

namespace steenrod {

class ParseError : public AlgebraError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : AlgebraError(msg + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Looks up a named constant (e.g. "L2") while parsing; nullopt if unknown.
using NameResolver = std::function<std::optional<Polynomial>(std::string_view)>;

/// Parses expressions such as "y1*y2^3 - y1^3*y2" or "2*x1*x2*y1^4".
///
/// Integer coefficients, `x<i>`, `y<i>^<e>`, products with `*`, sums with
/// `+`/`-`, parentheses, and `^` on any factor. Out-of-order exterior factors
/// pick up the reordering sign; a repeated x_i inside one product is rejected.
Polynomial parse_polynomial(std::string_view text, std::size_t n, Prime p, const NameResolver& resolve = {});

/// Canonical text form, coefficients printed in (-p/2, p/2].
std::string format_polynomial(const Polynomial& f);

nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace steenrod
