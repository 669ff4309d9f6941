#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "steenrod/linear_map.hpp"
#include "steenrod/polynomial.hpp"

namespace steenrod {

/// [k; e_{k+1}, ..., e_n]: k rows of (x_1 .. x_n) followed by rows
/// (y_1^{p^e} .. y_n^{p^e}) for each listed e.
struct BracketSpec {
    std::size_t k = 0;
    std::vector<std::uint32_t> exps;
};

class NotDivisibleError : public AlgebraError {
public:
    NotDivisibleError(Polynomial remainder)
        : AlgebraError("not divisible"), remainder_(std::move(remainder))
    {
    }
    const Polynomial& remainder() const noexcept { return remainder_; }

private:
    Polynomial remainder_;
};

/// Graded determinant by permutation sum, rows multiplied top to bottom,
/// scaled by 1/k!. Requires k < n (or k = n with no y rows), k < p.
Polynomial bracket(const BracketSpec& spec, std::size_t n, Prime p);

/// L_{n,s} = [0, 1, ..., s^, ..., n]; l_poly(n, n, p) = L_n = [0, 1, ..., n-1].
Polynomial l_poly(std::size_t n, std::size_t s, Prime p);

/// q with f = q * g, by long division in the canonical term order.
/// Throws NotDivisibleError carrying the remainder when g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

/// Dickson invariant Q_{n,s} = L_{n,s} / L_n, 0 <= s < n. Memoized.
Polynomial dickson(std::size_t n, std::size_t s, Prime p);

enum class Group { GL, SL };

/// Generators used for invariance checks: all transvections I + E_ij for SL_n,
/// plus diag(c, 1, ..., 1) with c a primitive root for GL_n.
std::vector<LinearMap> group_generators(std::size_t n, Prime p, Group group);

bool check_invariance(const Polynomial& f, Group group);

/// Coordinates of f in the Dickson algebra F_p[Q_{2,0}, Q_{2,1}] (n = 2):
/// (a, b) -> coefficient of Q_{2,0}^a Q_{2,1}^b. nullopt if f is not in it.
std::optional<std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>>
dickson_coordinates(const Polynomial& f);

/// Q_{2,0}^a Q_{2,1}^b, with powers cached.
Polynomial dickson_monomial(Prime p, std::uint32_t a, std::uint32_t b);

}  // namespace steenrod
