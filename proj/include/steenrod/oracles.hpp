#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "steenrod/polynomial.hpp"

namespace steenrod {

// Closed-form values of St^{(i,j)} = St^{(),(i,j)} on the rank-2 invariants.
// Everything here is assembled from dickson(), l_poly() and ring arithmetic;
// nothing touches the action engine.

enum class LemmaTarget { L2, L20, L21 };

std::string to_string(LemmaTarget t);
Polynomial lemma_target(LemmaTarget t, Prime p);

/// Table value of St^{(i,j)} on L_2, L_{2,0} or L_{2,1}; zero off the table.
Polynomial oracle_lemma22(LemmaTarget target, std::uint32_t i, std::uint32_t j, Prime p);
/// True when (i, j) is one of the listed (nonzero) table rows.
bool lemma22_listed(LemmaTarget target, std::uint32_t i, std::uint32_t j, Prime p);

/// St^{(i,0)} Q_{2,s}, s in {0, 1}.
Polynomial oracle_prop31(std::uint32_t s, std::uint32_t i, Prime p);

/// St^{(0,j)} Q_{2,s}, s in {0, 1}.
Polynomial oracle_thm32(std::uint32_t s, std::uint32_t j, Prime p);

enum class Thm33Part { i, ii, iii, iv, v, vi };

std::string to_string(Thm33Part part);

struct Thm33Indices {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;
};

/// Parts (i), (iv): uses i, k, r. (ii): i. (v): k. (iii), (vi): j.
/// Throws AlgebraError when the indices are outside the part's stated range.
Polynomial oracle_thm33(Thm33Part part, const Thm33Indices& idx, Prime p);

/// A second reading of a part at the indices where the printed closed form
/// and the Cartan computation are known to part ways, with a short note; used
/// only to label a mismatch, never to replace the printed oracle.
///   (iii): the sum without its C(k-2, i-1) C(r+i, i+1) term.
///   (v) at k = p - 1: zero, since r_1 + r_2 = p^2 exceeds the y-degree of Q_{2,1}.
struct AlternativeReading {
    Polynomial value;
    std::string note;
};
std::optional<AlternativeReading> oracle_thm33_alternative(Thm33Part part, const Thm33Indices& idx, Prime p);

/// C(n, m) mod p extended by zero to m < 0, n < 0 or m > n.
std::uint32_t binom_or_zero(std::int64_t n, std::int64_t m, std::uint32_t p);

}  // namespace steenrod
