#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "steenrod/field.hpp"

namespace steenrod {

/// Largest supported number of variable pairs (x_i, y_i).
inline constexpr std::size_t kMaxVars = 8;

struct SignedMonomial;

/// x_{i_1} ... x_{i_k} y_1^{e_1} ... y_n^{e_n} with i_1 < ... < i_k.
///
/// The exterior part is kept as a bitmask (bit i-1 set iff x_i is present),
/// which is the same thing as a strictly increasing index list. Indices in the
/// public interface are 1-based, matching x_1, ..., x_n.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n);
    Monomial(std::size_t n, std::span<const std::size_t> ext, std::span<const std::uint32_t> exps);

    static Monomial x(std::size_t n, std::size_t i);
    static Monomial y(std::size_t n, std::size_t i, std::uint32_t e = 1);

    std::size_t nvars() const noexcept { return n_; }
    std::uint32_t ext_mask() const noexcept { return ext_; }
    bool has_x(std::size_t i) const noexcept { return (ext_ >> (i - 1)) & 1u; }
    std::size_t ext_size() const noexcept;
    std::vector<std::size_t> ext() const;

    std::uint32_t exp(std::size_t i) const noexcept { return exps_[i - 1]; }
    std::span<const std::uint32_t> exps() const noexcept { return {exps_.data(), n_}; }
    std::uint64_t y_degree() const noexcept;

    /// dim x_i = 1, dim y_i = 2.
    std::uint64_t degree() const noexcept { return ext_size() + 2 * y_degree(); }

    bool is_one() const noexcept;

    Monomial with_x(std::size_t i, bool present) const;
    Monomial with_exp(std::size_t i, std::uint32_t e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const noexcept;

    friend SignedMonomial mono_mul(const Monomial& a, const Monomial& b);

private:
    std::uint8_t n_ = 0;
    std::uint32_t ext_ = 0;
    std::array<std::uint32_t, kMaxVars> exps_{};
};

/// Canonical term order: degree descending, then exterior index list
/// ascending lexicographically, then y-exponents descending lexicographically
/// (y_1 > y_2 > ...). `term_before(a, b)` is true when a is listed before b.
bool term_before(const Monomial& a, const Monomial& b) noexcept;

struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return term_before(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Result of a graded-commutative monomial product.
struct SignedMonomial {
    int sign = 0;  // +1, -1, or 0 when the product vanishes
    Monomial mono;
};

/// Product in E(x) (x) F_p[y]: merges exterior parts with the transposition
/// sign, adds y-exponents. Sign 0 when an x_i repeats.
SignedMonomial mono_mul(const Monomial& a, const Monomial& b);

}  // namespace steenrod

template <>
struct std::hash<steenrod::Monomial> {
    std::size_t operator()(const steenrod::Monomial& m) const noexcept { return m.hash(); }
};
