#pragma once

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>

#include "steenrod/milnor_op.hpp"
#include "steenrod/polynomial.hpp"

namespace steenrod {

/// A single generator x_k or y_k of P_n (k is 1-based).
struct Generator {
    enum class Kind { x, y };
    Kind kind;
    std::size_t k;

    static Generator x(std::size_t k) { return {Kind::x, k}; }
    static Generator y(std::size_t k) { return {Kind::y, k}; }
};

/// How the Cartan formula signs a split (op1, op2) applied to u * v.
enum class SignConvention {
    /// (-1)^(parity(op2) * deg u) times the shuffle sign of S1 before S2.
    koszul,
    /// No signs at all; kept only to show that it disagrees with the Koszul rule.
    unsigned_,
};

/// St^{S,R} on a generator:
///   x_k -> x_k for the identity, y_k^{p^u} for S = (u), R = (), else 0;
///   y_k -> y_k for the identity, y_k^{p^i} for S = (), R = Delta_i, else 0.
Polynomial act_generator(const MilnorOp& op, Generator g, std::size_t n, Prime p);

/// Action of the Steenrod algebra on P_n through the Cartan formula.
///
/// A monomial is peeled one generator at a time in the order
/// x_1 < ... < x_n < y_1 < ... < y_n (y_k^e counts as e factors), and each
/// step is one application of the Cartan formula to (first generator) * (rest).
/// Results are memoized per (operation, monomial). The cache is safe for
/// concurrent use: lookups take a shared lock, values are computed outside the
/// lock, and inserts keep whichever equal value landed first.
class ActionEngine {
public:
    ActionEngine(std::size_t n, Prime p, SignConvention signs = SignConvention::koszul);

    ActionEngine(const ActionEngine&) = delete;
    ActionEngine& operator=(const ActionEngine&) = delete;

    std::size_t nvars() const noexcept { return n_; }
    Prime prime() const noexcept { return p_; }
    SignConvention signs() const noexcept { return signs_; }

    Polynomial act_monomial(const MilnorOp& op, const Monomial& m) const;
    Polynomial act(const MilnorOp& op, const Polynomial& f) const;

    std::size_t cache_size() const;
    void clear_cache();

private:
    struct Key {
        MilnorOp op;
        Monomial mono;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return k.op.hash() * 31u ^ k.mono.hash(); }
    };

    Polynomial compute(const MilnorOp& op, const Monomial& m) const;

    std::size_t n_;
    Prime p_;
    SignConvention signs_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Key, Polynomial, KeyHash> cache_;
};

/// Cartan expansion of op applied to f * g from the values on f and g:
/// sum over splits of sign * act(op1, f) * act(op2, g). f must be homogeneous
/// (or zero) so that the Koszul sign is defined.
Polynomial cartan_expand(const ActionEngine& engine, const MilnorOp& op, const Polynomial& f, const Polynomial& g);

}  // namespace steenrod
