#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "steenrod/field.hpp"
#include "steenrod/monomial.hpp"

namespace steenrod {

struct Term {
    Monomial mono;
    std::uint32_t coef;  // in [1, p)

    friend bool operator==(const Term&, const Term&) = default;
};

/// Element of P_n = E(x_1..x_n) (x) F_p[y_1..y_n].
///
/// Terms are kept sorted in the canonical term order with nonzero
/// coefficients, so the zero polynomial has no terms and equality is
/// structural. Values are immutable once built.
class Polynomial {
public:
    Polynomial(std::size_t n, Prime p);

    static Polynomial constant(std::size_t n, Prime p, std::int64_t c);
    static Polynomial monomial(const Monomial& m, Prime p, std::int64_t c = 1);
    static Polynomial x(std::size_t n, Prime p, std::size_t i) { return monomial(Monomial::x(n, i), p); }
    static Polynomial y(std::size_t n, Prime p, std::size_t i, std::uint32_t e = 1)
    {
        return monomial(Monomial::y(n, i, e), p);
    }
    /// Sums duplicate monomials, drops zeros, sorts.
    static Polynomial from_terms(std::size_t n, Prime p, std::vector<std::pair<Monomial, std::int64_t>> terms);

    std::size_t nvars() const noexcept { return n_; }
    Prime prime() const noexcept { return p_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Term& leading() const;

    std::uint32_t coefficient(const Monomial& m) const noexcept;

    bool is_homogeneous() const noexcept;
    /// Degree of a nonzero homogeneous polynomial; nullopt otherwise.
    std::optional<std::uint64_t> degree() const noexcept;
    bool has_exterior() const noexcept;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial times_monomial(const Monomial& m, std::uint32_t c = 1) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept
    {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.terms_ == b.terms_;
    }

private:
    friend class PolyAccumulator;
    Polynomial(std::size_t n, Prime p, std::vector<Term> sorted) : n_(n), p_(p), terms_(std::move(sorted)) {}
    void check_compatible(const Polynomial& o) const;

    std::size_t n_;
    Prime p_;
    std::vector<Term> terms_;
};

/// Hash-based sum of many terms; finish() produces a canonical Polynomial.
class PolyAccumulator {
public:
    PolyAccumulator(std::size_t n, Prime p) : n_(n), p_(p) {}

    void add(const Monomial& m, std::uint32_t c);
    void add(const Polynomial& f, std::uint32_t c = 1);
    void merge(const PolyAccumulator& other);
    Polynomial finish() const;

private:
    std::size_t n_;
    Prime p_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(FieldScalar c, const Polynomial& f);

/// Serial reference product.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// OpenMP product: left terms are split across threads, each thread
/// accumulates privately, partial sums are merged in thread order.
/// Equal to poly_mul for every input.
Polynomial poly_mul_parallel(const Polynomial& f, const Polynomial& g, int threads = 0);

Polynomial poly_pow(const Polynomial& f, std::uint64_t e);

}  // namespace steenrod
