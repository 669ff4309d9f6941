#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace steenrod {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An odd prime p. Primality is checked once at construction.
class Prime {
public:
    explicit Prime(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }
    operator std::uint32_t() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint32_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) noexcept
{
    return a == 0 ? 0 : p - a;
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept;

/// Inverse of a nonzero residue (Fermat).
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

/// Reduces an arbitrary signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept;

/// Representative of a residue in (-p/2, p/2], used for printing.
std::int64_t balanced(std::uint32_t v, std::uint32_t p) noexcept;

/// Smallest generator of the multiplicative group of F_p.
std::uint32_t primitive_root(Prime p);

/// Residue mod p in canonical form [0, p).
class FieldScalar {
public:
    FieldScalar(std::int64_t v, Prime p) : value_(reduce(v, p.value())), p_(p) {}

    std::uint32_t value() const noexcept { return value_; }
    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldScalar operator+(FieldScalar o) const { check(o); return raw(mod_add(value_, o.value_, p_), p_); }
    FieldScalar operator-(FieldScalar o) const { check(o); return raw(mod_sub(value_, o.value_, p_), p_); }
    FieldScalar operator*(FieldScalar o) const { check(o); return raw(mod_mul(value_, o.value_, p_), p_); }
    FieldScalar operator-() const { return raw(mod_neg(value_, p_), p_); }
    FieldScalar inverse() const { return raw(mod_inv(value_, p_), p_); }

    friend bool operator==(FieldScalar a, FieldScalar b) noexcept
    {
        return a.value_ == b.value_ && a.p_ == b.p_;
    }

private:
    static FieldScalar raw(std::uint32_t v, Prime p) { return FieldScalar(static_cast<std::int64_t>(v), p); }
    void check(FieldScalar o) const
    {
        if (!(o.p_ == p_))
            throw AlgebraError("FieldScalar: mixed primes");
    }

    std::uint32_t value_;
    Prime p_;
};

/// C(k, r) mod p by Lucas' theorem; zero when r > k.
FieldScalar binom_mod_p(std::uint64_t k, std::uint64_t r, Prime p);

/// Same as binom_mod_p but returns the raw residue.
std::uint32_t binom_residue(std::uint64_t k, std::uint64_t r, std::uint32_t p);

}  // namespace steenrod
