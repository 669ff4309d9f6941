#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "steenrod/polynomial.hpp"

namespace steenrod {

/// n x n matrix over F_p, acting on P_n by linear substitution.
class LinearMap {
public:
    LinearMap(std::size_t n, Prime p);  // zero matrix
    LinearMap(std::size_t n, Prime p, const std::vector<std::vector<std::int64_t>>& rows);

    static LinearMap identity(std::size_t n, Prime p);
    /// I + c E_{ij}, i != j (1-based).
    static LinearMap transvection(std::size_t n, Prime p, std::size_t i, std::size_t j, std::uint32_t c = 1);
    static LinearMap diagonal(std::size_t n, Prime p, const std::vector<std::uint32_t>& d);
    static LinearMap swap(std::size_t n, Prime p, std::size_t i, std::size_t j);
    /// Uniform over GL_n(F_p) by rejection.
    static LinearMap random_invertible(std::size_t n, Prime p, std::mt19937_64& rng);

    std::size_t size() const noexcept { return n_; }
    Prime prime() const noexcept { return p_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[(i - 1) * n_ + (j - 1)]; }

    std::uint32_t det() const;
    bool invertible() const { return det() != 0; }

    LinearMap operator*(const LinearMap& o) const;
    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[(i - 1) * n_ + (j - 1)]; }

    std::size_t n_;
    Prime p_;
    std::vector<std::uint32_t> a_;
};

/// Replaces x_i by sum_j g_ij x_j and y_i by sum_j g_ij y_j simultaneously.
/// substitute(substitute(f, g), h) == substitute(f, g * h).
Polynomial substitute(const Polynomial& f, const LinearMap& g);

}  // namespace steenrod
