#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steenrod/field.hpp"

namespace steenrod {

/// The Steenrod-Milnor operation St^{S,R}, dual to tau_S xi^R in the Milnor basis.
///
/// S is a strictly increasing list of exterior indices (tau_0, tau_1, ...).
/// R = (r_1, r_2, ...) is indexed from 1 (xi_1, xi_2, ...) and stored with
/// trailing zeros stripped, so R = (0) and R = () are the same operation.
class MilnorOp {
public:
    MilnorOp() = default;
    MilnorOp(std::vector<std::uint32_t> S, std::vector<std::uint32_t> R);

    static MilnorOp identity() { return {}; }
    /// St_u = St^{(u),()}
    static MilnorOp Q(std::uint32_t u) { return MilnorOp({u}, {}); }
    /// St^{Delta_i}, i >= 1
    static MilnorOp Delta(std::uint32_t i);
    /// P^r = St^{(),(r)}
    static MilnorOp P(std::uint32_t r) { return MilnorOp({}, {r}); }

    const std::vector<std::uint32_t>& S() const noexcept { return S_; }
    const std::vector<std::uint32_t>& R() const noexcept { return R_; }
    /// r_i, zero past the stored length (1-based).
    std::uint32_t r(std::size_t i) const noexcept { return i >= 1 && i <= R_.size() ? R_[i - 1] : 0; }

    bool is_identity() const noexcept { return S_.empty() && R_.empty(); }
    /// |S| mod 2
    int parity() const noexcept { return static_cast<int>(S_.size() % 2); }
    /// sum_{s in S} (2p^s - 1) + sum_i r_i (2p^i - 2)
    std::uint64_t degree(Prime p) const;

    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const MilnorOp&, const MilnorOp&) = default;
    friend auto operator<=>(const MilnorOp&, const MilnorOp&) = default;

private:
    std::vector<std::uint32_t> S_;
    std::vector<std::uint32_t> R_;
};

struct MilnorOpHash {
    std::size_t operator()(const MilnorOp& op) const noexcept { return op.hash(); }
};

/// St^{(i,j)}: the operation with S empty and R = (i, j).
MilnorOp st_ij(std::uint32_t i, std::uint32_t j);

/// One term of the Cartan coproduct: S = S1 u S2 (disjoint), R = R1 + R2.
/// `shuffle_sign` is the sign of the permutation sorting S1 followed by S2.
struct OpSplit {
    MilnorOp left;
    MilnorOp right;
    int shuffle_sign = 1;
};

/// All 2^|S| * prod(r_i + 1) splits, each exactly once.
std::vector<OpSplit> splits(const MilnorOp& op);

/// Parses "St{S=(0,1);R=(2,0,1)}", the shorthand "St(i,j)", "P(r)" and "Q(u)".
MilnorOp parse_milnor_op(std::string_view text);

nlohmann::json to_json(const MilnorOp& op);
MilnorOp milnor_op_from_json(const nlohmann::json& j);

}  // namespace steenrod
