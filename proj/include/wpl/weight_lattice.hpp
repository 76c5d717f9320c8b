#pragma once

// The rank-one abelian group L(p) generated by x_1..x_t with p_i x_i = c,
// held in normal form l*c + sum l_i x_i with 0 <= l_i < p_i.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpl/errors.hpp"

namespace wpl {

class WeightType {
public:
    WeightType() = default;  // t = 0, the projective line
    explicit WeightType(std::vector<Int> weights);

    const std::vector<Int>& weights() const { return weights_; }
    std::size_t arms() const { return weights_.size(); }
    Int weight(std::size_t i) const { return weights_.at(i); }
    Int lcm() const { return lcm_; }
    /// rank of K_0, 2 + sum (p_i - 1)
    std::size_t rank() const { return rank_; }

    bool operator==(const WeightType&) const = default;

    /// Parses "2,3,5"; the empty string is the projective line.
    static WeightType parse(std::string_view text);
    std::string to_string() const;

private:
    std::vector<Int> weights_;
    Int lcm_ = 1;
    std::size_t rank_ = 2;
};

struct LVec {
    Int l = 0;
    std::vector<Int> arm;

    bool operator==(const LVec&) const = default;
    auto operator<=>(const LVec&) const = default;
};

/// Reduces an arbitrary (l, arm) pair, carrying floor(l_i / p_i) into l.
LVec normal_form(Int l, std::span<const Int> arm, const WeightType& w);

LVec lv_zero(const WeightType& w);
/// x_i, arms numbered 1..t
LVec lv_generator(const WeightType& w, std::size_t i);
LVec lv_add(const LVec& a, const LVec& b, const WeightType& w);
LVec lv_neg(const LVec& a, const WeightType& w);
LVec lv_sub(const LVec& a, const LVec& b, const WeightType& w);
LVec lv_scale(Int k, const LVec& a, const WeightType& w);

LVec canonical_element(const WeightType& w);
/// omega = (t-2)c - sum x_i
LVec dualizing_element(const WeightType& w);

/// dim of the graded piece S_z: max(0, l+1).
Int dim_graded_piece(const LVec& z);
/// delta(z) = l p + sum l_i p / p_i
Int delta_degree(const LVec& z, const WeightType& w);
bool is_effective(const LVec& z);

/// "l;l1,...,lt", normalized on input.
LVec parse_lvec(std::string_view text, const WeightType& w);
std::string format_lvec(const LVec& z);

} // namespace wpl
