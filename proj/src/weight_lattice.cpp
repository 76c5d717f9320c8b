#include "wpl/weight_lattice.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace wpl {

namespace {

Int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw MalformedInput("not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<Int> parse_int_list(std::string_view s) {
    std::vector<Int> out;
    if (s.find_first_not_of(' ') == std::string_view::npos) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void check_same(const LVec& a, const WeightType& w) {
    if (a.arm.size() != w.arms()) throw MalformedInput("LVec does not match the weight type");
}

} // namespace

WeightType::WeightType(std::vector<Int> weights) : weights_(std::move(weights)) {
    rank_ = 2;
    lcm_ = 1;
    for (Int p : weights_) {
        if (p < 2) throw MalformedInput("weights must be >= 2, got " + std::to_string(p));
        lcm_ = std::lcm(lcm_, p);
        rank_ += static_cast<std::size_t>(p - 1);
    }
}

WeightType WeightType::parse(std::string_view text) { return WeightType(parse_int_list(text)); }

std::string WeightType::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
    }
    return s;
}

LVec normal_form(Int l, std::span<const Int> arm, const WeightType& w) {
    if (arm.size() != w.arms())
        throw MalformedInput("arm list has length " + std::to_string(arm.size()) + ", expected " +
                             std::to_string(w.arms()));
    LVec z{l, std::vector<Int>(arm.size())};
    for (std::size_t i = 0; i < arm.size(); ++i) {
        Int p = w.weight(i);
        z.l = checked::add(z.l, checked::floor_div(arm[i], p));
        z.arm[i] = checked::floor_mod(arm[i], p);
    }
    return z;
}

LVec lv_zero(const WeightType& w) { return LVec{0, std::vector<Int>(w.arms(), 0)}; }

LVec lv_generator(const WeightType& w, std::size_t i) {
    if (i < 1 || i > w.arms()) throw MalformedInput("arm index out of range");
    LVec z = lv_zero(w);
    z.arm[i - 1] = 1;
    return normal_form(z.l, z.arm, w);
}

LVec lv_add(const LVec& a, const LVec& b, const WeightType& w) {
    check_same(a, w);
    check_same(b, w);
    std::vector<Int> arm(w.arms());
    for (std::size_t i = 0; i < arm.size(); ++i) arm[i] = checked::add(a.arm[i], b.arm[i]);
    return normal_form(checked::add(a.l, b.l), arm, w);
}

LVec lv_neg(const LVec& a, const WeightType& w) { return lv_scale(-1, a, w); }

LVec lv_sub(const LVec& a, const LVec& b, const WeightType& w) { return lv_add(a, lv_neg(b, w), w); }

LVec lv_scale(Int k, const LVec& a, const WeightType& w) {
    check_same(a, w);
    std::vector<Int> arm(w.arms());
    for (std::size_t i = 0; i < arm.size(); ++i) arm[i] = checked::mul(k, a.arm[i]);
    return normal_form(checked::mul(k, a.l), arm, w);
}

LVec canonical_element(const WeightType& w) {
    LVec c = lv_zero(w);
    c.l = 1;
    return c;
}

LVec dualizing_element(const WeightType& w) {
    std::vector<Int> arm(w.arms(), -1);
    return normal_form(static_cast<Int>(w.arms()) - 2, arm, w);
}

Int dim_graded_piece(const LVec& z) { return z.l >= -1 ? z.l + 1 : 0; }

Int delta_degree(const LVec& z, const WeightType& w) {
    check_same(z, w);
    Int d = checked::mul(z.l, w.lcm());
    for (std::size_t i = 0; i < z.arm.size(); ++i)
        d = checked::add(d, checked::mul(z.arm[i], w.lcm() / w.weight(i)));
    return d;
}

bool is_effective(const LVec& z) { return z.l >= 0; }

LVec parse_lvec(std::string_view text, const WeightType& w) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw MalformedInput("LVec must look like 'l;l1,...,lt'");
    Int l = parse_int(text.substr(0, semi));
    auto arm = parse_int_list(text.substr(semi + 1));
    return normal_form(l, arm, w);
}

std::string format_lvec(const LVec& z) {
    std::ostringstream os;
    os << z.l << ';';
    for (std::size_t i = 0; i < z.arm.size(); ++i) os << (i ? "," : "") << z.arm[i];
    return os.str();
}

} // namespace wpl
