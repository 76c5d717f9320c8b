#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpl {

using Int = std::int64_t;

/// Input that does not parse or does not fit the ambient weight type.
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The class-level model reached a state that no genuine sheaf data can produce.
class ModelInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

// floor division and matching non-negative remainder
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

} // namespace checked
} // namespace wpl
