#pragma once

#include <compare>
#include <string>

#include "tutteconv/errors.hpp"
#include "tutteconv/rational.hpp"

namespace tutteconv {

// Exact element of (1/2)Z, stored as twice the represented value.
// Integer values have even `doubled`.
struct HalfInt {
    Int doubled{0};

    HalfInt() = default;
    explicit HalfInt(int v) : doubled(2 * Int(v)) {}
    explicit HalfInt(Int v) : doubled(2 * std::move(v)) {}

    static HalfInt from_doubled(Int d) {
        HalfInt h;
        h.doubled = std::move(d);
        return h;
    }
    static HalfInt half() { return from_doubled(1); }

    bool is_integer() const { return doubled % 2 == 0; }

    Int to_int() const {
        if (!is_integer()) throw EvalError("half-integer where an integer is required");
        return doubled / 2;
    }

    Rat as_rational() const { return Rat(doubled, 2); }

    HalfInt operator+(const HalfInt& o) const { return from_doubled(doubled + o.doubled); }
    HalfInt operator-(const HalfInt& o) const { return from_doubled(doubled - o.doubled); }
    HalfInt operator-() const { return from_doubled(-doubled); }
    HalfInt& operator+=(const HalfInt& o) {
        doubled += o.doubled;
        return *this;
    }

    // Product, defined only when it stays in (1/2)Z.
    HalfInt operator*(const HalfInt& o) const {
        Int p = doubled * o.doubled;  // 4x the product
        if (p % 2 != 0) throw EvalError("product of half-integers leaves (1/2)Z");
        return from_doubled(p / 2);
    }

    bool operator==(const HalfInt& o) const { return doubled == o.doubled; }
    bool operator!=(const HalfInt& o) const { return doubled != o.doubled; }
    bool operator<(const HalfInt& o) const { return doubled < o.doubled; }
    bool operator<=(const HalfInt& o) const { return doubled <= o.doubled; }
    bool operator>(const HalfInt& o) const { return doubled > o.doubled; }
    bool operator>=(const HalfInt& o) const { return doubled >= o.doubled; }
};

inline std::string half_to_string(const HalfInt& h) {
    if (h.is_integer()) return (h.doubled / 2).str();
    return h.doubled.str() + "/2";
}

// Accepts "k" or "k/2" (any exact rational string with denominator 1 or 2).
inline HalfInt parse_half(const std::string& s) {
    const Rat r = parse_rat(s);
    if (den(r) != 1 && den(r) != 2)
        throw std::invalid_argument("not a half-integer: '" + s + "'");
    return HalfInt::from_doubled(num(r) * (2 / den(r)));
}

// base^e with half-integer exponent; fractional powers only at exact squares.
inline Rat pow_rat(const Rat& base, const HalfInt& e) {
    if (e.is_integer()) return pow_rat(base, e.to_int());
    const auto s = sqrt_rat(base);
    if (!s) throw EvalError("half-integer exponent at a base that is not a square of a rational");
    return pow_rat(*s, e.doubled);
}

}  // namespace tutteconv
