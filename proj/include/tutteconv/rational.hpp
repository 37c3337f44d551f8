#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tutteconv/errors.hpp"

namespace tutteconv {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// a | b, with the convention that everything divides 0 and 0 divides only 0.
inline bool divides(const Int& a, const Int& b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// base^e for integer e; exact, with 0^0 = 1 and 0^negative rejected.
inline Rat pow_rat(const Rat& base, const Int& e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw EvalError("evaluation at 0 with a negative exponent");
        return 0;
    }
    const auto k = static_cast<unsigned long>(abs(e));
    Rat r(pow_int(num(base), k), pow_int(den(base), k));
    if (e < 0) r = Rat(1) / r;
    return r;
}

// Exact square root of a rational, when it is one.
inline std::optional<Rat> sqrt_rat(const Rat& r) {
    if (r < 0) return std::nullopt;
    const Int sn = boost::multiprecision::sqrt(num(r));
    const Int sd = boost::multiprecision::sqrt(den(r));
    if (sn * sn != num(r) || sd * sd != den(r)) return std::nullopt;
    return Rat(sn, sd);
}

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Strict parser for the exact "p/q" wire format (denominator optional).
inline Rat parse_rat(const std::string& s) {
    auto bad = [&]() -> Rat {
        throw std::invalid_argument("not an exact rational string: '" + s + "'");
    };
    if (s.empty()) return bad();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0) return bad();
    if (i == s.size()) return Rat(Int(s));
    if (s[i] != '/') return bad();
    const std::string ns = s.substr(0, i);
    const std::string ds = s.substr(i + 1);
    if (ds.empty() || ds[0] == '-') return bad();
    for (char c : ds)
        if (c < '0' || c > '9') return bad();
    Int d(ds);
    if (d == 0) return bad();
    return Rat(Int(ns), d);
}

}  // namespace tutteconv
