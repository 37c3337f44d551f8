#pragma once

#include <map>
#include <string>
#include <utility>

#include "tutteconv/half_int.hpp"
#include "tutteconv/rational.hpp"

namespace tutteconv {

// Sparse bivariate Laurent polynomial with exponents in (1/2)Z and exact
// rational coefficients.  Terms are keyed by the doubled exponent pair in
// lexicographic order, which is also the canonical serialization order.
// Values are immutable in spirit: every operation returns a fresh value.
class BiLaurent {
public:
    using Key = std::pair<Int, Int>;        // (2*ex, 2*ey)
    using TermMap = std::map<Key, Rat>;

    BiLaurent() = default;

    static BiLaurent zero() { return {}; }
    static BiLaurent constant(Rat c) { return monomial(std::move(c), HalfInt(0), HalfInt(0)); }
    static BiLaurent one() { return constant(1); }
    static BiLaurent var_x() { return monomial(1, HalfInt(1), HalfInt(0)); }
    static BiLaurent var_y() { return monomial(1, HalfInt(0), HalfInt(1)); }

    static BiLaurent monomial(Rat c, const HalfInt& ex, const HalfInt& ey) {
        BiLaurent p;
        if (c != 0) p.terms_.emplace(Key{ex.doubled, ey.doubled}, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of x^ex y^ey (zero if absent).
    Rat coeff(const HalfInt& ex, const HalfInt& ey) const {
        auto it = terms_.find(Key{ex.doubled, ey.doubled});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiLaurent& o) const { return terms_ != o.terms_; }

    BiLaurent& operator+=(const BiLaurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BiLaurent operator+(const BiLaurent& o) const {
        BiLaurent r = *this;
        r += o;
        return r;
    }
    BiLaurent operator-() const {
        BiLaurent r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    BiLaurent operator-(const BiLaurent& o) const { return *this + (-o); }

    BiLaurent operator*(const BiLaurent& o) const {
        BiLaurent r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term(Key{ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }

    BiLaurent scaled(const Rat& c) const {
        BiLaurent r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    // Small nonnegative integer power.
    BiLaurent pow(unsigned e) const {
        BiLaurent r = one();
        BiLaurent b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    Rat eval(const Rat& x0, const Rat& y0) const {
        Rat acc = 0;
        for (const auto& [k, c] : terms_)
            acc += c * pow_rat(x0, HalfInt::from_doubled(k.first)) *
                   pow_rat(y0, HalfInt::from_doubled(k.second));
        return acc;
    }

    // Partial evaluation x := x0; result is a polynomial in y alone.
    BiLaurent eval_x(const Rat& x0) const {
        BiLaurent r;
        for (const auto& [k, c] : terms_)
            r.add_term(Key{0, k.second}, c * pow_rat(x0, HalfInt::from_doubled(k.first)));
        return r;
    }
    BiLaurent eval_y(const Rat& y0) const {
        BiLaurent r;
        for (const auto& [k, c] : terms_)
            r.add_term(Key{k.first, 0}, c * pow_rat(y0, HalfInt::from_doubled(k.second)));
        return r;
    }

    bool exponents_are_nonneg_integers() const {
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (k.first < 0 || k.second < 0 || k.first % 2 != 0 || k.second % 2 != 0)
                return false;
        }
        return true;
    }

    HalfInt min_x_exponent() const {
        Int m = 0;
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (k.first < m) m = k.first;
        }
        return HalfInt::from_doubled(m);
    }
    HalfInt min_y_exponent() const {
        Int m = 0;
        for (const auto& [k, c] : terms_) {
            (void)c;
            if (k.second < m) m = k.second;
        }
        return HalfInt::from_doubled(m);
    }

private:
    void add_term(const Key& k, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline BiLaurent operator*(const Rat& c, const BiLaurent& p) { return p.scaled(c); }

namespace detail {
// Exact binomial expansion of (x + s)^e in the chosen variable.
inline BiLaurent binomial_shift_pow(bool in_x, const Int& e, int s) {
    BiLaurent acc;
    Int binom = 1;
    for (Int j = 0; j <= e; ++j) {
        const HalfInt deg(j);
        acc += BiLaurent::monomial(Rat(binom) * pow_rat(Rat(s), e - j),
                                   in_x ? deg : HalfInt(0), in_x ? HalfInt(0) : deg);
        binom = binom * (e - j) / (j + 1);
    }
    return acc;
}

inline BiLaurent compose_shift(const BiLaurent& p, int s) {
    if (!p.exponents_are_nonneg_integers())
        throw NonpolynomialError(
            "variable shift requires nonnegative integer exponents; "
            "use the shifted (x+1,y+1) form instead");
    BiLaurent r;
    for (const auto& [k, c] : p.terms()) {
        BiLaurent t = binomial_shift_pow(true, k.first / 2, s) *
                      binomial_shift_pow(false, k.second / 2, s);
        r += t.scaled(c);
    }
    return r;
}
}  // namespace detail

// q(x, y) = p(x - 1, y - 1): rewrites a polynomial given in shifted
// coordinates (u, v) = (x - 1, y - 1) into the standard ones.
inline BiLaurent shifted_down(const BiLaurent& p) { return detail::compose_shift(p, -1); }

// q(x, y) = p(x + 1, y + 1), the inverse rewrite.
inline BiLaurent shifted_up(const BiLaurent& p) { return detail::compose_shift(p, +1); }

namespace detail {
inline void append_power(std::string& s, const char* var, const HalfInt& e) {
    if (e.doubled == 0) return;
    s += var;
    if (e == HalfInt(1)) return;
    s += '^';
    if (e.is_integer() && e.doubled > 0)
        s += half_to_string(e);
    else
        s += "(" + half_to_string(e) + ")";
}
}  // namespace detail

// Human-readable form, highest term first: "x^2 + 2*x*y - 1".
inline std::string to_string(const BiLaurent& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        const bool first = s.empty();
        const bool neg = c < 0;
        const Rat a = neg ? Rat(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono;
        detail::append_power(mono, "x", HalfInt::from_doubled(k.first));
        if (!mono.empty() && k.second != 0) mono += "*";
        detail::append_power(mono, "y", HalfInt::from_doubled(k.second));
        if (mono.empty())
            s += rat_to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_to_string(a) + "*" + mono;
    }
    return s;
}

}  // namespace tutteconv
