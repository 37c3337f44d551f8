#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tutteconv/ranked_set.hpp"

namespace tutteconv {

// An isomorphism-invariant functional on ranked sets with multiplicities,
// valued in the Laurent ring of the two formal variables.  These are the
// f, g of the convolution (f o g)(M) = sum_A f(M|_A) g(M/A); the variables
// here are the ones in which the rank generating functions are shifted,
// i.e. zeta-style convolutions produce Tutte functions at (x+1, y+1).
using ConvFunctional = std::function<BiLaurent(const RankedSet&)>;

// Argument for the zeta/xi family: a rational multiple of one formal
// variable, or a rational constant.  Covers every use in the identities
// (x, y, -x, -y, 1, -1, arbitrary constants).
struct ConvArg {
    Rat coeff{1};
    bool is_x = false;
    bool is_y = false;

    static ConvArg constant(Rat c) { return {std::move(c), false, false}; }
    static ConvArg x(Rat c = 1) { return {std::move(c), true, false}; }
    static ConvArg y(Rat c = 1) { return {std::move(c), false, true}; }

    // (coeff * var)^e as a Laurent monomial.
    BiLaurent pow(const HalfInt& e) const {
        const Rat c = pow_rat(coeff, e);
        return BiLaurent::monomial(c, is_x ? e : HalfInt(0), is_y ? e : HalfInt(0));
    }
};

// zeta(xa, ya)(M) = xa^rk(M) * ya^(|M| - rk(M)).
inline ConvFunctional conv_zeta(ConvArg xa, ConvArg ya) {
    return [xa, ya](const RankedSet& s) {
        const HalfInt r = s.rk(s.full());
        return xa.pow(r) * ya.pow(HalfInt(s.n()) - r);
    };
}

// xi weights zeta by the top multiplicity m(M).
inline ConvFunctional conv_xi(ConvArg xa, ConvArg ya) {
    return [xa, ya](const RankedSet& s) {
        const HalfInt r = s.rk(s.full());
        return (xa.pow(r) * ya.pow(HalfInt(s.n()) - r)).scaled(s.m(s.full()));
    };
}

// xi* weights zeta by m(empty) instead.
inline ConvFunctional conv_xi_star(ConvArg xa, ConvArg ya) {
    return [xa, ya](const RankedSet& s) {
        const HalfInt r = s.rk(s.full());
        return (xa.pow(r) * ya.pow(HalfInt(s.n()) - r)).scaled(s.m(0));
    };
}

// The convolution identity: 1 on the empty ranked set, 0 elsewhere.
inline ConvFunctional conv_delta() {
    return [](const RankedSet& s) { return s.n() == 0 ? BiLaurent::one() : BiLaurent::zero(); };
}

inline BiLaurent convolve(const ConvFunctional& f, const ConvFunctional& g, const RankedSet& s) {
    BiLaurent acc;
    const Mask top = s.full();
    for (Mask a = 0;; ++a) {
        acc += f(restrict_to(s, a)) * g(contract(s, a));
        if (a == top) break;
    }
    return acc;
}

inline ConvFunctional compose(ConvFunctional f, ConvFunctional g) {
    return [f = std::move(f), g = std::move(g)](const RankedSet& s) { return convolve(f, g, s); };
}

// Derived functionals used by the main convolution formula:
// the arithmetic Tutte function of the argument at (0, y+1) or (x+1, 0),
// and the Tutte function likewise.  Obtained by exact partial evaluation
// of the shifted rank generating function at -1.
inline ConvFunctional conv_aritutte_0y() {
    return [](const RankedSet& s) { return aritutte_shifted(s).eval_x(-1); };
}
inline ConvFunctional conv_aritutte_x0() {
    return [](const RankedSet& s) { return aritutte_shifted(s).eval_y(-1); };
}
inline ConvFunctional conv_tutte_0y() {
    return [](const RankedSet& s) { return tutte_shifted(s).eval_x(-1); };
}
inline ConvFunctional conv_tutte_x0() {
    return [](const RankedSet& s) { return tutte_shifted(s).eval_y(-1); };
}
// Constant coefficients: T(0,0) and its arithmetic counterpart.
inline ConvFunctional conv_tutte_00() {
    return [](const RankedSet& s) { return tutte_shifted(s).eval_x(-1).eval_y(-1); };
}
inline ConvFunctional conv_aritutte_00() {
    return [](const RankedSet& s) { return aritutte_shifted(s).eval_x(-1).eval_y(-1); };
}

// Factory for the named functionals; xa/ya apply to the zeta family only.
inline ConvFunctional make_functional(const std::string& name, const ConvArg& xa = ConvArg::x(),
                                      const ConvArg& ya = ConvArg::y()) {
    if (name == "delta") return conv_delta();
    if (name == "zeta") return conv_zeta(xa, ya);
    if (name == "xi") return conv_xi(xa, ya);
    if (name == "xi_star") return conv_xi_star(xa, ya);
    if (name == "tutte00") return conv_tutte_00();
    if (name == "aritutte00") return conv_aritutte_00();
    if (name == "tutte_x0") return conv_tutte_x0();
    if (name == "tutte_0y") return conv_tutte_0y();
    if (name == "aritutte_x0") return conv_aritutte_x0();
    if (name == "aritutte_0y") return conv_aritutte_0y();
    throw std::invalid_argument("unknown functional name: " + name);
}

// Verification report for the main convolution formula.  All three
// polynomials are in shifted coordinates, where both sides are Laurent
// polynomials for every ranked set with multiplicities.
struct ConvolutionReport {
    BiLaurent lhs;
    BiLaurent rhs_form1;  // sum of aritutte(M|_A)(0, y) * tutte(M/A)(x, 0)
    BiLaurent rhs_form2;  // sum of tutte(M|_A)(0, y) * aritutte(M/A)(x, 0)
    bool equal = false;
};

inline ConvolutionReport verify_theorem1(const RankedSet& s) {
    ConvolutionReport rep;
    rep.lhs = aritutte_shifted(s);
    rep.rhs_form1 = convolve(conv_aritutte_0y(), conv_tutte_x0(), s);
    rep.rhs_form2 = convolve(conv_tutte_0y(), conv_aritutte_x0(), s);
    rep.equal = rep.lhs == rep.rhs_form1 && rep.lhs == rep.rhs_form2;
    return rep;
}

struct ProductConvolutionReport {
    BiLaurent lhs;  // aritutte of (M, rk, m1*m2), shifted
    BiLaurent rhs;
    bool equal = false;
};

// Convolution formula for a product of multiplicity functions:
// aritutte_{m1 m2}(x, y) = sum_A aritutte_{m1}(M|_A)(0, y) aritutte_{m2}(M/A)(x, 0).
inline ProductConvolutionReport verify_theorem2(const RankedSet& m1, const RankedSet& m2) {
    ProductConvolutionReport rep;
    rep.lhs = aritutte_shifted(product_mult(m1, m2));
    BiLaurent acc;
    const Mask top = m1.full();
    for (Mask a = 0;; ++a) {
        acc += aritutte_shifted(restrict_to(m1, a)).eval_x(-1) *
               aritutte_shifted(contract(m2, a)).eval_y(-1);
        if (a == top) break;
    }
    rep.rhs = acc;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

struct IdentityReport {
    std::string identity;
    BiLaurent lhs, rhs;
    bool equal = false;
};

// zeta(x,y) o zeta(-x,-y) = delta.
inline IdentityReport check_zeta_inverse(const RankedSet& s) {
    IdentityReport rep;
    rep.identity = "zeta-inverse";
    rep.lhs = convolve(conv_zeta(ConvArg::x(), ConvArg::y()),
                       conv_zeta(ConvArg::x(-1), ConvArg::y(-1)), s);
    rep.rhs = conv_delta()(s);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// T_M(x+1, y+1) = (zeta(1,y) o zeta(x,1))(M).
inline IdentityReport check_tutte_zeta(const RankedSet& s) {
    IdentityReport rep;
    rep.identity = "tutte-zeta";
    rep.lhs = convolve(conv_zeta(ConvArg::constant(1), ConvArg::y()),
                       conv_zeta(ConvArg::x(), ConvArg::constant(1)), s);
    rep.rhs = tutte_shifted(s);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// Both weighted forms of the same statement for the arithmetic function:
// (xi(1,y) o zeta(x,1))(M) = (zeta(1,y) o xi*(x,1))(M) = aritutte_M(x+1, y+1).
inline bool check_aritutte_convolution(const RankedSet& s, IdentityReport* out = nullptr) {
    const BiLaurent want = aritutte_shifted(s);
    const BiLaurent a = convolve(conv_xi(ConvArg::constant(1), ConvArg::y()),
                                 conv_zeta(ConvArg::x(), ConvArg::constant(1)), s);
    const BiLaurent b = convolve(conv_zeta(ConvArg::constant(1), ConvArg::y()),
                                 conv_xi_star(ConvArg::x(), ConvArg::constant(1)), s);
    if (out) {
        out->identity = "aritutte-convolution";
        out->lhs = a;
        out->rhs = want;
        out->equal = a == want && b == want;
        return out->equal;
    }
    return a == want && b == want;
}

// Associativity of o over the named functionals, checked exhaustively on M.
inline bool check_associativity(const RankedSet& s) {
    const std::vector<ConvFunctional> fs = {
        conv_delta(),
        conv_zeta(ConvArg::x(), ConvArg::y()),
        conv_xi(ConvArg::x(), ConvArg::y()),
        conv_xi_star(ConvArg::x(), ConvArg::y()),
    };
    for (const auto& f : fs)
        for (const auto& g : fs)
            for (const auto& h : fs) {
                const BiLaurent left = convolve(compose(f, g), h, s);
                const BiLaurent right = convolve(f, compose(g, h), s);
                if (left != right) return false;
            }
    return true;
}

// delta is a two-sided identity for o on M.
inline bool check_delta_identity(const RankedSet& s) {
    const std::vector<ConvFunctional> fs = {
        conv_zeta(ConvArg::x(), ConvArg::y()),
        conv_xi(ConvArg::x(), ConvArg::y()),
        conv_xi_star(ConvArg::x(), ConvArg::y()),
    };
    for (const auto& f : fs) {
        if (convolve(conv_delta(), f, s) != f(s)) return false;
        if (convolve(f, conv_delta(), s) != f(s)) return false;
    }
    return true;
}

}  // namespace tutteconv
