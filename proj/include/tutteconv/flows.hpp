#pragma once

#include <string>
#include <vector>

#include "tutteconv/abelian.hpp"
#include "tutteconv/ranked_set.hpp"

namespace tutteconv {

constexpr long kEnumerationCap = 10'000'000;

// The multiplicative data controlling where the flow/coloring evaluation
// formulas apply: lcm(X) of the basis multiplicities, and per-basis
// invariant factors of G_B = torsion(G / <B>).
struct QSets {
    Int lcm_x = 1;
    std::vector<std::pair<Mask, std::vector<Int>>> basis_groups;

    // gcd(q, lcm(X)) = 1.
    bool in_zm(const Int& q) const { return q > 0 && gcd(q, lcm_x) == 1; }
    // q G_B = 0 for every basis: the largest invariant factor divides q.
    bool in_za(const Int& q) const {
        if (q <= 0) return false;
        for (const auto& [b, factors] : basis_groups) {
            const Int exponent = factors.empty() ? Int(1) : factors.back();
            if (q % exponent != 0) return false;
        }
        return true;
    }
};

inline QSets qsets(const VectorList& x) {
    QSets out;
    const Mask top = full_mask(x.size());
    const int r = rank_of(x, top);
    for_each_subset(top, [&](Mask b) {
        if (popcount(b) != r || rank_of(x, b) != r) return;
        auto factors = snf(detail::stacked_matrix(x, b)).invariant_factors;
        Int m = 1;
        for (const auto& f : factors) m *= f;
        out.lcm_x = lcm(out.lcm_x, m);
        out.basis_groups.emplace_back(b, std::move(factors));
    });
    return out;
}

namespace detail {
// Odometer over mixed radices; f receives the current digit vector.
template <typename F>
void for_each_tuple(const std::vector<long>& radix, F&& f) {
    std::vector<long> digits(radix.size(), 0);
    while (true) {
        f(digits);
        std::size_t j = 0;
        while (j < radix.size()) {
            if (++digits[j] < radix[j]) break;
            digits[j] = 0;
            ++j;
        }
        if (j == radix.size()) break;
    }
}

inline Int mod_nonneg(Int v, const Int& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}
}  // namespace detail

// Proper arithmetic q-colorings: homomorphisms G -> Z_q that are nonzero
// on every listed element.  A free coordinate contributes any value of
// Z_q; a torsion coordinate of order n contributes the subgroup of size
// gcd(n, q).  Collects the witnesses when `out` is given (each written as
// the tuple of coordinate images in Z_q).
inline Int count_colorings(const VectorList& x, const Int& q,
                           std::vector<std::vector<Int>>* out = nullptr) {
    if (q <= 0) throw std::invalid_argument("q must be positive");
    if (q > kEnumerationCap) throw ResourceError("q exceeds the enumeration cap");
    const int d = x.group.free_rank;
    const int k = static_cast<int>(x.group.torsion.size());

    std::vector<long> radix;
    std::vector<Int> step;  // value multiplier per coordinate
    double size_estimate = 1;
    for (int j = 0; j < d; ++j) {
        radix.push_back(static_cast<long>(q));
        step.push_back(1);
        size_estimate *= static_cast<double>(static_cast<long>(q));
    }
    for (int i = 0; i < k; ++i) {
        const Int g = gcd(x.group.torsion[i], q);
        radix.push_back(static_cast<long>(g));
        step.push_back(q / g);
        size_estimate *= static_cast<double>(static_cast<long>(g));
    }
    if (size_estimate > static_cast<double>(kEnumerationCap))
        throw ResourceError("coloring enumeration exceeds the 10^7 cap");

    Int count = 0;
    detail::for_each_tuple(radix, [&](const std::vector<long>& digits) {
        std::vector<Int> phi(d + k);
        for (int c = 0; c < d + k; ++c) phi[c] = step[c] * digits[c];
        for (const auto& v : x.vectors) {
            Int val = 0;
            for (int c = 0; c < d + k; ++c) val += phi[c] * v[c];
            if (detail::mod_nonneg(val, q) == 0) return;
        }
        ++count;
        if (out) out->push_back(phi);
    });
    return count;
}

// Nowhere-zero q-flows: assignments X -> Z_q \ {0} whose weighted sum
// vanishes in G / qG (free coordinates mod q, a torsion coordinate of
// order n mod gcd(n, q)).
inline Int count_flows(const VectorList& x, const Int& q,
                       std::vector<std::vector<Int>>* out = nullptr) {
    if (q <= 0) throw std::invalid_argument("q must be positive");
    if (q > kEnumerationCap) throw ResourceError("q exceeds the enumeration cap");
    const int n = x.size();
    const int d = x.group.free_rank;
    const int k = static_cast<int>(x.group.torsion.size());
    if (q == 1) return n == 0 ? 1 : 0;  // Z_1 \ {0} is empty

    double size_estimate = 1;
    for (int i = 0; i < n; ++i) size_estimate *= static_cast<double>(static_cast<long>(q) - 1);
    if (size_estimate > static_cast<double>(kEnumerationCap))
        throw ResourceError("flow enumeration exceeds the 10^7 cap");

    std::vector<Int> moduli(d + k, q);
    for (int i = 0; i < k; ++i) moduli[d + i] = gcd(x.group.torsion[i], q);

    std::vector<long> radix(n, static_cast<long>(q) - 1);
    Int count = 0;
    detail::for_each_tuple(radix, [&](const std::vector<long>& digits) {
        std::vector<Int> sum(d + k, 0);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < d + k; ++c) sum[c] += (digits[i] + 1) * x.vectors[i][c];
        for (int c = 0; c < d + k; ++c)
            if (detail::mod_nonneg(sum[c], moduli[c]) != 0) return;
        ++count;
        if (out) {
            std::vector<Int> psi(n);
            for (int i = 0; i < n; ++i) psi[i] = digits[i] + 1;
            out->push_back(std::move(psi));
        }
    });
    return count;
}

// Flow/coloring evaluation of the (arithmetic) Tutte polynomial:
//   q in Z_A:  chi(q)  = (-1)^rk q^(rk G - rk X) aritutte(1-q, 0)
//              chi*(q) = (-1)^(|X| - rk) aritutte(0, 1-q)
//   q in Z_M:  the same with the plain Tutte polynomial.
struct Theorem6Report {
    Int q;
    bool in_za = false, in_zm = false;
    bool applicable = false;
    Int chi_count = 0, chistar_count = 0;
    Rat chi_poly_za, chistar_poly_za;
    Rat chi_poly_zm, chistar_poly_zm;
    bool equal = false;
};

inline Theorem6Report verify_theorem6(const VectorList& x, const Int& q) {
    Theorem6Report rep;
    rep.q = q;
    const QSets qs = qsets(x);
    rep.in_za = qs.in_za(q);
    rep.in_zm = qs.in_zm(q);
    rep.applicable = rep.in_za || rep.in_zm;
    if (!rep.applicable) return rep;

    const RankedSet m = build_arithmetic_matroid(x);
    const int rk = static_cast<int>(m.rk(m.full()).to_int());
    const int corank_sign = (x.size() - rk) % 2 == 0 ? 1 : -1;
    const int rank_sign = rk % 2 == 0 ? 1 : -1;
    const Rat qpow = pow_rat(Rat(q), Int(x.group.free_rank - rk));

    rep.chi_count = count_colorings(x, q);
    rep.chistar_count = count_flows(x, q);

    bool ok = true;
    if (rep.in_za) {
        const BiLaurent ari = aritutte_shifted(m);
        rep.chi_poly_za = rank_sign * qpow * ari.eval(-q, -1);
        rep.chistar_poly_za = corank_sign * ari.eval(-1, -q);
        ok = ok && rep.chi_poly_za == Rat(rep.chi_count) &&
             rep.chistar_poly_za == Rat(rep.chistar_count);
    }
    if (rep.in_zm) {
        const BiLaurent tut = tutte_shifted(m);
        rep.chi_poly_zm = rank_sign * qpow * tut.eval(-q, -1);
        rep.chistar_poly_zm = corank_sign * tut.eval(-1, -q);
        ok = ok && rep.chi_poly_zm == Rat(rep.chi_count) &&
             rep.chistar_poly_zm == Rat(rep.chistar_count);
    }
    rep.equal = ok;
    return rep;
}

struct FlowColoringConvolutionReport {
    std::string identity;
    Int p, q;
    bool applicable = false;
    std::string not_applicable_reason;
    Rat lhs, rhs;
    bool equal = false;
};

namespace detail {
// The common right-hand side: p^(rk G - rk X) (-1)^(rk X) times the signed
// sum over subsets of chi*_{X|_A}(q) chi_{X/A}(p), all counts brute force.
inline Rat flow_coloring_sum(const VectorList& x, const Int& p, const Int& q) {
    const Mask top = full_mask(x.size());
    const int rk = rank_of(x, top);
    Rat acc = 0;
    for_each_subset(top, [&](Mask a) {
        const Int flows = count_flows(restrict_list(x, a), q);
        if (flows == 0) return;
        const Int colorings = count_colorings(contract_list(x, a), p);
        const int sign = popcount(a) % 2 == 0 ? 1 : -1;
        acc += Rat(sign) * Rat(flows) * Rat(colorings);
    });
    const int rank_sign = rk % 2 == 0 ? 1 : -1;
    return rank_sign * pow_rat(Rat(p), Int(x.group.free_rank - rk)) * acc;
}

// Does `q` lie in the named class for every restriction (and `p` in the
// other class for every contraction)?  Returns an offending description or
// the empty string.
inline std::string minor_admissibility(const VectorList& x, const Int& p, bool p_in_za,
                                       const Int& q, bool q_in_za) {
    std::string offending;
    for_each_subset(full_mask(x.size()), [&](Mask a) {
        if (!offending.empty()) return;
        const QSets qs_restrict = qsets(restrict_list(x, a));
        if (q_in_za ? !qs_restrict.in_za(q) : !qs_restrict.in_zm(q)) {
            offending = "q=" + q.str() + " is not in Z_" + (q_in_za ? "A" : "M") +
                        " of the restriction to subset mask " + std::to_string(a);
            return;
        }
        const QSets qs_contract = qsets(contract_list(x, a));
        if (p_in_za ? !qs_contract.in_za(p) : !qs_contract.in_zm(p)) {
            offending = "p=" + p.str() + " is not in Z_" + (p_in_za ? "A" : "M") +
                        " of the contraction by subset mask " + std::to_string(a);
        }
    });
    return offending;
}
}  // namespace detail

// aritutte_{X^2}(1-p, 1-q) as a signed flow/coloring double count; needs
// p, q in Z_A of the list and of every minor in the sum.
inline FlowColoringConvolutionReport verify_corollary7(const VectorList& x, const Int& p,
                                                       const Int& q) {
    FlowColoringConvolutionReport rep;
    rep.identity = "corollary7";
    rep.p = p;
    rep.q = q;
    const QSets qs = qsets(x);
    if (!qs.in_za(p) || !qs.in_za(q)) {
        rep.not_applicable_reason = "p and q must lie in Z_A(X)";
        return rep;
    }
    const std::string offending = detail::minor_admissibility(x, p, true, q, true);
    if (!offending.empty()) {
        rep.not_applicable_reason = offending;
        return rep;
    }
    rep.applicable = true;
    const RankedSet m = build_arithmetic_matroid(x);
    rep.lhs = aritutte_shifted(product_mult(m, m)).eval(-p, -q);
    rep.rhs = detail::flow_coloring_sum(x, p, q);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// aritutte_X(1-p, 1-q) as the same double count, for (p in Z_A, q in Z_M)
// or (p in Z_M, q in Z_A), again propagated to all minors.
inline FlowColoringConvolutionReport verify_corollary8(const VectorList& x, const Int& p,
                                                       const Int& q) {
    FlowColoringConvolutionReport rep;
    rep.identity = "corollary8";
    rep.p = p;
    rep.q = q;
    const QSets qs = qsets(x);
    std::string reason;
    bool applicable = false;
    if (qs.in_za(p) && qs.in_zm(q)) {
        reason = detail::minor_admissibility(x, p, true, q, false);
        applicable = reason.empty();
    }
    if (!applicable && qs.in_zm(p) && qs.in_za(q)) {
        reason = detail::minor_admissibility(x, p, false, q, true);
        applicable = reason.empty();
    }
    if (!applicable) {
        rep.not_applicable_reason =
            reason.empty() ? "need p in Z_A and q in Z_M, or p in Z_M and q in Z_A" : reason;
        return rep;
    }
    rep.applicable = true;
    const RankedSet m = build_arithmetic_matroid(x);
    rep.lhs = aritutte_shifted(m).eval(-p, -q);
    rep.rhs = detail::flow_coloring_sum(x, p, q);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace tutteconv
