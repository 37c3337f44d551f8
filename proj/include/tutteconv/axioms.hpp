#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tutteconv/ranked_set.hpp"

namespace tutteconv {

// One axiom failure with named witness subsets, e.g. {"A": mask, "e": mask}.
struct Violation {
    std::string axiom;
    std::vector<std::pair<std::string, Mask>> witnesses;
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    std::vector<Violation> violations;

    void fail(Violation v) {
        passed = false;
        violations.push_back(std::move(v));
    }
};

namespace detail {
inline std::string subset_names(const RankedSet& s, Mask a) {
    std::string out = "{";
    bool first = true;
    for (int i : elements_of(a)) {
        if (!first) out += ",";
        out += s.labels[i];
        first = false;
    }
    return out + "}";
}
}  // namespace detail

// Polymatroid rank axioms: rank(empty) = 0, integrality and nonnegativity,
// monotonicity, submodularity over every subset pair.
inline AxiomReport check_polymatroid(const RankedSet& s) {
    AxiomReport rep;
    const Mask top = s.full();
    if (!(s.rk(0) == HalfInt(0)))
        rep.fail({"rank-empty", {{"A", 0}}, "rank of the empty set is not 0"});
    for (Mask a = 0;; ++a) {
        if (!s.rk(a).is_integer())
            rep.fail({"rank-integral", {{"A", a}}, "rank " + half_to_string(s.rk(a)) +
                                                       " of " + detail::subset_names(s, a) +
                                                       " is not an integer"});
        if (s.rk(a) < HalfInt(0))
            rep.fail({"rank-nonnegative", {{"A", a}}, "negative rank at " +
                                                          detail::subset_names(s, a)});
        if (a == top) break;
    }
    for (Mask a = 0;; ++a) {
        // Monotonicity along single-element extensions is equivalent and
        // gives minimal witnesses.
        for (int e = 0; e < s.n(); ++e) {
            if (contains(a, e)) continue;
            if (s.rk(a | bit(e)) < s.rk(a))
                rep.fail({"monotone",
                          {{"A", a}, {"e", bit(e)}},
                          "rank drops from " + half_to_string(s.rk(a)) + " to " +
                              half_to_string(s.rk(a | bit(e)))});
        }
        if (a == top) break;
    }
    for (Mask a = 0;; ++a) {
        for (Mask b = a;; ++b) {
            if (s.rk(a | b) + s.rk(a & b) > s.rk(a) + s.rk(b))
                rep.fail({"submodular",
                          {{"A", a}, {"B", b}},
                          "rank(A u B) + rank(A n B) > rank(A) + rank(B) at A=" +
                              detail::subset_names(s, a) + " B=" + detail::subset_names(s, b)});
            if (b == top) break;
        }
        if (a == top) break;
    }
    return rep;
}

// Matroid = polymatroid + unit increase.
inline AxiomReport check_matroid(const RankedSet& s) {
    AxiomReport rep = check_polymatroid(s);
    const Mask top = s.full();
    for (Mask a = 0;; ++a) {
        for (int e = 0; e < s.n(); ++e) {
            if (contains(a, e)) continue;
            if (s.rk(a | bit(e)) > s.rk(a) + HalfInt(1))
                rep.fail({"unit-increase",
                          {{"A", a}, {"e", bit(e)}},
                          "rank jumps by more than one when adding " + s.labels[e] + " to " +
                              detail::subset_names(s, a)});
        }
        if (a == top) break;
    }
    return rep;
}

// Interval [R, S] with the unique split S \ R = F u T making ranks inside
// the interval equal rank(R) + |A n F|.  Only constructed after the
// defining condition has been verified on the whole interval.
struct Molecule {
    Mask R = 0, S = 0, F = 0, T = 0;
};

inline std::optional<Molecule> find_molecule(const RankedSet& s, Mask r, Mask sm) {
    if (!is_subset(r, sm) || !is_subset(sm, s.full()))
        throw std::invalid_argument("find_molecule requires R within S within the ground set");
    Molecule mol;
    mol.R = r;
    mol.S = sm;
    const Mask mid = sm & ~r;
    for (int e : elements_of(mid)) {
        if (s.rk(r | bit(e)) == s.rk(r) + HalfInt(1))
            mol.F |= bit(e);
        else
            mol.T |= bit(e);
    }
    bool ok = true;
    for_each_subset(mid, [&](Mask x) {
        if (!(s.rk(r | x) == s.rk(r) + HalfInt(popcount(x & mol.F)))) ok = false;
    });
    if (!ok) return std::nullopt;
    return mol;
}

// rho(R, S) = (-1)^|T| * sum over the interval of (-1)^(|S| - |A|) m(A).
inline Rat rho(const RankedSet& s, const Molecule& mol) {
    Rat acc = 0;
    const int szS = popcount(mol.S);
    for_each_subset(mol.S & ~mol.R, [&](Mask x) {
        const Mask a = mol.R | x;
        const int sign = ((szS - popcount(a)) % 2 == 0) ? 1 : -1;
        acc += sign * s.m(a);
    });
    return popcount(mol.T) % 2 == 0 ? acc : -acc;
}

namespace detail {
inline void require_matroid(const RankedSet& s, const char* what) {
    if (!check_matroid(s).passed)
        throw PreconditionError(std::string(what) + " requires a matroid rank function");
}
inline void require_positive_integer_mult(const RankedSet& s, const char* what) {
    for (const auto& m : s.mult)
        if (!is_integer(m) || m <= 0)
            throw PreconditionError(std::string(what) +
                                    " requires positive integer multiplicities");
}

template <typename F>
void for_each_molecule(const RankedSet& s, F&& f) {
    const Mask top = s.full();
    for (Mask sm = 0;; ++sm) {
        for_each_subset(sm, [&](Mask r) {
            if (auto mol = find_molecule(s, r, sm)) f(*mol);
        });
        if (sm == top) break;
    }
}
}  // namespace detail

// Positivity axiom (P): rho(R, S) >= 0 for every molecule.
inline AxiomReport check_P(const RankedSet& s) {
    detail::require_matroid(s, "check_P");
    AxiomReport rep;
    detail::for_each_molecule(s, [&](const Molecule& mol) {
        const Rat v = rho(s, mol);
        if (v < 0)
            rep.fail({"P",
                      {{"R", mol.R}, {"S", mol.S}},
                      "rho(R,S) = " + rat_to_string(v) + " < 0 at R=" +
                          detail::subset_names(s, mol.R) + " S=" + detail::subset_names(s, mol.S)});
    });
    return rep;
}

// Divisibility axiom (A1), both directions, over all (A, e) pairs.
inline AxiomReport check_A1(const RankedSet& s) {
    detail::require_positive_integer_mult(s, "check_A1");
    AxiomReport rep;
    const Mask top = s.full();
    for (Mask a = 0;; ++a) {
        for (int e = 0; e < s.n(); ++e) {
            if (contains(a, e)) continue;
            const Int ma = num(s.m(a));
            const Int mae = num(s.m(a | bit(e)));
            if (s.rk(a | bit(e)) == s.rk(a)) {
                if (!divides(mae, ma))
                    rep.fail({"A1",
                              {{"A", a}, {"e", bit(e)}},
                              mae.str() + " does not divide " + ma.str()});
            } else {
                if (!divides(ma, mae))
                    rep.fail({"A1",
                              {{"A", a}, {"e", bit(e)}},
                              ma.str() + " does not divide " + mae.str()});
            }
        }
        if (a == top) break;
    }
    return rep;
}

// Multiplicativity axiom (A2): m(R) m(S) = m(R u F) m(R u T) on molecules.
inline AxiomReport check_A2(const RankedSet& s) {
    detail::require_positive_integer_mult(s, "check_A2");
    AxiomReport rep;
    detail::for_each_molecule(s, [&](const Molecule& mol) {
        if (s.m(mol.R) * s.m(mol.S) != s.m(mol.R | mol.F) * s.m(mol.R | mol.T))
            rep.fail({"A2",
                      {{"R", mol.R}, {"S", mol.S}},
                      "m(R)m(S) != m(RuF)m(RuT) at R=" + detail::subset_names(s, mol.R) +
                          " S=" + detail::subset_names(s, mol.S)});
    });
    return rep;
}

struct Classification {
    bool matroid = false;
    bool pseudo_arithmetic = false;
    bool quasi_arithmetic = false;
    bool arithmetic = false;
};

inline Classification classify(const RankedSet& s) {
    Classification c;
    c.matroid = check_matroid(s).passed;
    if (!c.matroid) return c;
    c.pseudo_arithmetic = check_P(s).passed;
    try {
        c.quasi_arithmetic = check_A1(s).passed && check_A2(s).passed;
    } catch (const PreconditionError&) {
        c.quasi_arithmetic = false;  // multiplicities outside Z>=1
    }
    c.arithmetic = c.pseudo_arithmetic && c.quasi_arithmetic;
    return c;
}

// The classical activity partition of the subset lattice into basis
// intervals [B \ IA(B), B u EA(B)], each of which is a molecule with
// rank(R) = |R| and rank(S) = rank(M).  `order` is a permutation of the
// element indices; order[0] is the smallest element.
inline std::vector<Molecule> molecule_partition(const RankedSet& s,
                                                const std::vector<int>& order) {
    detail::require_matroid(s, "molecule_partition");
    if (order.size() != static_cast<std::size_t>(s.n()))
        throw std::invalid_argument("order must be a permutation of the ground set");
    std::vector<int> pos(s.n(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] < 0 || order[i] >= s.n() || pos[order[i]] != -1)
            throw std::invalid_argument("order must be a permutation of the ground set");
        pos[order[i]] = static_cast<int>(i);
    }

    const Mask top = s.full();
    const HalfInt rk_top = s.rk(top);
    const int rank_m = static_cast<int>(rk_top.to_int());
    auto is_basis = [&](Mask b) {
        return popcount(b) == rank_m && s.rk(b) == rk_top;
    };

    std::vector<Molecule> out;
    for (Mask b = 0;; ++b) {
        if (is_basis(b)) {
            Mask internally_active = 0, externally_active = 0;
            for (int e : elements_of(b)) {
                // Fundamental cocircuit of e: {e} plus the non-basis f
                // whose swap into B keeps a basis.
                int best = pos[e];
                for (int f = 0; f < s.n(); ++f) {
                    if (contains(b, f)) continue;
                    if (is_basis((b & ~bit(e)) | bit(f)) && pos[f] < best) best = pos[f];
                }
                if (best == pos[e]) internally_active |= bit(e);
            }
            for (int e = 0; e < s.n(); ++e) {
                if (contains(b, e)) continue;
                // Fundamental circuit of e in B + e.
                int best = pos[e];
                for (int f : elements_of(b)) {
                    if (is_basis((b & ~bit(f)) | bit(e)) && pos[f] < best) best = pos[f];
                }
                if (best == pos[e]) externally_active |= bit(e);
            }
            auto mol = find_molecule(s, b & ~internally_active, b | externally_active);
            if (!mol)
                throw std::logic_error("activity interval is not a molecule");
            out.push_back(*mol);
        }
        if (b == top) break;
    }
    return out;
}

}  // namespace tutteconv
