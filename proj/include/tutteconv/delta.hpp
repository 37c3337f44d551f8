#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tutteconv/axioms.hpp"
#include "tutteconv/ranked_set.hpp"

namespace tutteconv {

// Set system (E, F) with a nonempty feasible family.  The symmetric
// exchange axiom is validated by check_symmetric_exchange; construction
// through make_delta_matroid enforces it eagerly.
struct DeltaMatroid {
    std::vector<std::string> ground;
    std::vector<Mask> feasible;  // sorted, unique

    int n() const { return static_cast<int>(ground.size()); }
    Mask full() const { return full_mask(n()); }

    void canonicalize() {
        std::sort(feasible.begin(), feasible.end());
        feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
    }

    void validate_shape() const {
        check_ground_size(ground.size(), "delta-matroid");
        if (feasible.empty())
            throw std::invalid_argument("the feasible family must be nonempty");
        for (Mask f : feasible)
            if (!is_subset(f, full()))
                throw std::invalid_argument("feasible set outside the ground set");
    }
};

// Symmetric exchange: for all S, T feasible and u in S^T there is some
// v in S^T with S^{u,v} feasible (v = u allowed).
inline AxiomReport check_symmetric_exchange(const DeltaMatroid& d) {
    AxiomReport rep;
    for (Mask s : d.feasible)
        for (Mask t : d.feasible) {
            const Mask sym = s ^ t;
            for (int u : elements_of(sym)) {
                bool found = false;
                for (int v : elements_of(sym)) {
                    const Mask candidate = s ^ bit(u) ^ bit(v);
                    if (std::binary_search(d.feasible.begin(), d.feasible.end(), candidate)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    rep.fail({"symmetric-exchange",
                              {{"S", s}, {"T", t}, {"u", bit(u)}},
                              "no exchange partner for u"});
            }
        }
    return rep;
}

inline DeltaMatroid make_delta_matroid(std::vector<std::string> ground,
                                       std::vector<Mask> feasible) {
    DeltaMatroid d{std::move(ground), std::move(feasible)};
    d.canonicalize();
    d.validate_shape();
    const AxiomReport rep = check_symmetric_exchange(d);
    if (!rep.passed)
        throw std::invalid_argument("feasible family violates the symmetric exchange axiom");
    return d;
}

inline bool is_even(const DeltaMatroid& d) {
    const int parity = popcount(d.feasible.front()) % 2;
    for (Mask f : d.feasible)
        if (popcount(f) % 2 != parity) return false;
    return true;
}

// Twist D ^ S: feasible sets become F ^ S.  Preserves symmetric exchange.
inline DeltaMatroid twist(const DeltaMatroid& d, Mask s) {
    DeltaMatroid out = d;
    for (Mask& f : out.feasible) f ^= s;
    out.canonicalize();
    return out;
}

// Bouchet deletion of one element: keep the feasible sets avoiding e when
// any exist, otherwise strip e from every feasible set.
namespace detail {
inline std::vector<Mask> delete_element(const std::vector<Mask>& feasible, int e) {
    std::vector<Mask> kept;
    for (Mask f : feasible)
        if (!contains(f, e)) kept.push_back(f);
    if (kept.empty())
        for (Mask f : feasible) kept.push_back(f & ~bit(e));
    return kept;
}
}  // namespace detail

// Restriction D|_A by deleting the elements outside A one at a time in
// index order, then compressing the surviving indices.
inline DeltaMatroid delta_restrict(const DeltaMatroid& d, Mask a) {
    if (!is_subset(a, d.full()))
        throw std::invalid_argument("restriction set is not a subset of the ground set");
    std::vector<Mask> fam = d.feasible;
    for (int e = 0; e < d.n(); ++e)
        if (!contains(a, e)) fam = detail::delete_element(fam, e);
    DeltaMatroid out;
    for (int i : elements_of(a)) out.ground.push_back(d.ground[i]);
    for (Mask f : fam) out.feasible.push_back(compress(f, a));
    out.canonicalize();
    out.validate_shape();
    return out;
}

// rho(A) = (max + min feasible size of D|_A) / 2, a half-integer in
// general and an integer for even delta-matroids.
inline HalfInt delta_rank(const DeltaMatroid& d, Mask a) {
    const DeltaMatroid r = delta_restrict(d, a);
    int lo = popcount(r.feasible.front()), hi = lo;
    for (Mask f : r.feasible) {
        lo = std::min(lo, popcount(f));
        hi = std::max(hi, popcount(f));
    }
    return HalfInt::from_doubled(Int(lo + hi));
}

// The ranked set (E, rho, m = 1) whose Tutte function is the 2-variable
// Bollobas-Riordan polynomial.
inline RankedSet to_ranked_set(const DeltaMatroid& d) {
    return make_ranked_set(
        d.ground, [&](Mask a) { return delta_rank(d, a); }, [](Mask) { return Rat(1); });
}

// Shifted form R(x+1, y+1); always a Laurent polynomial in half-integer
// exponents and the input to the convolution identities.
inline BiLaurent bollobas_riordan_shifted(const DeltaMatroid& d) {
    return tutte_shifted(to_ranked_set(d));
}

// Expanded polynomial sum over subsets of (x-1)^(rho(E)-rho(A)) times
// (y-1)^(|A|-rho(A)); defined whenever those exponents are nonnegative
// integers (all even delta-matroids).
inline BiLaurent bollobas_riordan(const DeltaMatroid& d) {
    return shifted_down(bollobas_riordan_shifted(d));
}

}  // namespace tutteconv
