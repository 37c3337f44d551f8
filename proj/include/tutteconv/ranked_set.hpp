#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutteconv/bilaurent.hpp"
#include "tutteconv/errors.hpp"
#include "tutteconv/subset.hpp"

namespace tutteconv {

// Process-wide cap on ground-set sizes that carry full power-set maps.
// Configurable downward only; the hard limit keeps masks in one word.
inline int& ground_cap_ref() {
    static int cap = kGroundCapLimit;
    return cap;
}
inline int ground_cap() { return ground_cap_ref(); }
inline void set_ground_cap(int n) {
    if (n < 0 || n > kGroundCapLimit)
        throw std::invalid_argument("ground cap must be between 0 and 24");
    ground_cap_ref() = n;
}

inline void check_ground_size(std::size_t n, const char* what) {
    if (static_cast<int>(n) > ground_cap())
        throw ResourceError(std::string(what) + ": ground set of size " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(ground_cap()));
}

// A finite set with a rank map and a multiplicity map over the full power
// set.  rank(empty) = 0 always; everything else is unconstrained, so the
// type also carries polymatroids, delta-matroid rank functions (via
// half-integer ranks) and arbitrary rational multiplicities.
struct RankedSet {
    std::vector<std::string> labels;
    std::vector<HalfInt> rank;  // indexed by Mask, size 2^n
    std::vector<Rat> mult;

    int n() const { return static_cast<int>(labels.size()); }
    Mask full() const { return full_mask(n()); }

    const HalfInt& rk(Mask a) const { return rank[a]; }
    const Rat& m(Mask a) const { return mult[a]; }

    void validate() const {
        check_ground_size(labels.size(), "ranked set");
        const std::size_t want = std::size_t{1} << labels.size();
        if (rank.size() != want || mult.size() != want)
            throw std::invalid_argument("rank and mult must cover the full power set");
        if (!(rank[0] == HalfInt(0)))
            throw std::invalid_argument("rank of the empty set must be 0");
    }
};

inline RankedSet make_ranked_set(std::vector<std::string> labels,
                                 const std::function<HalfInt(Mask)>& rank_fn,
                                 const std::function<Rat(Mask)>& mult_fn) {
    check_ground_size(labels.size(), "ranked set");
    RankedSet s;
    s.labels = std::move(labels);
    const Mask top = s.full();
    s.rank.resize(std::size_t{1} << s.n());
    s.mult.resize(std::size_t{1} << s.n());
    for (Mask a = 0;; ++a) {
        s.rank[a] = rank_fn(a);
        s.mult[a] = mult_fn(a);
        if (a == top) break;
    }
    s.validate();
    return s;
}

inline std::vector<std::string> default_labels(int n, const std::string& prefix = "e") {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

inline RankedSet restrict_to(const RankedSet& s, Mask a) {
    if (!is_subset(a, s.full()))
        throw std::invalid_argument("restriction set is not a subset of the ground set");
    RankedSet r;
    for (int i : elements_of(a)) r.labels.push_back(s.labels[i]);
    const std::size_t size = std::size_t{1} << r.labels.size();
    r.rank.resize(size);
    r.mult.resize(size);
    for (Mask b = 0; b < size; ++b) {
        const Mask orig = embed(b, a);
        r.rank[b] = s.rank[orig];
        r.mult[b] = s.mult[orig];
    }
    return r;
}

inline RankedSet contract(const RankedSet& s, Mask a) {
    if (!is_subset(a, s.full()))
        throw std::invalid_argument("contraction set is not a subset of the ground set");
    const Mask rest = s.full() & ~a;
    RankedSet r;
    for (int i : elements_of(rest)) r.labels.push_back(s.labels[i]);
    const std::size_t size = std::size_t{1} << r.labels.size();
    r.rank.resize(size);
    r.mult.resize(size);
    const HalfInt ra = s.rank[a];
    for (Mask b = 0; b < size; ++b) {
        const Mask orig = embed(b, rest);
        r.rank[b] = s.rank[orig | a] - ra;
        r.mult[b] = s.mult[orig | a];
    }
    return r;
}

// Dual ranked set: rank*(A) = |A| - rank(M) + rank(M \ A), m*(A) = m(M \ A).
inline RankedSet dualize(const RankedSet& s) {
    RankedSet r;
    r.labels = s.labels;
    const Mask top = s.full();
    const std::size_t size = std::size_t{1} << s.n();
    r.rank.resize(size);
    r.mult.resize(size);
    for (Mask a = 0; a < size; ++a) {
        r.rank[a] = HalfInt(popcount(a)) - s.rank[top] + s.rank[top & ~a];
        r.mult[a] = s.mult[top & ~a];
    }
    return r;
}

// Pointwise product of two multiplicity maps over a shared ground and rank.
inline RankedSet product_mult(const RankedSet& a, const RankedSet& b) {
    if (a.labels != b.labels || a.rank != b.rank)
        throw std::invalid_argument("product_mult requires identical ground sets and rank maps");
    RankedSet r = a;
    for (std::size_t i = 0; i < r.mult.size(); ++i) r.mult[i] = a.mult[i] * b.mult[i];
    return r;
}

// The multiplicity-weighted rank generating function in shifted
// coordinates: sum over subsets of m(A) x^(rk(M)-rk(A)) y^(|A|-rk(A)).
// This equals the arithmetic Tutte function evaluated at (x+1, y+1) and is
// always an honest Laurent polynomial (with half-integer exponents when the
// rank map has them).
inline BiLaurent aritutte_shifted(const RankedSet& s) {
    BiLaurent acc;
    const Mask top = s.full();
    const HalfInt rm = s.rank[top];
    for (Mask a = 0;; ++a) {
        acc += BiLaurent::monomial(s.mult[a], rm - s.rank[a], HalfInt(popcount(a)) - s.rank[a]);
        if (a == top) break;
    }
    return acc;
}

// Same with multiplicities ignored (m = 1): the Tutte function at (x+1, y+1).
inline BiLaurent tutte_shifted(const RankedSet& s) {
    BiLaurent acc;
    const Mask top = s.full();
    const HalfInt rm = s.rank[top];
    for (Mask a = 0;; ++a) {
        acc += BiLaurent::monomial(1, rm - s.rank[a], HalfInt(popcount(a)) - s.rank[a]);
        if (a == top) break;
    }
    return acc;
}

// Expanded arithmetic Tutte polynomial in standard coordinates.  Defined
// whenever every exponent pair (rk(M)-rk(A), |A|-rk(A)) is a pair of
// nonnegative integers (e.g. all matroids and even delta-matroids);
// otherwise only the shifted form exists and this throws.
inline BiLaurent aritutte(const RankedSet& s) { return shifted_down(aritutte_shifted(s)); }
inline BiLaurent tutte(const RankedSet& s) { return shifted_down(tutte_shifted(s)); }

// Relabeled copy with element i of the result being element perm[i] of s.
// Tutte-type invariants must not change under this.
inline RankedSet permuted(const RankedSet& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.n())
        throw std::invalid_argument("permutation size mismatch");
    RankedSet r;
    r.labels.resize(s.n());
    for (int i = 0; i < s.n(); ++i) r.labels[i] = s.labels[perm[i]];
    const std::size_t size = std::size_t{1} << s.n();
    r.rank.resize(size);
    r.mult.resize(size);
    for (Mask a = 0; a < size; ++a) {
        Mask orig = 0;
        for (int i = 0; i < s.n(); ++i)
            if (contains(a, i)) orig |= bit(perm[i]);
        r.rank[a] = s.rank[orig];
        r.mult[a] = s.mult[orig];
    }
    return r;
}

inline RankedSet with_unit_mult(const RankedSet& s) {
    RankedSet r = s;
    std::fill(r.mult.begin(), r.mult.end(), Rat(1));
    return r;
}

}  // namespace tutteconv
