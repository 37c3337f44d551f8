#pragma once

#include <string>
#include <vector>

#include "tutteconv/ranked_set.hpp"
#include "tutteconv/snf.hpp"
#include "tutteconv/subset.hpp"

namespace tutteconv {

// Finitely generated abelian group Z^d + Z/n1 + ... + Z/nk with the torsion
// orders in an invariant-factor chain n1 | n2 | ... , each ni >= 2.
// Elements are integer tuples of length d + k, free coordinates first.
struct FGGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    int dim() const { return free_rank + static_cast<int>(torsion.size()); }
    bool torsion_free() const { return torsion.empty(); }

    void validate() const {
        if (free_rank < 0) throw std::invalid_argument("negative free rank");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw std::invalid_argument("torsion orders must be >= 2");
            if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
                throw std::invalid_argument("torsion orders must form a divisibility chain");
        }
    }

    std::vector<Int> normalized(std::vector<Int> e) const {
        if (static_cast<int>(e.size()) != dim())
            throw std::invalid_argument("group element has wrong length");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            Int& c = e[free_rank + i];
            c %= torsion[i];
            if (c < 0) c += torsion[i];
        }
        return e;
    }

    bool operator==(const FGGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// A finite list of group elements (duplicates allowed), the representation
// data of an arithmetic matroid.
struct VectorList {
    FGGroup group;
    std::vector<std::vector<Int>> vectors;

    int size() const { return static_cast<int>(vectors.size()); }

    void normalize() {
        group.validate();
        for (auto& v : vectors) v = group.normalized(std::move(v));
    }
};

inline VectorList make_vector_list(FGGroup g, std::vector<std::vector<Int>> vecs) {
    VectorList x{std::move(g), std::move(vecs)};
    x.normalize();
    return x;
}

namespace detail {
// Columns: the selected vectors of X, then one relation generator ni*e_i
// per torsion coordinate.  The quotient of Z^dim by this column span is
// G / <A>.
inline IMat stacked_matrix(const VectorList& x, Mask a) {
    const int dim = x.group.dim();
    const auto idx = elements_of(a);
    const std::size_t k = x.group.torsion.size();
    IMat m = zero_mat(dim, idx.size() + k);
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < dim; ++i) m[i][j] = x.vectors[idx[j]][i];
    for (std::size_t t = 0; t < k; ++t)
        m[x.group.free_rank + t][idx.size() + t] = x.group.torsion[t];
    return m;
}
}  // namespace detail

// Matroid rank of the sublist indexed by `a`: the free rank gained over the
// relations alone.
inline int rank_of(const VectorList& x, Mask a) {
    if (!is_subset(a, full_mask(x.size()))) throw std::invalid_argument("bad index subset");
    const int torsion_rank = static_cast<int>(x.group.torsion.size());
    return snf(detail::stacked_matrix(x, a)).rank - torsion_rank;
}

// m(A) = |G_A / <A>|, the torsion order of the quotient G / <A>: the
// product of the nonzero invariant factors of the stacked matrix.
inline Int multiplicity(const VectorList& x, Mask a) {
    Int m = 1;
    for (const auto& f : snf(detail::stacked_matrix(x, a)).invariant_factors) m *= f;
    return m;
}

// gcd of all |A| x |A| minors of the chosen columns; torsion-free lists and
// independent subsets only (where it equals the multiplicity).
inline Int gcd_minors(const VectorList& x, Mask a) {
    if (!x.group.torsion_free())
        throw std::invalid_argument("gcd_minors requires a torsion-free group");
    const auto idx = elements_of(a);
    const int r = static_cast<int>(idx.size());
    if (rank_of(x, a) != r)
        throw std::invalid_argument("gcd_minors requires an independent subset");
    if (r == 0) return 1;
    const int d = x.group.free_rank;
    Int g = 0;
    std::vector<int> pick(r);
    // All r-subsets of the d row indices.
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        IMat sub = zero_mat(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i][j] = x.vectors[idx[j]][pick[i]];
        g = gcd(g, det_bareiss(sub));
        int p = r - 1;
        while (p >= 0 && pick[p] == d - r + p) --p;
        if (p < 0) break;
        ++pick[p];
        for (int q = p + 1; q < r; ++q) pick[q] = pick[q - 1] + 1;
    }
    return abs(g);
}

// m(A) as the gcd of m(B) over maximal-rank independent subsets B of A.
inline Int multiplicity_via_bases(const VectorList& x, Mask a) {
    const int r = rank_of(x, a);
    Int g = 0;
    for_each_subset(a, [&](Mask b) {
        if (popcount(b) != r) return;
        if (rank_of(x, b) != r) return;
        g = gcd(g, multiplicity(x, b));
    });
    return g == 0 ? Int(1) : g;
}

// Presentation of G / <A> in invariant-factor form, with the projection
// map G -> G / <A> in the new coordinates.
struct Quotient {
    FGGroup group;
    IMat u;                  // unimodular transform from the SNF
    std::vector<Int> diag;   // full diagonal of the SNF
    int rank = 0;            // nonzero entries

    std::vector<Int> project(const std::vector<Int>& z) const {
        const std::size_t dim = rows(u);
        if (z.size() != dim) throw std::invalid_argument("projection: wrong element length");
        std::vector<Int> w(dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) w[i] += u[i][j] * z[j];
        std::vector<Int> out;
        // Free coordinates first, then surviving torsion in chain order.
        for (std::size_t i = rank; i < dim; ++i) out.push_back(w[i]);
        for (int i = 0; i < rank; ++i)
            if (diag[i] >= 2) out.push_back(w[i]);
        return group.normalized(std::move(out));
    }
};

inline Quotient quotient(const VectorList& x, Mask a) {
    const int dim = x.group.dim();
    const SNFResult s = snf(detail::stacked_matrix(x, a));
    Quotient q;
    q.u = s.u;
    q.rank = s.rank;
    q.diag.assign(dim, 0);
    for (std::size_t i = 0; i < s.diagonal.size() && i < static_cast<std::size_t>(dim); ++i)
        q.diag[i] = s.diagonal[i];
    q.group.free_rank = dim - s.rank;
    for (const auto& f : s.invariant_factors)
        if (f >= 2) q.group.torsion.push_back(f);
    q.group.validate();
    return q;
}

inline VectorList restrict_list(const VectorList& x, Mask a) {
    VectorList out;
    out.group = x.group;
    for (int i : elements_of(a)) out.vectors.push_back(x.vectors[i]);
    return out;
}

// Projection of the complementary sublist into G / <A>.
inline VectorList contract_list(const VectorList& x, Mask a) {
    const Quotient q = quotient(x, a);
    VectorList out;
    out.group = q.group;
    const Mask rest = full_mask(x.size()) & ~a;
    for (int i : elements_of(rest)) out.vectors.push_back(q.project(x.vectors[i]));
    return out;
}

inline VectorList scale_list(const VectorList& x, const Int& factor) {
    if (!x.group.torsion_free())
        throw std::invalid_argument("scaling is defined for torsion-free lists only");
    VectorList out = x;
    for (auto& v : out.vectors)
        for (auto& c : v) c *= factor;
    return out;
}

// The represented arithmetic matroid: rank and multiplicity maps over the
// full power set of list indices.
inline RankedSet build_arithmetic_matroid(const VectorList& x,
                                          std::vector<std::string> labels = {}) {
    check_ground_size(x.vectors.size(), "vector list");
    if (labels.empty()) labels = default_labels(x.size(), "v");
    if (labels.size() != x.vectors.size())
        throw std::invalid_argument("label count must match the list length");
    return make_ranked_set(
        std::move(labels), [&](Mask a) { return HalfInt(rank_of(x, a)); },
        [&](Mask a) { return Rat(multiplicity(x, a)); });
}

// Torsion-free convenience constructor from matrix columns.
inline VectorList list_from_columns(int d, const std::vector<std::vector<Int>>& columns) {
    FGGroup g;
    g.free_rank = d;
    return make_vector_list(g, columns);
}

}  // namespace tutteconv
