#pragma once

#include <set>
#include <vector>

#include "tutteconv/abelian.hpp"
#include "tutteconv/ranked_set.hpp"
#include "tutteconv/snf.hpp"

namespace tutteconv {

// H-representation of the zonotope Z(X) = { sum lambda_i x_i : 0 <= lambda_i <= 1 },
// reduced to exact coordinates on the lattice of its linear span.  Every
// normal eta contributes the support bounds
//   sum_i min(0, eta . y_i)  <=  eta . p  <=  sum_i max(0, eta . y_i),
// and the facet normals (kernels of corank-one generator subsets) make the
// intersection exact.
struct ZonotopeHRep {
    int ambient_dim = 0;
    int rank = 0;                        // dimension of the span
    IMat span_basis;                     // ambient_dim x rank; lattice basis of span
    std::vector<std::vector<Int>> reduced_generators;  // rank-dim images y_i
    std::vector<std::vector<Int>> normals;              // primitive, deduplicated
    std::vector<Int> lower, upper;                      // per normal

    bool contains(const std::vector<Int>& p, bool strict) const {
        for (std::size_t k = 0; k < normals.size(); ++k) {
            Int dot = 0;
            for (int j = 0; j < rank; ++j) dot += normals[k][j] * p[j];
            if (strict ? (dot <= lower[k] || dot >= upper[k])
                       : (dot < lower[k] || dot > upper[k]))
                return false;
        }
        return true;
    }
};

inline ZonotopeHRep zonotope_hrep(const VectorList& x) {
    if (!x.group.torsion_free())
        throw std::invalid_argument("zonotopes are defined for torsion-free lists only");
    const int d = x.group.free_rank;
    const int n = x.size();
    ZonotopeHRep z;
    z.ambient_dim = d;

    IMat gen = zero_mat(d, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i) gen[i][j] = x.vectors[j][i];
    const SNFResult s = snf(gen);
    z.rank = s.rank;
    const int r = z.rank;

    // Lattice basis of span(X) n Z^d: the first r columns of U^{-1}.
    const IMat uinv = inverse_unimodular(s.u);
    z.span_basis = zero_mat(d, r);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j) z.span_basis[i][j] = uinv[i][j];

    // Generators in span coordinates: the first r entries of U x_j.
    for (int j = 0; j < n; ++j) {
        std::vector<Int> y(r, 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < d; ++k) y[i] += s.u[i][k] * x.vectors[j][k];
        z.reduced_generators.push_back(std::move(y));
    }

    if (r == 0) return z;

    // One normal per corank-one subset of the generators.
    std::set<std::vector<Int>> seen;
    const Mask top = full_mask(n);
    for_each_subset(top, [&](Mask sub) {
        if (popcount(sub) != r - 1) return;
        IMat rowvecs;
        for (int j : elements_of(sub)) rowvecs.push_back(z.reduced_generators[j]);
        std::vector<Int> eta;
        try {
            eta = primitive_kernel_vector(rowvecs, r);
        } catch (const std::invalid_argument&) {
            return;  // subset spans less than r-1 dimensions
        }
        if (!seen.insert(eta).second) return;
        Int lo = 0, hi = 0;
        for (const auto& y : z.reduced_generators) {
            Int dot = 0;
            for (int j = 0; j < r; ++j) dot += eta[j] * y[j];
            if (dot > 0)
                hi += dot;
            else
                lo += dot;
        }
        z.normals.push_back(std::move(eta));
        z.lower.push_back(std::move(lo));
        z.upper.push_back(std::move(hi));
    });
    return z;
}

// Exact count of lattice points of Z(X); with `interior`, of the relative
// interior within the affine span.  Enumerates the integer points of the
// reduced bounding box and tests the H-representation.
inline Int count_lattice_points(const VectorList& x, bool interior) {
    const ZonotopeHRep z = zonotope_hrep(x);
    if (z.rank == 0) return 1;  // Z(X) = {0}
    const int r = z.rank;

    std::vector<Int> lo(r, 0), hi(r, 0);
    for (const auto& y : z.reduced_generators)
        for (int j = 0; j < r; ++j) {
            if (y[j] > 0) hi[j] += y[j];
            if (y[j] < 0) lo[j] += y[j];
        }

    Int box = 1;
    for (int j = 0; j < r; ++j) box *= hi[j] - lo[j] + 1;
    if (box > 50'000'000)
        throw ResourceError("zonotope bounding box has more than 5*10^7 lattice points");

    Int count = 0;
    std::vector<Int> p(lo);
    while (true) {
        if (z.contains(p, interior)) ++count;
        int j = 0;
        while (j < r) {
            if (p[j] < hi[j]) {
                ++p[j];
                break;
            }
            p[j] = lo[j];
            ++j;
        }
        if (j == r) break;
    }
    return count;
}

// Ehrhart polynomial of Z(X) as exact coefficients by ascending power:
// coefficient k is the total multiplicity of the independent k-subsets.
inline std::vector<Rat> ehrhart(const VectorList& x) {
    if (!x.group.torsion_free())
        throw std::invalid_argument("Ehrhart counting is defined for torsion-free lists only");
    const int r = rank_of(x, full_mask(x.size()));
    std::vector<Rat> coeffs(r + 1, Rat(0));
    for_each_subset(full_mask(x.size()), [&](Mask a) {
        const int k = popcount(a);
        if (k <= r && rank_of(x, a) == k) coeffs[k] += Rat(multiplicity(x, a));
    });
    return coeffs;
}

inline Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& q) {
    Rat acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * q + coeffs[i];
    return acc;
}

// A is a flat iff M/A has no loop, i.e. every outside element raises the rank.
inline bool is_flat(const RankedSet& s, Mask a) {
    for (int e = 0; e < s.n(); ++e)
        if (!contains(a, e) && s.rk(a | bit(e)) == s.rk(a)) return false;
    return true;
}

// Face-count decomposition of |Z(X) n Z^d|:
//   aritutte(2,1) = sum over all subsets of aritutte(M|_A)(0,1) tutte(M/A)(2,0)
//                 = the same sum over flats only
//                 = the direct lattice-point count.
struct FaceDecompositionReport {
    Int direct_count = 0;
    Rat aritutte_21;
    Rat all_subsets_sum;
    Rat flats_sum;
    bool equal = false;
};

inline FaceDecompositionReport verify_face_decomposition(const VectorList& x) {
    const RankedSet m = build_arithmetic_matroid(x);
    FaceDecompositionReport rep;
    rep.direct_count = count_lattice_points(x, false);
    rep.aritutte_21 = aritutte_shifted(m).eval(1, 0);  // aritutte(2, 1)
    Rat all = 0, flats = 0;
    const Mask top = m.full();
    for (Mask a = 0;; ++a) {
        const Rat term = aritutte_shifted(restrict_to(m, a)).eval(-1, 0) *
                         tutte_shifted(contract(m, a)).eval(1, -1);
        all += term;
        if (is_flat(m, a)) flats += term;
        if (a == top) break;
    }
    rep.all_subsets_sum = all;
    rep.flats_sum = flats;
    rep.equal = rep.aritutte_21 == all && all == flats && flats == Rat(rep.direct_count);
    return rep;
}

}  // namespace tutteconv
