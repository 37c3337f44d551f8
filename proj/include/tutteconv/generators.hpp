#pragma once

#include <random>
#include <vector>

#include "tutteconv/abelian.hpp"
#include "tutteconv/delta.hpp"
#include "tutteconv/graphs.hpp"
#include "tutteconv/ranked_set.hpp"

namespace tutteconv {

using Rng = std::mt19937_64;

// Engine-stable bounded draw (modulo bias is irrelevant for test corpora,
// uniform_int_distribution is not bit-stable across standard libraries).
inline long draw(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Arbitrary ranked set with multiplicities: integer ranks with
// rank(empty) = 0, rational multiplicities.  No axioms beyond that.
inline RankedSet random_ranked_set(Rng& rng, int n) {
    std::vector<HalfInt> rank(std::size_t{1} << n);
    std::vector<Rat> mult(std::size_t{1} << n);
    rank[0] = HalfInt(0);
    const Mask top = full_mask(n);
    for (Mask a = 0;; ++a) {
        if (a != 0) rank[a] = HalfInt(Int(draw(rng, -3, 6)));
        mult[a] = Rat(draw(rng, -5, 5), draw(rng, 1, 4));
        if (a == top) break;
    }
    return make_ranked_set(
        default_labels(n), [&](Mask a) { return rank[a]; }, [&](Mask a) { return mult[a]; });
}

// A second multiplicity map on the same ground set and rank map.
inline RankedSet with_random_mult(Rng& rng, const RankedSet& s, bool positive_integer = false) {
    RankedSet r = s;
    for (auto& m : r.mult)
        m = positive_integer ? Rat(draw(rng, 1, 6)) : Rat(draw(rng, -5, 5), draw(rng, 1, 4));
    return r;
}

inline VectorList random_integer_list(Rng& rng, int max_dim, int max_len, long lo, long hi) {
    const int d = static_cast<int>(draw(rng, 1, max_dim));
    const int n = static_cast<int>(draw(rng, 1, max_len));
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < n; ++j) {
        std::vector<Int> v(d);
        for (int i = 0; i < d; ++i) v[i] = Int(draw(rng, lo, hi));
        cols.push_back(std::move(v));
    }
    return list_from_columns(d, cols);
}

// List in a group with torsion: free rank <= 2, invariant factors <= 4.
inline VectorList random_torsion_list(Rng& rng, int max_len) {
    static const std::vector<std::vector<long>> chains = {
        {}, {2}, {3}, {4}, {2, 2}, {2, 4}, {3, 3}, {4, 4}};
    FGGroup g;
    g.free_rank = static_cast<int>(draw(rng, 0, 2));
    const auto& chain = chains[draw(rng, 0, static_cast<long>(chains.size()) - 1)];
    for (long t : chain) g.torsion.push_back(Int(t));
    if (g.dim() == 0) g.free_rank = 1;
    const int n = static_cast<int>(draw(rng, 1, max_len));
    std::vector<std::vector<Int>> vecs;
    for (int j = 0; j < n; ++j) {
        std::vector<Int> v(g.dim());
        for (int i = 0; i < g.dim(); ++i) v[i] = Int(draw(rng, -3, 3));
        vecs.push_back(std::move(v));
    }
    return make_vector_list(std::move(g), std::move(vecs));
}

// Basis family of a random represented matroid, twisted by a random set:
// a random even delta-matroid (twists preserve symmetric exchange and the
// equicardinal start forces a single parity class).
inline DeltaMatroid random_even_delta(Rng& rng, int max_elems) {
    const VectorList x = random_integer_list(rng, 3, max_elems, -2, 2);
    const int n = x.size();
    const Mask top = full_mask(n);
    const int r = rank_of(x, top);
    std::vector<Mask> bases;
    for_each_subset(top, [&](Mask b) {
        if (popcount(b) == r && rank_of(x, b) == r) bases.push_back(b);
    });
    DeltaMatroid d = make_delta_matroid(default_labels(n), std::move(bases));
    return twist(d, static_cast<Mask>(draw(rng, 0, top)));
}

inline LabeledGraph random_labeled_graph(Rng& rng, int max_vertices, int max_edges,
                                         long max_label, int max_dotted) {
    LabeledGraph g;
    g.n_vertices = static_cast<int>(draw(rng, 2, max_vertices));
    const int m = static_cast<int>(draw(rng, 1, max_edges));
    int dotted_left = max_dotted;
    for (int i = 0; i < m; ++i) {
        LabeledGraph::Edge e;
        e.u = static_cast<int>(draw(rng, 0, g.n_vertices - 1));
        do {
            e.v = static_cast<int>(draw(rng, 0, g.n_vertices - 1));
        } while (e.v == e.u);
        e.label = Int(draw(rng, 1, max_label));
        if (dotted_left > 0 && draw(rng, 0, 3) == 0) {
            e.dotted = true;
            --dotted_left;
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[draw(rng, 0, i)]);
    return p;
}

}  // namespace tutteconv
