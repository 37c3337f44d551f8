#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "tutteconv/abelian.hpp"

namespace tutteconv {

// Multigraph with positive integer edge labels and no loops; edges are
// partitioned into regular and dotted ones.
struct LabeledGraph {
    struct Edge {
        int u = 0, v = 0;
        Int label = 1;
        bool dotted = false;
    };

    int n_vertices = 0;
    std::vector<Edge> edges;

    void validate() const {
        if (n_vertices <= 0) throw std::invalid_argument("graph needs at least one vertex");
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n_vertices || e.v >= n_vertices)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
            if (e.label < 1) throw std::invalid_argument("edge labels must be positive");
        }
    }

    std::vector<int> regular_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!edges[i].dotted) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> dotted_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].dotted) out.push_back(static_cast<int>(i));
        return out;
    }
};

namespace detail {
// Incidence vector of one edge under the chosen orientation: -label at the
// tail, +label at the head.  Default orientation points from the lower
// vertex index to the higher one.
inline std::vector<Int> edge_vector(const LabeledGraph& g, const LabeledGraph::Edge& e,
                                    bool flip) {
    std::vector<Int> v(g.n_vertices, 0);
    int tail = std::min(e.u, e.v), head = std::max(e.u, e.v);
    if (flip) std::swap(tail, head);
    v[tail] = -e.label;
    v[head] = e.label;
    return v;
}
}  // namespace detail

// The list of regular-edge vectors projected into G = Z^n / <dotted edges>.
// `flip` optionally reverses the default orientation per edge (indexed like
// g.edges); the resulting arithmetic matroid does not depend on it.
inline VectorList graph_to_vectorlist(const LabeledGraph& g,
                                      const std::vector<bool>* flip = nullptr) {
    g.validate();
    if (flip && flip->size() != g.edges.size())
        throw std::invalid_argument("orientation flags must match the edge count");
    FGGroup zn;
    zn.free_rank = g.n_vertices;
    VectorList ambient{zn, {}};
    for (int i : g.dotted_indices())
        ambient.vectors.push_back(
            detail::edge_vector(g, g.edges[i], flip && (*flip)[i]));
    const Quotient q = quotient(ambient, full_mask(ambient.size()));
    VectorList out;
    out.group = q.group;
    for (int i : g.regular_indices())
        out.vectors.push_back(q.project(detail::edge_vector(g, g.edges[i], flip && (*flip)[i])));
    return out;
}

namespace detail {
// Rank of an edge subset in the graphic matroid: n - #components.
inline int graphic_rank(const LabeledGraph& g, const std::vector<int>& edge_idx) {
    std::vector<int> parent(g.n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int rank = 0;
    for (int i : edge_idx) {
        const int ru = find(g.edges[i].u), rv = find(g.edges[i].v);
        if (ru != rv) {
            parent[ru] = rv;
            ++rank;
        }
    }
    return rank;
}
}  // namespace detail

// Closed form for the graphic arithmetic matroid multiplicity:
// m(A) = gcd over maximal forests T of A u D of prod_{e in T} label(e).
// `a` selects among the regular edges (mask over regular_indices()).
inline Int graph_multiplicity_formula(const LabeledGraph& g, Mask a) {
    g.validate();
    const auto regular = g.regular_indices();
    if (!is_subset(a, full_mask(static_cast<int>(regular.size()))))
        throw std::invalid_argument("subset outside the regular edge set");
    std::vector<int> pool = g.dotted_indices();
    for (int j : elements_of(a)) pool.push_back(regular[j]);
    const int target = detail::graphic_rank(g, pool);

    Int acc = 0;
    const Mask top = full_mask(static_cast<int>(pool.size()));
    for_each_subset(top, [&](Mask t) {
        if (popcount(t) != target) return;
        std::vector<int> chosen;
        for (int j : elements_of(t)) chosen.push_back(pool[j]);
        if (detail::graphic_rank(g, chosen) != target) return;  // not a forest
        Int prod = 1;
        for (int i : chosen) prod *= g.edges[i].label;
        acc = gcd(acc, prod);
    });
    return acc == 0 ? Int(1) : acc;  // empty pool: empty product
}

// The graphic arithmetic matroid itself, with ground labels naming the
// regular edges.
inline RankedSet build_graphic_matroid(const LabeledGraph& g,
                                       const std::vector<bool>* flip = nullptr) {
    const VectorList x = graph_to_vectorlist(g, flip);
    std::vector<std::string> labels;
    for (int i : g.regular_indices()) labels.push_back("e" + std::to_string(i));
    return build_arithmetic_matroid(x, labels);
}

}  // namespace tutteconv
