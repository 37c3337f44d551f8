#include <catch2/catch_amalgamated.hpp>

#include "tutteconv/convolution.hpp"
#include "tutteconv/delta.hpp"
#include "tutteconv/generators.hpp"
#include "tutteconv/graphs.hpp"

using namespace tutteconv;

namespace {

const BiLaurent X = BiLaurent::var_x();
const BiLaurent Y = BiLaurent::var_y();
const BiLaurent ONE = BiLaurent::one();

LabeledGraph triangle() {
    LabeledGraph g;
    g.n_vertices = 3;
    g.edges = {{0, 1, Int(1), false}, {1, 2, Int(1), false}, {0, 2, Int(1), false}};
    return g;
}

DeltaMatroid pair_delta() {
    return make_delta_matroid({"a", "b"}, {0, full_mask(2)});  // {empty, {a,b}}
}

}  // namespace

TEST_CASE("graph incidence vectors") {
    const RankedSet k3 = build_graphic_matroid(triangle());
    CHECK(k3.rk(k3.full()) == HalfInt(2));
    for (const auto& m : k3.mult) CHECK(m == 1);  // unimodular incidence vectors
    CHECK(aritutte(k3) == tutte(k3));
    // Tutte polynomial of the triangle, frozen: x^2 + x + y.
    CHECK(tutte(k3) == X * X + X + Y);

    LabeledGraph single;
    single.n_vertices = 2;
    single.edges = {{0, 1, Int(3), false}};
    const VectorList x = graph_to_vectorlist(single);
    CHECK(multiplicity(x, bit(0)) == 3);
    CHECK(multiplicity(x, bit(0)) == graph_multiplicity_formula(single, bit(0)));

    LabeledGraph bad;
    bad.n_vertices = 2;
    bad.edges = {{0, 0, Int(1), false}};
    CHECK_THROWS_AS(graph_to_vectorlist(bad), std::invalid_argument);
}

TEST_CASE("orientation choice does not matter") {
    Rng rng(51);
    for (int i = 0; i < 10; ++i) {
        const LabeledGraph g = random_labeled_graph(rng, 5, 6, 4, 2);
        std::vector<bool> flip(g.edges.size());
        for (std::size_t e = 0; e < flip.size(); ++e) flip[e] = draw(rng, 0, 1) == 1;
        const RankedSet a = build_graphic_matroid(g);
        const RankedSet b = build_graphic_matroid(g, &flip);
        CHECK(a.rank == b.rank);
        CHECK(a.mult == b.mult);
    }
}

TEST_CASE("closed multiplicity formula for labeled graphs") {
    LabeledGraph empty_graph;
    empty_graph.n_vertices = 2;
    CHECK(graph_multiplicity_formula(empty_graph, 0) == 1);

    LabeledGraph path;
    path.n_vertices = 3;
    path.edges = {{0, 1, Int(2), false}, {1, 2, Int(3), false}};
    CHECK(graph_multiplicity_formula(path, full_mask(2)) == 6);

    LabeledGraph dotted;
    dotted.n_vertices = 3;
    dotted.edges = {{0, 1, Int(2), false}, {0, 2, Int(3), true}};
    // One regular edge; m({e}) spans the forest {e, dotted}: gcd(2*3) = 6.
    CHECK(graph_multiplicity_formula(dotted, bit(0)) == 6);
    CHECK(multiplicity(graph_to_vectorlist(dotted), bit(0)) == 6);
}

TEST_CASE("graph formula agrees with the group computation everywhere") {
    Rng rng(52);
    for (int i = 0; i < 12; ++i) {
        const LabeledGraph g = random_labeled_graph(rng, 5, 6, 4, 2);
        const VectorList x = graph_to_vectorlist(g);
        const Mask top = full_mask(x.size());
        for_each_subset(top, [&](Mask a) {
            CHECK(multiplicity(x, a) == graph_multiplicity_formula(g, a));
        });
    }
}

TEST_CASE("symmetric exchange") {
    Rng rng(53);
    const VectorList x = random_integer_list(rng, 3, 5, -3, 3);
    const int r = rank_of(x, full_mask(x.size()));
    std::vector<Mask> bases;
    for_each_subset(full_mask(x.size()), [&](Mask b) {
        if (popcount(b) == r && rank_of(x, b) == r) bases.push_back(b);
    });
    DeltaMatroid from_bases{default_labels(x.size()), bases};
    from_bases.canonicalize();
    CHECK(check_symmetric_exchange(from_bases).passed);

    CHECK(check_symmetric_exchange(pair_delta()).passed);

    DeltaMatroid ok{{"a", "b"}, {0, bit(0)}};
    CHECK(check_symmetric_exchange(ok).passed);

    DeltaMatroid broken{{"a", "b", "c"}, {bit(0), bit(1) | bit(2)}};
    broken.canonicalize();
    const AxiomReport rep = check_symmetric_exchange(broken);
    CHECK(!rep.passed);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().axiom == "symmetric-exchange");
    CHECK_THROWS_AS(make_delta_matroid({"a", "b", "c"}, {bit(0), bit(1) | bit(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_delta_matroid({"a"}, {}), std::invalid_argument);
}

TEST_CASE("parity classes") {
    CHECK(is_even(pair_delta()));
    const DeltaMatroid bases = make_delta_matroid({"a", "b"}, {bit(0), bit(1)});
    CHECK(is_even(bases));
    const DeltaMatroid odd = make_delta_matroid({"a", "b"}, {0, bit(0), full_mask(2)});
    CHECK(!is_even(odd));
}

TEST_CASE("delta-matroid rank function") {
    // A matroid's basis family reproduces the matroid rank on every subset.
    Rng rng(54);
    for (int i = 0; i < 8; ++i) {
        const VectorList x = random_integer_list(rng, 3, 5, -3, 3);
        const RankedSet m = build_arithmetic_matroid(x);
        const int r = static_cast<int>(m.rk(m.full()).to_int());
        std::vector<Mask> bases;
        for_each_subset(m.full(), [&](Mask b) {
            if (popcount(b) == r && m.rk(b) == HalfInt(r)) bases.push_back(b);
        });
        const DeltaMatroid d = make_delta_matroid(m.labels, bases);
        for_each_subset(m.full(), [&](Mask a) { CHECK(delta_rank(d, a) == m.rk(a)); });
    }

    const DeltaMatroid p = pair_delta();
    CHECK(delta_rank(p, bit(0)) == HalfInt(0));
    CHECK(delta_rank(p, full_mask(2)) == HalfInt(1));
    CHECK(delta_rank(p, 0) == HalfInt(0));
}

TEST_CASE("bollobas-riordan polynomial") {
    // Matroid case: the ordinary Tutte polynomial.
    const DeltaMatroid u13 = make_delta_matroid({"a", "b", "c"}, {bit(0), bit(1), bit(2)});
    const RankedSet u = make_ranked_set(
        {"a", "b", "c"}, [](Mask a) { return HalfInt(std::min(popcount(a), 1)); },
        [](Mask) { return Rat(1); });
    CHECK(bollobas_riordan(u13) == tutte(u));

    // Frozen four-term sum for {empty, {a,b}}: rho = 0, 0, 0, 1 gives
    // (x-1) + 2(x-1)(y-1) + (y-1) = 2xy - x - y.
    CHECK(bollobas_riordan(pair_delta()) == Rat(2) * (X * Y) - X - Y);

    // Odd delta-matroids stay in the shifted half-integer world.
    const DeltaMatroid odd = make_delta_matroid({"a"}, {0, bit(0)});
    const BiLaurent shifted = bollobas_riordan_shifted(odd);
    CHECK(shifted.coeff(HalfInt::half(), HalfInt(0)) == 1);
    CHECK(shifted.coeff(HalfInt(0), HalfInt::half()) == 1);
    CHECK(shifted.term_count() == 2);
    CHECK_THROWS_AS(bollobas_riordan(odd), NonpolynomialError);
}

TEST_CASE("even delta-matroids satisfy the convolution formula") {
    Rng rng(55);
    for (int i = 0; i < 10; ++i) {
        const DeltaMatroid d = random_even_delta(rng, 6);
        REQUIRE(is_even(d));
        REQUIRE(check_symmetric_exchange(d).passed);
        CHECK(verify_theorem1(to_ranked_set(d)).equal);
    }
}
