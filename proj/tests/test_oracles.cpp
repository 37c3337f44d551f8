#include <catch2/catch_amalgamated.hpp>

#include "tutteconv/flows.hpp"
#include "tutteconv/generators.hpp"
#include "tutteconv/zonotope.hpp"

using namespace tutteconv;

namespace {

VectorList example_list() {
    return list_from_columns(2, {{2, 0}, {-1, 1}, {1, 1}});
}
VectorList unit_square() {
    return list_from_columns(2, {{1, 0}, {0, 1}});
}
VectorList box21() {
    return list_from_columns(2, {{2, 0}, {0, 1}});
}

// Exact Lagrange interpolation through (xs[i], ys[i]).
Rat lagrange_eval(const std::vector<Rat>& xs, const std::vector<Rat>& ys, const Rat& at) {
    Rat acc = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rat term = ys[i];
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term *= (at - xs[j]) / (xs[i] - xs[j]);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("zonotope h-representation") {
    const ZonotopeHRep square = zonotope_hrep(unit_square());
    CHECK(square.rank == 2);
    CHECK(square.normals.size() == 2);  // two normals, four facet inequalities

    const ZonotopeHRep box = zonotope_hrep(box21());
    CHECK(box.normals.size() == 2);
    // Each vertex of the box satisfies the inequalities, the center strictly.
    CHECK(box.contains({Int(0), Int(0)}, false));
    CHECK(box.contains({Int(2), Int(1)}, false));
    CHECK(!box.contains({Int(3), Int(0)}, false));
    CHECK(box.contains({Int(1), Int(0)}, false));
    CHECK(!box.contains({Int(1), Int(0)}, true));

    const ZonotopeHRep hexagon = zonotope_hrep(list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(hexagon.normals.size() == 3);  // six facets

    FGGroup g;
    g.free_rank = 1;
    g.torsion = {Int(2)};
    CHECK_THROWS_AS(zonotope_hrep(make_vector_list(g, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("lattice point counts") {
    CHECK(count_lattice_points(unit_square(), false) == 4);
    CHECK(count_lattice_points(unit_square(), true) == 0);

    CHECK(count_lattice_points(box21(), false) == 6);
    const RankedSet box = build_arithmetic_matroid(box21());
    CHECK(Rat(count_lattice_points(box21(), false)) == aritutte(box).eval(2, 1));

    // The running example: a hexagon with 11 lattice points, 3 interior.
    const RankedSet ex = build_arithmetic_matroid(example_list());
    CHECK(count_lattice_points(example_list(), false) == 11);
    CHECK(Rat(11) == aritutte(ex).eval(2, 1));
    CHECK(count_lattice_points(example_list(), true) == 3);
    CHECK(Rat(3) == aritutte(ex).eval(0, 1));

    // Degenerate: a rank-one segment inside the plane and the origin alone.
    const VectorList segment = list_from_columns(2, {{2, 4}});
    CHECK(count_lattice_points(segment, false) == 3);  // (0,0), (1,2), (2,4)
    CHECK(count_lattice_points(segment, true) == 1);
    const VectorList zero = list_from_columns(2, {{0, 0}});
    CHECK(count_lattice_points(zero, false) == 1);
    CHECK(count_lattice_points(zero, true) == 1);
}

TEST_CASE("lattice counts match the polynomial on a random corpus") {
    Rng rng(61);
    for (int i = 0; i < 15; ++i) {
        const VectorList x = random_integer_list(rng, 3, 6, -3, 3);
        const RankedSet m = build_arithmetic_matroid(x);
        const BiLaurent ari = aritutte_shifted(m);
        CHECK(Rat(count_lattice_points(x, false)) == ari.eval(1, 0));
        CHECK(Rat(count_lattice_points(x, true)) == ari.eval(-1, 0));
    }
}

TEST_CASE("face decomposition of the lattice count") {
    const auto square = verify_face_decomposition(unit_square());
    CHECK(square.equal);
    CHECK(square.flats_sum == 4);  // the four flats contribute 1 each

    const auto box = verify_face_decomposition(box21());
    CHECK(box.equal);
    CHECK(box.direct_count == 6);

    const auto zero = verify_face_decomposition(list_from_columns(2, {{0, 0}}));
    CHECK(zero.equal);
    CHECK(zero.direct_count == 1);

    Rng rng(62);
    for (int i = 0; i < 10; ++i)
        CHECK(verify_face_decomposition(random_integer_list(rng, 3, 6, -3, 3)).equal);
}

TEST_CASE("ehrhart coefficients") {
    CHECK(ehrhart(unit_square()) == std::vector<Rat>{1, 2, 1});
    CHECK(ehrhart(box21()) == std::vector<Rat>{1, 3, 2});
    CHECK(ehrhart(list_from_columns(2, {})) == std::vector<Rat>{1});

    // Dilate oracle at q = 1, 2, 3: |Z(qX) n Z^d| = E(q).
    Rng rng(63);
    for (int i = 0; i < 10; ++i) {
        const VectorList x = random_integer_list(rng, 3, 6, -3, 3);
        const auto e = ehrhart(x);
        for (long q = 1; q <= 3; ++q)
            CHECK(Rat(count_lattice_points(scale_list(x, Int(q)), false)) ==
                  eval_poly(e, Rat(q)));
    }

    // The dilate counts pin the Ehrhart relation to E(q) = q^rank *
    // aritutte(1 + 1/q, 1): the rank exponent, not the list length.
    const VectorList x = box21();
    const RankedSet m = build_arithmetic_matroid(x);
    for (long q = 1; q <= 3; ++q) {
        const Rat count(count_lattice_points(scale_list(x, Int(q)), false));
        const Rat value = aritutte(m).eval(1 + Rat(1, q), 1);
        CHECK(count == pow_rat(Rat(q), Int(2)) * value);        // rank(X) = 2
        CHECK(count != pow_rat(Rat(q), Int(x.size())) * value);  // |X| = 2 equals rank here
    }
    const VectorList with_loop = list_from_columns(2, {{2, 0}, {0, 1}, {0, 0}});
    const RankedSet ml = build_arithmetic_matroid(with_loop);
    for (long q = 2; q <= 3; ++q) {
        const Rat count(count_lattice_points(scale_list(with_loop, Int(q)), false));
        CHECK(count == pow_rat(Rat(q), Int(2)) * aritutte(ml).eval(1 + Rat(1, q), 1));
        CHECK(count != pow_rat(Rat(q), Int(3)) * aritutte(ml).eval(1 + Rat(1, q), 1));
    }
}

TEST_CASE("admissible modulus classes") {
    const QSets qs = qsets(example_list());
    CHECK(qs.lcm_x == 2);
    for (long q = 1; q <= 8; ++q) {
        CHECK(qs.in_zm(Int(q)) == (q % 2 == 1));
        CHECK(qs.in_za(Int(q)) == (q % 2 == 0));
    }

    const QSets uni = qsets(list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(uni.lcm_x == 1);
    for (long q = 1; q <= 8; ++q) {
        CHECK(uni.in_zm(Int(q)));
        CHECK(uni.in_za(Int(q)));
    }

    const QSets d23 = qsets(list_from_columns(2, {{2, 0}, {0, 3}}));
    CHECK(d23.lcm_x == 6);
    CHECK(d23.in_za(6));
    CHECK(d23.in_za(12));
    CHECK(!d23.in_za(2));
    CHECK(!d23.in_za(3));
    CHECK(!d23.in_zm(2));
    CHECK(d23.in_zm(5));
}

TEST_CASE("coloring counts") {
    std::vector<std::vector<Int>> witnesses;
    CHECK(count_colorings(example_list(), 3, &witnesses) == 2);
    REQUIRE(witnesses.size() == 2);
    CHECK(witnesses[0] == std::vector<Int>{1, 0});
    CHECK(witnesses[1] == std::vector<Int>{2, 0});

    CHECK(count_colorings(example_list(), 2) == 0);  // q^2 - 4q + 4 at q = 2

    // No constraints: every homomorphism is proper.
    FGGroup g;
    g.free_rank = 1;
    g.torsion = {Int(2)};
    const VectorList empty_x = make_vector_list(g, {});
    CHECK(count_colorings(empty_x, 4) == 8);  // 4 * gcd(2,4)
    CHECK(count_colorings(empty_x, 3) == 3);  // 3 * gcd(2,3)

    CHECK_THROWS_AS(count_colorings(example_list(), 0), std::invalid_argument);
}

TEST_CASE("flow counts") {
    std::vector<std::vector<Int>> witnesses;
    CHECK(count_flows(example_list(), 3, &witnesses) == 2);
    REQUIRE(witnesses.size() == 2);
    CHECK(witnesses[0] == std::vector<Int>{1, 1, 2});
    CHECK(witnesses[1] == std::vector<Int>{2, 2, 1});

    CHECK(count_flows(example_list(), 2) == 1);  // 2q - 3 at q = 2

    // A zero vector is assigned freely: q - 1 choices.
    const VectorList zero = list_from_columns(1, {{0}});
    CHECK(count_flows(zero, 3) == 2);
    const VectorList zero_and_basis = list_from_columns(1, {{0}, {1}});
    // psi((1)) must be 0 mod q, impossible; the zero column cannot help.
    CHECK(count_flows(zero_and_basis, 3) == 0);

    CHECK(count_flows(list_from_columns(1, {}), 5) == 1);  // the empty flow
    CHECK_THROWS_AS(count_flows(zero, -1), std::invalid_argument);
}

TEST_CASE("flow and coloring polynomials on the running example") {
    // chi on Z_A is q^2-4q+4, on Z_M is q^2-3q+2; chi* is 2q-3 and q-1.
    for (long q = 1; q <= 7; ++q) {
        const auto rep = verify_theorem6(example_list(), Int(q));
        REQUIRE(rep.applicable);
        CHECK(rep.equal);
        const Rat qr(q);
        if (q % 2 == 0) {
            CHECK(Rat(rep.chi_count) == qr * qr - 4 * qr + 4);
            CHECK(Rat(rep.chistar_count) == 2 * qr - 3);
        } else {
            CHECK(Rat(rep.chi_count) == qr * qr - 3 * qr + 2);
            CHECK(Rat(rep.chistar_count) == qr - 1);
        }
    }
}

TEST_CASE("theorem 6 on a torsion-inclusive corpus") {
    Rng rng(64);
    int applicable_seen = 0;
    for (int i = 0; i < 12; ++i) {
        const VectorList x = random_torsion_list(rng, 4);
        for (long q = 1; q <= 8; ++q) {
            const auto rep = verify_theorem6(x, Int(q));
            if (!rep.applicable) continue;
            ++applicable_seen;
            CHECK(rep.equal);
        }
    }
    CHECK(applicable_seen > 0);

    // Unimodular lists: both classes apply at every q and agree.
    const VectorList uni = list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}});
    for (long q = 1; q <= 5; ++q) {
        const auto rep = verify_theorem6(uni, Int(q));
        CHECK(rep.in_za);
        CHECK(rep.in_zm);
        CHECK(rep.equal);
        CHECK(rep.chi_poly_za == rep.chi_poly_zm);
    }
}

TEST_CASE("counting functions interpolate to polynomials on each class") {
    const VectorList x = example_list();
    const int rank_g = x.group.free_rank;
    const int corank = x.size() - rank_of(x, full_mask(x.size()));

    // chi on Z_A: degree <= rank(G); fit on the first points, check held out.
    std::vector<Rat> xs, ys;
    for (long q = 2; static_cast<int>(xs.size()) < rank_g + 1; q += 2) {
        xs.emplace_back(q);
        ys.emplace_back(count_colorings(x, Int(q)));
    }
    CHECK(lagrange_eval(xs, ys, 8) == Rat(count_colorings(x, 8)));

    // chi* on Z_M: degree <= |X| - rank(X).
    xs.clear();
    ys.clear();
    for (long q = 1; static_cast<int>(xs.size()) < corank + 1; q += 2) {
        xs.emplace_back(q);
        ys.emplace_back(count_flows(x, Int(q)));
    }
    CHECK(lagrange_eval(xs, ys, 9) == Rat(count_flows(x, 9)));
}

TEST_CASE("squared-multiplicity convolution (corollary 7)") {
    const auto rep = verify_corollary7(example_list(), 2, 2);
    REQUIRE(rep.applicable);
    CHECK(rep.equal);

    const auto box = verify_corollary7(box21(), 2, 2);
    REQUIRE(box.applicable);
    CHECK(box.equal);

    // Unimodular: aritutte = tutte and the identity reduces to the
    // classical convolution at the evaluation point.
    const auto uni = verify_corollary7(list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}}), 3, 2);
    REQUIRE(uni.applicable);
    CHECK(uni.equal);

    const auto na = verify_corollary7(example_list(), 3, 2);  // 3 odd: not in Z_A
    CHECK(!na.applicable);
    CHECK(!na.not_applicable_reason.empty());
}

TEST_CASE("mixed-class convolution (corollary 8)") {
    const auto ex23 = verify_corollary8(example_list(), 2, 3);
    REQUIRE(ex23.applicable);
    CHECK(ex23.equal);

    const auto ex32 = verify_corollary8(example_list(), 3, 2);
    REQUIRE(ex32.applicable);
    CHECK(ex32.equal);

    const auto uni = verify_corollary8(list_from_columns(2, {{1, 0}, {0, 1}}), 4, 5);
    REQUIRE(uni.applicable);
    CHECK(uni.equal);

    const auto na = verify_corollary8(example_list(), 3, 5);  // both odd: no ordering fits
    CHECK(!na.applicable);
}

TEST_CASE("corollaries hold across the torsion corpus where admissible") {
    Rng rng(65);
    int seen7 = 0, seen8 = 0;
    for (int i = 0; i < 8; ++i) {
        const VectorList x = random_torsion_list(rng, 3);
        for (long p = 1; p <= 6; ++p)
            for (long q = 1; q <= 6; ++q) {
                const auto rep7 = verify_corollary7(x, Int(p), Int(q));
                if (rep7.applicable) {
                    ++seen7;
                    CHECK(rep7.equal);
                }
                const auto rep8 = verify_corollary8(x, Int(p), Int(q));
                if (rep8.applicable) {
                    ++seen8;
                    CHECK(rep8.equal);
                }
            }
    }
    CHECK(seen7 > 0);
    CHECK(seen8 > 0);
}
