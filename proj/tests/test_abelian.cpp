#include <catch2/catch_amalgamated.hpp>

#include "tutteconv/abelian.hpp"
#include "tutteconv/axioms.hpp"
#include "tutteconv/generators.hpp"

using namespace tutteconv;

namespace {

IMat random_matrix(Rng& rng, int max_r, int max_c, long lo, long hi) {
    const int r = static_cast<int>(draw(rng, 1, max_r));
    const int c = static_cast<int>(draw(rng, 1, max_c));
    IMat m = zero_mat(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = Int(draw(rng, lo, hi));
    return m;
}

void check_snf_postconditions(const IMat& a) {
    const SNFResult s = snf(a);
    // U A V = D by exact multiplication.
    const IMat lhs = mat_mul(mat_mul(s.u, a), s.v);
    REQUIRE(rows(lhs) == rows(s.d));
    for (std::size_t i = 0; i < rows(lhs); ++i)
        for (std::size_t j = 0; j < cols(lhs); ++j) {
            CHECK(lhs[i][j] == s.d[i][j]);
            if (i != j) CHECK(s.d[i][j] == 0);
        }
    CHECK(abs(det_bareiss(s.u)) == 1);
    CHECK(abs(det_bareiss(s.v)) == 1);
    // Divisibility chain with trailing zeros.
    bool seen_zero = false;
    for (std::size_t t = 0; t < s.diagonal.size(); ++t) {
        CHECK(s.diagonal[t] >= 0);
        if (s.diagonal[t] == 0) seen_zero = true;
        if (seen_zero) CHECK(s.diagonal[t] == 0);
        if (t + 1 < s.diagonal.size() && s.diagonal[t + 1] != 0)
            CHECK(s.diagonal[t + 1] % s.diagonal[t] == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
    const SNFResult id = snf(identity_mat(3));
    CHECK(id.diagonal == std::vector<Int>{1, 1, 1});

    const SNFResult d23 = snf(IMat{{2, 0}, {0, 3}});
    CHECK(d23.diagonal == std::vector<Int>{1, 6});

    const SNFResult zero = snf(zero_mat(2, 3));
    CHECK(zero.diagonal == std::vector<Int>{0, 0});
    CHECK(zero.u == identity_mat(2));
    CHECK(zero.v == identity_mat(3));
    CHECK(zero.rank == 0);
}

TEST_CASE("smith normal form postconditions on random matrices") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) check_snf_postconditions(random_matrix(rng, 5, 5, -9, 9));
    check_snf_postconditions(IMat{{4, 6, 10}, {6, 12, 18}});
    check_snf_postconditions(IMat{{0, 0}, {0, 0}, {0, 0}});
}

TEST_CASE("rank of sublists") {
    const VectorList x = list_from_columns(2, {{2, 0}, {-1, 1}, {4, 0}});
    CHECK(rank_of(x, 0) == 0);
    CHECK(rank_of(x, bit(0) | bit(1)) == 2);
    CHECK(rank_of(x, bit(0) | bit(2)) == 1);  // parallel vectors
    CHECK_THROWS_AS(rank_of(x, bit(5)), std::invalid_argument);
}

TEST_CASE("multiplicity through the quotient torsion") {
    const VectorList free2 = list_from_columns(2, {{2, 0}, {0, 3}});
    CHECK(multiplicity(free2, 0) == 1);
    CHECK(multiplicity(free2, full_mask(2)) == 6);

    const VectorList ex = list_from_columns(2, {{2, 0}, {-1, 1}, {1, 1}});
    CHECK(multiplicity(ex, full_mask(3)) == 2);
    Int lcm_bases = 1;
    for_each_subset(full_mask(3), [&](Mask b) {
        if (popcount(b) == 2 && rank_of(ex, b) == 2) {
            CHECK(multiplicity(ex, b) == 2);
            lcm_bases = lcm(lcm_bases, multiplicity(ex, b));
        }
    });
    CHECK(lcm_bases == 2);
}

TEST_CASE("gcd of minors") {
    const VectorList id2 = list_from_columns(2, {{1, 0}, {0, 1}});
    CHECK(gcd_minors(id2, full_mask(2)) == 1);
    const VectorList d23 = list_from_columns(2, {{2, 0}, {0, 3}});
    CHECK(gcd_minors(d23, full_mask(2)) == 6);
    const VectorList single = list_from_columns(2, {{2, 0}});
    CHECK(gcd_minors(single, bit(0)) == 2);

    const VectorList dep = list_from_columns(2, {{2, 0}, {4, 0}});
    CHECK_THROWS_AS(gcd_minors(dep, full_mask(2)), std::invalid_argument);

    FGGroup g;
    g.free_rank = 1;
    g.torsion = {Int(2)};
    const VectorList torsion = make_vector_list(g, {{1, 1}});
    CHECK_THROWS_AS(gcd_minors(torsion, bit(0)), std::invalid_argument);
}

TEST_CASE("multiplicity via maximal independent subsets") {
    const VectorList dep = list_from_columns(2, {{2, 0}, {4, 0}});
    CHECK(multiplicity_via_bases(dep, full_mask(2)) == 2);  // gcd(2, 4)
    CHECK(multiplicity_via_bases(dep, full_mask(2)) == multiplicity(dep, full_mask(2)));

    const VectorList ex = list_from_columns(2, {{2, 0}, {-1, 1}, {1, 1}});
    CHECK(multiplicity_via_bases(ex, full_mask(3)) == 2);  // gcd(2, 2, 2)
}

TEST_CASE("multiplicity agreements on a random corpus") {
    Rng rng(42);
    for (int i = 0; i < 25; ++i) {
        const VectorList x = random_integer_list(rng, 4, 7, -5, 5);
        const Mask top = full_mask(x.size());
        for_each_subset(top, [&](Mask a) {
            CHECK(multiplicity(x, a) == multiplicity_via_bases(x, a));
            if (rank_of(x, a) == popcount(a))
                CHECK(multiplicity(x, a) == gcd_minors(x, a));
        });
    }
}

TEST_CASE("quotient presentations") {
    const VectorList z2 = list_from_columns(2, {{2, 0}, {1, 1}});

    const Quotient trivial = quotient(z2, 0);
    CHECK(trivial.group.free_rank == 2);
    CHECK(trivial.group.torsion.empty());

    const Quotient mod2 = quotient(z2, bit(0));
    CHECK(mod2.group.free_rank == 1);
    REQUIRE(mod2.group.torsion.size() == 1);
    CHECK(mod2.group.torsion[0] == 2);

    const VectorList basis = list_from_columns(2, {{1, 0}, {0, 1}});
    const Quotient none = quotient(basis, full_mask(2));
    CHECK(none.group.free_rank == 0);
    CHECK(none.group.torsion.empty());

    // The projection is a homomorphism killing exactly the subgroup.
    Rng rng(43);
    for (int i = 0; i < 10; ++i) {
        const VectorList x = random_integer_list(rng, 3, 4, -4, 4);
        const Mask a = static_cast<Mask>(draw(rng, 0, full_mask(x.size())));
        const Quotient q = quotient(x, a);
        for (int j : elements_of(a)) {
            const auto image = q.project(x.vectors[j]);
            for (const auto& c : image) CHECK(c == 0);
        }
    }
}

TEST_CASE("list restriction and contraction") {
    const VectorList ex = list_from_columns(2, {{2, 0}, {-1, 1}, {1, 1}});
    const VectorList same = contract_list(ex, 0);
    CHECK(same.group == ex.group);
    CHECK(same.vectors == ex.vectors);

    const VectorList contracted = contract_list(ex, bit(0));
    CHECK(contracted.group.free_rank == 1);
    REQUIRE(contracted.group.torsion.size() == 1);
    CHECK(contracted.group.torsion[0] == 2);
    CHECK(contracted.size() == 2);

    CHECK(restrict_list(ex, bit(1)).vectors == std::vector<std::vector<Int>>{{-1, 1}});
}

TEST_CASE("building commutes with restriction and contraction") {
    Rng rng(44);
    for (int i = 0; i < 12; ++i) {
        const VectorList x = random_integer_list(rng, 3, 6, -4, 4);
        const Mask a = static_cast<Mask>(draw(rng, 0, full_mask(x.size())));
        const RankedSet direct = build_arithmetic_matroid(x);

        const RankedSet restricted = build_arithmetic_matroid(restrict_list(x, a));
        const RankedSet expect_r = restrict_to(direct, a);
        CHECK(restricted.rank == expect_r.rank);
        CHECK(restricted.mult == expect_r.mult);

        const RankedSet contracted = build_arithmetic_matroid(contract_list(x, a));
        const RankedSet expect_c = contract(direct, a);
        CHECK(contracted.rank == expect_c.rank);
        CHECK(contracted.mult == expect_c.mult);
    }
}

TEST_CASE("represented arithmetic matroids") {
    const RankedSet ex = build_arithmetic_matroid(list_from_columns(2, {{2, 0}, {-1, 1}, {1, 1}}));
    CHECK(ex.rk(ex.full()) == HalfInt(2));
    CHECK(ex.m(0) == 1);
    CHECK(ex.m(bit(0)) == 2);
    CHECK(ex.m(bit(1)) == 1);
    CHECK(ex.m(bit(2)) == 1);
    CHECK(ex.m(ex.full()) == 2);

    const Classification c = classify(ex);
    CHECK(c.arithmetic);

    // Unimodular lists have trivial multiplicities everywhere.
    const RankedSet uni = build_arithmetic_matroid(list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}}));
    for (const auto& m : uni.mult) CHECK(m == 1);
    CHECK(aritutte(uni) == tutte(uni));

    // Basis multiplicities (1,1,1,1,1,2) for the uniform example.
    const RankedSet u =
        build_arithmetic_matroid(list_from_columns(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
    std::vector<Int> basis_mults;
    for_each_subset(u.full(), [&](Mask b) {
        if (popcount(b) == 2 && u.rk(b) == HalfInt(2)) basis_mults.push_back(num(u.m(b)));
    });
    std::sort(basis_mults.begin(), basis_mults.end());
    CHECK(basis_mults == std::vector<Int>{1, 1, 1, 1, 1, 2});
}

TEST_CASE("represented matroids satisfy all axiom systems") {
    Rng rng(45);
    for (int i = 0; i < 10; ++i) {
        const RankedSet m = build_arithmetic_matroid(random_integer_list(rng, 4, 6, -5, 5));
        CHECK(check_P(m).passed);
        CHECK(check_A1(m).passed);
        CHECK(check_A2(m).passed);
    }
}

TEST_CASE("torsion groups") {
    // Z + Z/2, with the torsion relation folded into every computation.
    FGGroup g;
    g.free_rank = 1;
    g.torsion = {Int(2)};
    const VectorList x = make_vector_list(g, {{2, 1}, {0, 1}});
    CHECK(rank_of(x, bit(0)) == 1);
    CHECK(rank_of(x, bit(1)) == 0);       // pure torsion element
    CHECK(multiplicity(x, 0) == 2);       // torsion of the ambient group
    CHECK(multiplicity(x, bit(1)) == 1);  // quotient by the torsion part

    FGGroup bad;
    bad.free_rank = 1;
    bad.torsion = {Int(3), Int(2)};  // not a divisibility chain
    CHECK_THROWS_AS(make_vector_list(bad, {{0, 0, 0}}), std::invalid_argument);
}
