#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "lagtori/braid.hpp"
#include "lagtori/family.hpp"
#include "oracle.hpp"

using namespace lagtori;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(strands, std::move(letters));
}

}  // namespace

TEST_CASE("compose concatenates without reducing") {
    BraidWord a(2, {1});
    BraidWord b(2, {-1});
    CHECK(compose(a, b).letters() == std::vector<int>{1, -1});
    BraidWord empty(3, {});
    BraidWord w(3, {1, 2, -1});
    CHECK(compose(empty, w) == w);
    CHECK(compose(halftwist(5), halftwist(5)).letters().size() == 20);
    CHECK_THROWS_AS(compose(BraidWord(2, {1}), BraidWord(3, {1})), StrandMismatch);
}

TEST_CASE("free_reduce cancels adjacent inverse pairs to a fixpoint") {
    CHECK(free_reduce(BraidWord(2, {1, -1})).letters().empty());
    CHECK(free_reduce(BraidWord(3, {1, 2, -2, 1})).letters() == std::vector<int>{1, 1});
    std::mt19937 rng(4001);
    for (int i = 0; i < 50; ++i) {
        BraidWord w = random_word(rng, 4, 12);
        CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    }
}

TEST_CASE("braid word validation and text format") {
    CHECK_THROWS_AS(BraidWord(1, {}), InputError);
    CHECK_THROWS_AS(BraidWord(3, {3}), InputError);
    CHECK_THROWS_AS(BraidWord(3, {0}), InputError);

    BraidWord w = BraidWord::parse("strands=3; 1,2,1");
    CHECK(w.strands() == 3);
    CHECK(w.letters() == std::vector<int>{1, 2, 1});
    CHECK(w.str() == "strands=3; 1,2,1");
    CHECK(BraidWord::parse(" strands=4 ;  -1 , 3 ").letters() == std::vector<int>{-1, 3});
    CHECK(BraidWord::parse("strands=2;").letters().empty());
    CHECK(BraidWord::parse(w.str()) == w);

    CHECK_THROWS_AS(BraidWord::parse("1,2,1"), InputError);
    CHECK_THROWS_AS(BraidWord::parse("strands=3 1,2"), InputError);
    CHECK_THROWS_AS(BraidWord::parse("strands=3; 1,,2"), InputError);
    CHECK_THROWS_AS(BraidWord::parse("strands=x; 1"), InputError);
}

TEST_CASE("burau of the empty word is the identity") {
    PolyMatrix m = burau_reduced(BraidWord(4, {}));
    CHECK(m == identity_matrix(3));
}

TEST_CASE("burau of sigma_1 on 2 strands is [-t]") {
    PolyMatrix m = burau_reduced(BraidWord(2, {1}));
    REQUIRE(m.size() == 1);
    CHECK(m[0][0] == -LaurentPoly::variable("t"));
}

TEST_CASE("burau respects the braid relations") {
    CHECK(burau_reduced(BraidWord(3, {1, 2, 1})) == burau_reduced(BraidWord(3, {2, 1, 2})));
    CHECK(burau_reduced(BraidWord(5, {1, 3})) == burau_reduced(BraidWord(5, {3, 1})));
    CHECK(burau_reduced(BraidWord(5, {2, 4, 2, -4})) == burau_reduced(BraidWord(5, {2, 2})));
    // inverse generators are two-sided inverses
    CHECK(burau_reduced(BraidWord(4, {2, -2})) == identity_matrix(3));
    CHECK(burau_reduced(BraidWord(4, {-3, 3})) == identity_matrix(3));
}

TEST_CASE("burau is a homomorphism on random words") {
    std::mt19937 rng(4002);
    for (int i = 0; i < 30; ++i) {
        BraidWord a = random_word(rng, 4, 6);
        BraidWord b = random_word(rng, 4, 6);
        CHECK(burau_reduced(compose(a, b)) == mat_mul(burau_reduced(a), burau_reduced(b)));
    }
}

TEST_CASE("closure permutation counts components") {
    CHECK(closure_permutation(BraidWord(3, {})).cycle_count() == 3);
    CHECK(closure_permutation(BraidWord(2, {1})).cycle_count() == 1);
    for (int a = 2; a <= 6; ++a)
        for (int b = 1; b <= 7; ++b)
            CHECK(closure_permutation(torus_braid(a, b)).is_knot() == (std::gcd(a, b) == 1));
}

TEST_CASE("alexander of simple knot closures") {
    const LaurentPoly t = LaurentPoly::variable("t");
    CHECK(alexander_of_knot_closure(BraidWord(2, {1, 1, 1})) ==
          LaurentPoly::variable("t", -1) - 1 + t);
    CHECK(alexander_of_knot_closure(BraidWord(2, {1})) == LaurentPoly(1));
    CHECK_THROWS_AS(alexander_of_knot_closure(BraidWord(2, {})), NotAKnot);
    CHECK_THROWS_AS(alexander_of_knot_closure(torus_braid(2, 4)), NotAKnot);
    // mirror words give the same symmetrized polynomial
    CHECK(alexander_of_knot_closure(BraidWord(2, {-1, -1, -1})) ==
          alexander_of_knot_closure(BraidWord(2, {1, 1, 1})));
}

TEST_CASE("alexander of torus closures agrees with the quotient formula") {
    for (int a = 2; a <= 5; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(alexander_of_knot_closure(torus_braid(a, b)) ==
                  symmetrize(alexander_torus_knot(a, b)));
        }
}

TEST_CASE("alexander is invariant under conjugation") {
    std::mt19937 rng(4003);
    const BraidWord base = torus_braid(3, 4);
    for (int i = 0; i < 20; ++i) {
        BraidWord c = random_word(rng, 3, 5);
        std::vector<int> inv(c.letters().rbegin(), c.letters().rend());
        for (int& ell : inv) ell = -ell;
        BraidWord conjugated = compose(compose(c, base), BraidWord(3, std::move(inv)));
        CHECK(alexander_of_knot_closure(conjugated) == alexander_of_knot_closure(base));
    }
}

TEST_CASE("torus_braid expands the standard word") {
    CHECK(torus_braid(2, 3).letters() == std::vector<int>{1, 1, 1});
    CHECK(torus_braid(3, 1).letters() == std::vector<int>{1, 2});
    CHECK(torus_braid(3, 1).strands() == 3);
    CHECK_THROWS_AS(torus_braid(1, 5), InvalidParams);
    CHECK_THROWS_AS(torus_braid(3, 0), InvalidParams);
}

TEST_CASE("halftwist crosses every pair once") {
    CHECK(halftwist(2).letters() == std::vector<int>{1});
    CHECK(halftwist(3).letters() == std::vector<int>{1, 2, 1});
    CHECK(halftwist(5).letters().size() == 10);
    CHECK_THROWS_AS(halftwist(1), InvalidParams);
    // the half twist closes to the reverse permutation
    auto perm = closure_permutation(halftwist(5));
    for (int i = 0; i < 5; ++i) CHECK(perm.images[static_cast<std::size_t>(i)] == 4 - i);
}

TEST_CASE("gamma braid closes to the torus knot T(p,p+1)") {
    CHECK_THROWS_AS(gamma_braid(1), InvalidParams);
    for (int p = 2; p <= 5; ++p) {
        BraidWord g = gamma_braid(p);
        CHECK(g.strands() == p + 1);
        CHECK(static_cast<int>(g.letters().size()) == p * p);
        CHECK(closure_permutation(g).is_knot());
        CHECK(alexander_of_knot_closure(g) == symmetrize(alexander_torus_knot(p, p + 1)));
        CHECK(alexander_of_knot_closure(g) ==
              alexander_of_knot_closure(torus_braid(p, p + 1)));
        CHECK(g.exponent_sum() == torus_braid(p + 1, p).exponent_sum());
    }
}

TEST_CASE("determinant on small matrices") {
    const LaurentPoly t = LaurentPoly::variable("t");
    CHECK(determinant({}) == LaurentPoly(1));
    CHECK(determinant({{t + 1}}) == t + 1);
    PolyMatrix m{{t, LaurentPoly(1)}, {LaurentPoly(1), t}};
    CHECK(determinant(m) == t * t - 1);
    // row swaps flip the sign
    PolyMatrix s{{LaurentPoly(0), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly(0)}};
    CHECK(determinant(s) == LaurentPoly(-1));
    // singular
    PolyMatrix z{{t, t}, {t, t}};
    CHECK(determinant(z) == LaurentPoly(0));
    // Laurent entries
    PolyMatrix l{{LaurentPoly::variable("t", -1), LaurentPoly(1)},
                 {LaurentPoly(1), LaurentPoly::variable("t", -1)}};
    CHECK(determinant(l) == LaurentPoly::variable("t", -2) - 1);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    oracle::PolyGen gen(4004, {"t"});
    for (int iter = 0; iter < 20; ++iter) {
        PolyMatrix m(3, std::vector<LaurentPoly>(3));
        for (auto& row : m)
            for (auto& e : row) e = gen.next(3, 3, 4);
        // first-row expansion with cyclic column indices (signs absorbed)
        LaurentPoly expect;
        for (int j = 0; j < 3; ++j) {
            LaurentPoly minor =
                m[1][(j + 1) % 3] * m[2][(j + 2) % 3] - m[1][(j + 2) % 3] * m[2][(j + 1) % 3];
            expect += m[0][static_cast<std::size_t>(j)] * minor;
        }
        CHECK(determinant(m) == expect);
    }
}
