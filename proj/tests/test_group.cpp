#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmnrep/algebra.hpp"
#include "gmnrep/dense_algebra.hpp"
#include "gmnrep/group.hpp"
#include "gmnrep/jucys_murphy.hpp"

using namespace gmnrep;

namespace {

GroupElement ge(int m, std::vector<int> r, std::vector<int> p) { return GroupElement(m, static_cast<int>(p.size()), r, p); }

CycRat q(int m, std::int64_t a, std::int64_t b = 1) { return CycRat(m, Rational(a, b)); }

}  // namespace

TEST_CASE("generators in normal form") {
    CHECK(gen_t(2, 2) == ge(2, {1, 0}, {0, 1}));
    CHECK(gen_s(2, 2, 1) == ge(2, {0, 0}, {1, 0}));
    CHECK(identity(3, 1) == ge(3, {0}, {0}));
    CHECK_THROWS(GroupElement(2, 2, {0, 0}, {0, 0}));
}

TEST_CASE("multiplication convention") {
    const auto t = gen_t(2, 2);
    const auto s = gen_s(2, 2, 1);
    CHECK(multiply(t, t).is_identity());
    CHECK(multiply(s, multiply(t, s)) == ge(2, {0, 1}, {0, 1}));
    CHECK(multiply(t, multiply(s, t)) == ge(2, {1, 1}, {1, 0}));
    CHECK(gen_t_i(2, 2, 2) == ge(2, {0, 1}, {0, 1}));
    CHECK(inverse(gen_s(3, 4, 2)) == gen_s(3, 4, 2));
    CHECK(evaluate_word(3, 2, "t^m").is_identity());
    CHECK(evaluate_word(3, 2, "t t^-1 s1 s1").is_identity());
    CHECK_THROWS_AS(evaluate_word(3, 2, "s2"), std::out_of_range);
    CHECK_THROWS_AS(parse_word("u", 2), std::invalid_argument);
}

TEST_CASE("enumeration and ranks") {
    CHECK(enumerate_group(1, 3).size() == 6);
    CHECK(enumerate_group(2, 2).size() == 8);
    CHECK(enumerate_group(3, 2).size() == 18);
    CHECK(group_order(2, 4) == 384);
    const auto all = enumerate_group(2, 3);
    for (std::size_t k = 0; k < all.size(); ++k) {
        CHECK(group_rank(all[k]) < all.size());
        CHECK(group_unrank(2, 3, group_rank(all[k])) == all[k]);
    }
    CHECK_THROWS_AS(enumerate_group(3, 6, 1000), std::length_error);
}

TEST_CASE("group axioms and reduced words") {
    std::mt19937 rng(7);
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const auto order = group_order(m, n);
            std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
            for (int trial = 0; trial < 30; ++trial) {
                const auto a = group_unrank(m, n, pick(rng));
                const auto b = group_unrank(m, n, pick(rng));
                const auto c = group_unrank(m, n, pick(rng));
                CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
                CHECK(multiply(a, inverse(a)).is_identity());
                CHECK(power(a, 0).is_identity());
                GroupElement w = identity(m, n);
                for (int i : permutation_word(a.perm())) w = multiply(w, gen_s(m, n, i));
                CHECK(w.perm() == a.perm());
            }
        }
    }
}

TEST_CASE("relation certificate") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 5; ++n) CHECK(group_relations_check(m, n).passed());
    }
}

TEST_CASE("group algebra") {
    const auto g = gen_s(2, 3, 1);
    const auto h = gen_t(2, 3);
    CHECK(alg_mul(AlgebraElement::delta(g), AlgebraElement::delta(h)) == AlgebraElement::delta(multiply(g, h)));
    const auto a = AlgebraElement::delta(g) + AlgebraElement::delta(h, q(2, 3));
    CHECK(alg_commutator(a, a).is_zero());
    const auto sym = (AlgebraElement::one(1, 2) + AlgebraElement::delta(gen_s(1, 2, 1))) * Rational(1, 2);
    CHECK(sym * sym == sym);
    CHECK((a - a).is_zero());
    CHECK(a.coefficient(h) == q(2, 3));
}

TEST_CASE("Jucys-Murphy elements") {
    CHECK(jm_j(2, 3, 1) == AlgebraElement::delta(gen_t(2, 3)));
    CHECK(jm_j(2, 2, 2) == AlgebraElement::delta(ge(2, {0, 1}, {0, 1})));
    for (int m = 1; m <= 3; ++m) {
        for (int i = 1; i <= 3; ++i) {
            auto p = AlgebraElement::one(m, 3);
            for (int k = 0; k < m; ++k) p = p * jm_j(m, 3, i);
            CHECK(p == AlgebraElement::one(m, 3));
        }
        CHECK(jm_jtilde(m, 3, 1).is_zero());
    }
    CHECK(jm_jtilde(1, 3, 2) == AlgebraElement::delta(gen_s(1, 3, 1)));
    const auto expect = AlgebraElement::delta(gen_s(2, 2, 1), q(2, 1, 2)) +
                        AlgebraElement::delta(ge(2, {1, 1}, {1, 0}), q(2, 1, 2));
    CHECK(jm_jtilde(2, 2, 2) == expect);
}

TEST_CASE("projector and intertwiner") {
    CHECK(projector_P(1, 3, 2) == AlgebraElement::one(1, 3));
    CHECK(projector_P(1, 3, 3) == AlgebraElement::one(1, 3));
    const auto p = (AlgebraElement::one(2, 2) + AlgebraElement::delta(ge(2, {1, 1}, {0, 1}))) * Rational(1, 2);
    CHECK(projector_P(2, 2, 2) == p);
    CHECK(intertwiner_utilde(1, 2, 1).is_zero());
    CHECK(intertwiner_utilde_alt(1, 2, 1).is_zero());
    for (int m = 1; m <= 3; ++m) {
        for (int i = 1; i <= 3; ++i) CHECK(intertwiner_utilde(m, 4, i) == intertwiner_utilde_alt(m, 4, i));
    }
}

TEST_CASE("commutativity, locality and intertwiner identities") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
            CHECK(jm_commutativity_check(m, n).passed());
            CHECK(jm_locality_check(m, n).passed());
            CHECK(intertwiner_identities_check(m, n).passed());
        }
    }
}

TEST_CASE("Baxterized elements") {
    CHECK_THROWS_AS(baxterize(1, 3, 1, Rational(1), Rational(1)), std::domain_error);
    const auto a = baxterize(1, 2, 1, Rational(0), Rational(2));
    const auto b = baxterize(1, 2, 1, Rational(2), Rational(0));
    CHECK(a * b == AlgebraElement::scalar(1, 2, q(1, 3, 4)));
    CHECK(baxter_check(1, 3, Rational(0), Rational(1), Rational(3)).passed());
    CHECK(baxter_check(2, 4, Rational(0), Rational(1), Rational(3)).passed());
}

TEST_CASE("dense kernel agrees with sparse products") {
    DenseKernel k(2, 3);
    const auto p = projector_P(2, 3, 2);
    const auto sp = k.scale(p);
    REQUIRE(sp);
    CHECK(k.is_idempotent(*sp) == std::optional<bool>(true));
    const auto one_minus = AlgebraElement::one(2, 3) - p;
    const auto so = k.scale(one_minus);
    REQUIRE(so);
    CHECK(k.product_is_zero(*sp, *so) == std::optional<bool>(true));
    const auto sj = k.scale(jm_jtilde(2, 3, 3));
    REQUIRE(sj);
    CHECK(k.is_idempotent(*sj) == std::optional<bool>(false));
    CHECK_THROWS_AS(DenseKernel(3, 5), std::length_error);
}
