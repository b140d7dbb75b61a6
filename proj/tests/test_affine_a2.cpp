#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmnrep/affine_a2.hpp"
#include "gmnrep/representation.hpp"

using namespace gmnrep;

namespace {

CycRat q(int m, std::int64_t a, std::int64_t b = 1) { return CycRat(m, Rational(a, b)); }

A2Params params(int m, int a, int b, std::int64_t at, std::int64_t bt, int eps = 1) {
    return A2Params{m, a, b, Rational(at), Rational(bt), eps};
}

}  // namespace

TEST_CASE("one-dimensional family") {
    const auto rep = build_a2(A2Kind::OneDim, params(3, 1, 1, 2, 0, 1));
    CHECK(rep.mats.x == Matrix::diagonal({root_of_unity(3, 1)}));
    CHECK(rep.mats.y == Matrix::diagonal({root_of_unity(3, 1)}));
    CHECK(rep.mats.xt == Matrix::diagonal({q(3, 2)}));
    CHECK(rep.mats.yt == Matrix::diagonal({q(3, 3)}));
    CHECK(rep.mats.s == Matrix::diagonal({q(3, 1)}));
    CHECK(verify_a2_relations(rep.mats).passed());
    CHECK(is_irreducible_a2(rep).irreducible);
    CHECK_THROWS_AS(build_a2(A2Kind::OneDim, params(2, 1, 1, 0, 0, 0)), std::domain_error);
}

TEST_CASE("two-dimensional families") {
    const auto eq = build_a2(A2Kind::TwoDimEqual, params(1, 1, 1, 0, 2));
    CHECK(eq.mats.s(0, 0) == q(1, 1, 2));
    CHECK(eq.mats.s(0, 1) == q(1, 3, 4));
    CHECK(eq.mats.s(1, 0) == q(1, 1));
    CHECK(eq.mats.s(1, 1) == q(1, -1, 2));
    CHECK(eq.mats.s * eq.mats.s == Matrix::identity(1, 2));
    CHECK(verify_a2_relations(eq.mats).passed());
    CHECK(is_irreducible_a2(eq).irreducible);

    const auto dist = build_a2(A2Kind::TwoDimDistinct, params(2, 1, 2, 0, 0));
    CHECK(dist.mats.s(0, 1) == q(2, 1));
    CHECK(dist.mats.s(1, 0) == q(2, 1));
    CHECK(dist.mats.s(0, 0).is_zero());
    CHECK(verify_a2_relations(dist.mats).passed());
    CHECK(a2_commutation_check(dist.mats).passed());

    CHECK_THROWS_AS(build_a2(A2Kind::TwoDimDistinct, params(2, 1, 1, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(build_a2(A2Kind::TwoDimEqual, params(2, 1, 1, 1, 1)), std::domain_error);
}

TEST_CASE("irreducibility boundary") {
    for (int bt : {1, -1}) {
        const auto rep = build_a2(A2Kind::TwoDimEqual, params(1, 1, 1, 0, bt));
        CHECK(verify_a2_relations(rep.mats).passed());
        const auto irr = is_irreducible_a2(rep);
        CHECK_FALSE(irr.irreducible);
        CHECK_FALSE(irr.criterion);
        REQUIRE(irr.invariant_vector.has_value());
        const auto& v = *irr.invariant_vector;
        REQUIRE(v.size() == 2);
        const auto sv0 = rep.mats.s(0, 0) * v[0] + rep.mats.s(0, 1) * v[1];
        const auto sv1 = rep.mats.s(1, 0) * v[0] + rep.mats.s(1, 1) * v[1];
        // s v is a multiple of v
        CHECK(sv0 * v[1] == sv1 * v[0]);
        CHECK_FALSE((v[0].is_zero() && v[1].is_zero()));
    }
    CHECK(is_irreducible_a2(build_a2(A2Kind::TwoDimEqual, params(3, 2, 2, 0, 2))).irreducible);
}

TEST_CASE("parameter grid") {
    for (int m = 1; m <= 3; ++m) CHECK(a2_grid_check(m, -3, 3).passed());
}

TEST_CASE("quotient of G(m,1,n) representations") {
    for (int m = 1; m <= 3; ++m) {
        for (const auto& shape : enum_mpartitions(m, 3)) {
            const auto rep = build_seminormal(m, 3, shape);
            for (int i = 1; i <= 2; ++i) {
                const auto mats = a2_from_representation(rep, i);
                CHECK(verify_a2_relations(mats).passed());
                CHECK(a2_commutation_check(mats).passed());
            }
        }
    }
}

TEST_CASE("kind names") {
    CHECK(parse_a2_kind("two-dim-equal") == A2Kind::TwoDimEqual);
    CHECK(to_string(A2Kind::OneDim) == "one-dim");
    CHECK_THROWS_AS(parse_a2_kind("three"), std::invalid_argument);
}
