#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmnrep/idempotents.hpp"
#include "gmnrep/jucys_murphy.hpp"
#include "gmnrep/representation.hpp"

using namespace gmnrep;

TEST_CASE("small idempotents") {
    const auto one = AlgebraElement::one(1, 2);
    const auto s = AlgebraElement::delta(gen_s(1, 2, 1));
    const auto sym = build_idempotent(MTableau(1, {{{1, 2}}}));
    const auto alt = build_idempotent(MTableau(1, {{{1}, {2}}}));
    CHECK(sym == (one + s) * Rational(1, 2));
    CHECK(alt == (one - s) * Rational(1, 2));
    CHECK(sym + alt == one);

    for (int m = 1; m <= 4; ++m) {
        for (int k = 1; k <= m; ++k) {
            std::vector<std::vector<std::vector<int>>> rows(static_cast<std::size_t>(m));
            rows[static_cast<std::size_t>(k - 1)] = {{1}};
            auto expect = AlgebraElement::one(m, 1);
            const auto j = jm_j(m, 1, 1);
            for (int l = 1; l <= m; ++l) {
                if (l == k) continue;
                const auto factor = (j - AlgebraElement::scalar(m, 1, root_of_unity(m, l))) *
                                    root_difference_inverse(m, k, l);
                expect = expect * factor;
            }
            CHECK(build_idempotent(MTableau(m, rows)) == expect);
        }
    }
}

TEST_CASE("matrix units") {
    const auto hook = build_seminormal(1, 3, MPartition(1, {{2, 1}}));
    const auto p = build_idempotent(hook.basis()[0]);
    const auto e = hook.evaluate(p);
    Matrix expect(1, 2, 2);
    expect(0, 0) = CycRat(1, Rational(1));
    CHECK(e == expect);
    CHECK(build_seminormal(1, 3, MPartition(1, {{3}})).evaluate(p).is_zero());
}

TEST_CASE("idempotent systems") {
    CHECK(verify_idempotents_group_algebra(1, 2).passed());
    CHECK(verify_idempotents_group_algebra(2, 2).passed());
    CHECK(verify_idempotents_group_algebra(2, 3).passed());
    CHECK(verify_idempotents_group_algebra(3, 2).passed());
    CHECK(verify_idempotents_matrix_witness(3, 3).passed());
    CHECK(idempotents_in_group_algebra_range(2, 4));
    CHECK(idempotents_in_group_algebra_range(3, 3));
    CHECK_FALSE(idempotents_in_group_algebra_range(3, 4));
    const auto table = idempotent_table(2, 2);
    CHECK(table.tableaux.size() == 6);
    CHECK(table.elements.size() == 6);
}

TEST_CASE("tableau algebra compatibility") {
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 3; ++n) {
            CHECK(verify_T_compatibility(m, n).passed());
            CHECK(verify_idempotent_eigen(m, n).passed());
        }
    }
    const auto x1 = build_idempotent(MTableau(2, {{{1}}, {{2}}}));
    const auto x2 = build_idempotent(MTableau(2, {{{2}}, {{1}}}));
    const auto s = AlgebraElement::delta(gen_s(2, 2, 1));
    CHECK(s * x1 == x2 * s);
}
