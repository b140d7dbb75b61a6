#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gmnrep/jucys_murphy.hpp"
#include "gmnrep/representation.hpp"

using namespace gmnrep;

namespace {

CycRat q(int m, std::int64_t a, std::int64_t b = 1) { return CycRat(m, Rational(a, b)); }

Matrix mat(int m, std::vector<std::vector<CycRat>> rows) {
    Matrix a(m, rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
    }
    return a;
}

}  // namespace

TEST_CASE("small seminormal representations") {
    const auto row = build_seminormal(1, 2, MPartition(1, {{2}}));
    CHECK(row.dim() == 1);
    CHECK(row.mat_s(1) == Matrix::identity(1, 1));

    const auto hook = build_seminormal(1, 3, MPartition(1, {{2, 1}}));
    REQUIRE(hook.dim() == 2);
    CHECK(hook.mat_s(2) == mat(1, {{q(1, -1, 2), q(1, 3, 2)}, {q(1, 1, 2), q(1, 1, 2)}}));
    CHECK(hook.mat_s(2) * hook.mat_s(2) == Matrix::identity(1, 2));

    const auto two = build_seminormal(2, 2, MPartition(2, {{1}, {1}}));
    CHECK(two.mat_t() == Matrix::diagonal({root_of_unity(2, 1), root_of_unity(2, 2)}));
    CHECK(two.mat_s(1) == mat(2, {{q(2, 0), q(2, 1)}, {q(2, 1), q(2, 0)}}));

    CHECK_THROWS_AS(build_seminormal(1, 3, MPartition(1, {{2}})), std::invalid_argument);
    CHECK_THROWS_AS(build_seminormal(2, 2, MPartition(1, {{2}})), std::invalid_argument);
}

TEST_CASE("relations and homomorphism") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enum_mpartitions(m, n)) {
                const auto rep = build_seminormal(m, n, shape);
                CHECK(verify_relations(rep).passed());
                CHECK(verify_homomorphism(rep, 10, 3).passed());
            }
        }
    }
}

TEST_CASE("JM elements act diagonally") {
    const auto hook = build_seminormal(1, 3, MPartition(1, {{2, 1}}));
    CHECK(hook.evaluate(jm_jtilde(1, 3, 1)).is_zero());
    const auto j2 = hook.evaluate(jm_jtilde(1, 3, 2)).diag();
    const auto j3 = hook.evaluate(jm_jtilde(1, 3, 3)).diag();
    CHECK(j2 == std::vector<CycRat>{q(1, 1), q(1, -1)});
    CHECK(j3 == std::vector<CycRat>{q(1, -1), q(1, 1)});
    for (int m = 1; m <= 3; ++m) {
        for (const auto& shape : enum_mpartitions(m, 3)) {
            const auto rep = build_seminormal(m, 3, shape);
            CHECK(jm_diagonal_check(rep).passed());
            CHECK(spectrum_bound_check(rep).passed());
            CHECK(adjacent_transposition_check(rep).passed());
            for (std::size_t j = 0; j < rep.dim(); ++j) CHECK(jm_vector_check(rep, j).passed());
        }
    }
}

TEST_CASE("sparse action matches dense evaluation") {
    const auto rep = build_seminormal(3, 3, MPartition(3, {{1}, {1}, {1}}));
    const auto sparse = build_seminormal(3, 3, MPartition(3, {{1}, {1}, {1}}), false);
    CHECK_FALSE(sparse.has_matrices());
    const auto g = evaluate_word(3, 3, "t s1 t^2 s2 s1 t");
    CHECK(rep.evaluate(g) == sparse.evaluate(g));
    CHECK(rep.evaluate(g) == rep.mat_t() * rep.mat_s(1) * rep.mat_t().pow(2) * rep.mat_s(2) * rep.mat_s(1) * rep.mat_t());
}

TEST_CASE("Hermitian form") {
    CHECK(hermitian_form(build_seminormal(1, 2, MPartition(1, {{1, 1}}))) == std::vector<Rational>{Rational(1)});
    const auto hook = build_seminormal(1, 3, MPartition(1, {{2, 1}}));
    const auto form = hermitian_form(hook);
    CHECK(form == std::vector<Rational>{Rational(1, 2), Rational(3, 2)});
    CHECK(hermitian_form(build_seminormal(2, 2, MPartition(2, {{1}, {1}}))) ==
          std::vector<Rational>{Rational(1), Rational(1)});
    const Matrix g = Matrix::diagonal({q(1, 1, 2), q(1, 3, 2)});
    CHECK(hook.mat_s(2).conj_transpose() * g * hook.mat_s(2) == g);
    CHECK(verify_form_invariance(hook, form).passed());

    const auto u = unitary_matrices(hook, form);
    REQUIRE(u.size() == 3);
    const auto& s2 = u[2];
    CHECK(std::abs(s2[0][0] - std::complex<double>(-0.5)) < 1e-12);
    CHECK(std::abs(s2[0][1] - std::complex<double>(std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(s2[1][0] - std::complex<double>(std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(s2[1][1] - std::complex<double>(0.5)) < 1e-12);
    CHECK(unitary_residual(u) < 1e-12);

    for (int m = 1; m <= 3; ++m) {
        for (const auto& shape : enum_mpartitions(m, 3)) {
            const auto rep = build_seminormal(m, 3, shape);
            const auto f = hermitian_form(rep);
            CHECK(verify_form_invariance(rep, f).passed());
            CHECK(unitary_residual(unitary_matrices(rep, f)) < 1e-10);
        }
    }
}

TEST_CASE("intertwiner action") {
    const auto hook = build_seminormal(1, 3, MPartition(1, {{2, 1}}));
    const auto u = hook.evaluate(intertwiner_utilde(1, 3, 2));
    CHECK(u(1, 0) == q(1, 1));
    CHECK(u(0, 0).is_zero());
    CHECK(build_seminormal(1, 2, MPartition(1, {{2}})).evaluate(intertwiner_utilde(1, 2, 1)).is_zero());
    CHECK(build_seminormal(2, 2, MPartition(2, {{1}, {1}})).evaluate(intertwiner_utilde(2, 2, 1)).is_zero());
    for (int m = 1; m <= 3; ++m) {
        for (const auto& shape : enum_mpartitions(m, 3)) CHECK(intertwiner_action_check(build_seminormal(m, 3, shape)).passed());
    }
}

TEST_CASE("branching") {
    std::vector<BranchBlock> blocks;
    CHECK(branching(build_seminormal(1, 3, MPartition(1, {{2, 1}})), &blocks).passed());
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].sub_shape == MPartition(1, {{1, 1}}));
    CHECK(blocks[1].sub_shape == MPartition(1, {{2}}));
    blocks.clear();
    CHECK(branching(build_seminormal(2, 2, MPartition(2, {{1}, {1}})), &blocks).passed());
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].sub_shape == MPartition(2, {{}, {1}}));
    CHECK(blocks[1].sub_shape == MPartition(2, {{1}, {}}));
    for (int m = 1; m <= 3; ++m) {
        for (const auto& shape : enum_mpartitions(m, 4)) {
            const auto rep = build_seminormal(m, 4, shape);
            CHECK(branching(rep).passed());
            CHECK(irreducibility_check(rep).passed());
        }
    }
}

TEST_CASE("completeness") {
    CHECK(completeness_check(2, 2).sum_sq == 8);
    const auto r = completeness_check(2, 3);
    CHECK(r.sum_sq == 48);
    CHECK(r.order == 48);
    CHECK(r.certificate.passed());
    const auto r32 = completeness_check(3, 2);
    CHECK(r32.sum_sq == 18);
    CHECK(r32.shapes == 9);
    CHECK(completeness_check(2, 4).sum_sq == 384);
}

TEST_CASE("construction depends only on (m, n, shape)") {
    const MPartition shape(2, {{2}, {1}});
    const auto a = build_seminormal(2, 3, shape);
    const auto b = build_seminormal(2, 3, shape);
    CHECK(a.mat_t() == b.mat_t());
    CHECK(a.mat_s() == b.mat_s());
    const auto c = Representation::from_matrices(2, 3, shape, a.basis(), a.mat_t(), a.mat_s());
    CHECK(verify_relations(c).passed());
    CHECK(c.mat_s() == a.mat_s());
}
