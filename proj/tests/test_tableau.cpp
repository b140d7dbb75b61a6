#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gmnrep/tableau.hpp"

using namespace gmnrep;

namespace {

ContentString cs(int m, std::vector<int> p, std::vector<int> c) {
    ContentString s;
    s.m = m;
    for (std::size_t i = 0; i < p.size(); ++i) s.columns.push_back({p[i], c[i]});
    return s;
}

const std::vector<std::vector<std::vector<int>>> kExampleRows = {{{1, 2, 4}, {6, 9}, {7}}, {{3, 8, 10}, {5}}};

}  // namespace

TEST_CASE("m-partitions") {
    CHECK(enum_mpartitions(1, 3).size() == 3);
    CHECK(enum_mpartitions(2, 2).size() == 5);
    CHECK(enum_mpartitions(3, 1).size() == 3);
    CHECK(enum_mpartitions(2, 0).size() == 1);
    CHECK_THROWS_AS(MPartition(1, {{1, 2}}), std::invalid_argument);
    CHECK(format_shape(parse_shape("3,2,1|3,1")) == "3,2,1|3,1");
    CHECK(parse_shape("[[2,1],[]]") == MPartition(2, {{2, 1}, {}}));
    CHECK(parse_shape("2|") == MPartition(2, {{2}, {}}));
}

TEST_CASE("addable and removable nodes") {
    const auto add = addable_nodes(MPartition::empty(3));
    REQUIRE(add.size() == 3);
    for (int k = 1; k <= 3; ++k) CHECK(add[static_cast<std::size_t>(k - 1)] == Node{k, 1, 1});
    const auto rem = removable_nodes(MPartition(1, {{2, 1}}));
    REQUIRE(rem.size() == 2);
    CHECK(rem[0] == Node{1, 1, 2});
    CHECK(rem[1] == Node{1, 2, 1});
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 5; ++n) {
            for (const auto& shape : enum_mpartitions(m, n)) {
                CHECK(addable_nodes(shape).size() == removable_nodes(shape).size() + static_cast<std::size_t>(m));
            }
        }
    }
}

TEST_CASE("standard tableaux") {
    CHECK(enum_standard_mtableaux(MPartition(2, {{1}, {1}})).size() == 2);
    const auto tabs = enum_standard_mtableaux(MPartition(1, {{2, 1}}));
    REQUIRE(tabs.size() == 2);
    CHECK(tabs[0].rows() == std::vector<std::vector<std::vector<int>>>{{{1, 2}, {3}}});
    CHECK(tabs[1].rows() == std::vector<std::vector<std::vector<int>>>{{{1, 3}, {2}}});
    CHECK_THROWS_AS(MTableau(1, {{{2, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(MTableau(1, {{{1, 3}}}), std::invalid_argument);
}

TEST_CASE("content columns and strings") {
    const MPartition big(2, {{1}, {1, 1, 1}});
    CHECK(content_column(big, {1, 1, 1}) == ContentColumn{1, 0});
    CHECK(content_column(big, {2, 3, 1}) == ContentColumn{2, -2});
    CHECK(content_column(MPartition(1, {{3}}), {1, 1, 3}) == ContentColumn{1, 2});
    CHECK(content_string(MTableau(3, {{}, {{1}}, {}})) == cs(3, {2}, {0}));
    CHECK(content_string(MTableau(1, {{{1}, {2}}})) == cs(1, {1, 1}, {0, -1}));
}

TEST_CASE("worked m=2, n=10 example") {
    const MTableau tab(2, kExampleRows);
    CHECK(tab.shape() == MPartition(2, {{3, 2, 1}, {3, 1}}));
    const auto expect = cs(2, {1, 1, 2, 1, 2, 1, 1, 2, 1, 2}, {0, 1, 0, 2, -1, -1, -2, 1, 0, 2});
    CHECK(content_string(tab) == expect);
    CHECK(string_to_tableau(expect) == tab);
    CHECK(format_tableau(tab) == "(1 2 4 / 6 9 / 7 | 3 8 10 / 5)");
}

TEST_CASE("cCont validator") {
    CHECK(validate_ccont(cs(1, {1, 1}, {0, 1})).valid);
    const auto r2 = validate_ccont(cs(1, {1, 1}, {0, 2}));
    CHECK_FALSE(r2.valid);
    CHECK(r2.condition == 2);
    CHECK(r2.j == 2);
    const auto r3 = validate_ccont(cs(1, {1, 1}, {0, 0}));
    CHECK_FALSE(r3.valid);
    CHECK(r3.condition == 3);
    CHECK(r3.j == 1);
    CHECK(r3.k == 2);
    const auto r1 = validate_ccont(cs(2, {3}, {0}));
    CHECK(r1.condition == 1);
    CHECK(validate_ccont(cs(2, {1, 2}, {0, 0})).valid);
    CHECK_THROWS_AS(string_to_tableau(cs(1, {1, 1}, {0, 2})), InvalidContentString);
    try {
        string_to_tableau(cs(1, {1, 1}, {0, 0}));
    } catch (const InvalidContentString& e) {
        CHECK(e.report().condition == 3);
    }
}

TEST_CASE("bijection with content strings") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 5; ++n) {
            const auto all = enum_all_mtableaux(m, n);
            std::set<std::vector<ContentColumn>> seen;
            for (std::size_t k = 0; k < all.size(); ++k) {
                const auto s = content_string(all[k]);
                CHECK(validate_ccont(s).valid);
                CHECK(string_to_tableau(s) == all[k]);
                seen.insert(s.columns);
                if (k > 0) CHECK(content_string_less(content_string(all[k - 1]), s));
            }
            CHECK(seen.size() == all.size());
            std::uint64_t sum = 0;
            for (const auto& shape : enum_mpartitions(m, n)) {
                const auto d = enum_standard_mtableaux(shape).size();
                sum += d * d;
            }
            std::uint64_t order = 1;
            for (int i = 1; i <= n; ++i) order *= static_cast<std::uint64_t>(m * i);
            CHECK(sum == order);
        }
    }
}

TEST_CASE("swaps") {
    CHECK_FALSE(apply_swap(MTableau(1, {{{1, 2}}}), 1).has_value());
    const auto sw = apply_swap(MTableau(2, {{{1}}, {{2}}}), 1);
    REQUIRE(sw.has_value());
    CHECK(*sw == MTableau(2, {{{2}}, {{1}}}));
    const auto tabs = enum_standard_mtableaux(MPartition(1, {{2, 1}}));
    CHECK(apply_swap(tabs[0], 2) == std::optional<MTableau>(tabs[1]));
    CHECK_FALSE(apply_swap(tabs[0], 1).has_value());
    CHECK_THROWS_AS(apply_swap(tabs[0], 3), std::out_of_range);
}
