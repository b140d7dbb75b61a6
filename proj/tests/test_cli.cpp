#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "gmnrep/cache.hpp"
#include "gmnrep/cli.hpp"
#include "gmnrep/json_io.hpp"
#include "gmnrep/representation.hpp"

using namespace gmnrep;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gmnrep-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("json round trips") {
    const CycRat c = CycRat::zeta_power(3, 1) * Rational(-2, 3);
    CHECK(cycrat_from_json(to_json(c)) == c);
    CHECK(to_json(Rational(3, 6)) == json("1/2"));
    const auto g = evaluate_word(3, 3, "t s1 t s2");
    CHECK(group_element_from_json(to_json(g)) == g);
    const auto a = AlgebraElement::delta(g, c) + AlgebraElement::one(3, 3);
    CHECK(algebra_element_from_json(to_json(a)) == a);
    const MPartition p(2, {{3, 2, 1}, {3, 1}});
    CHECK(mpartition_from_json(to_json(p)) == p);
    const MTableau t(2, {{{1, 2, 4}, {6, 9}, {7}}, {{3, 8, 10}, {5}}});
    CHECK(mtableau_from_json(to_json(t)) == t);
    const auto s = content_string(t);
    CHECK(content_string_from_json(to_json(s)) == s);
    const auto rep = build_seminormal(2, 3, MPartition(2, {{2}, {1}}));
    const auto back = representation_from_json(representation_to_json(rep, hermitian_form(rep)));
    CHECK(back.mat_s() == rep.mat_s());
    CHECK(back.mat_t() == rep.mat_t());
    CHECK(to_json(rep.mat_t()).dump() == to_json(back.mat_t()).dump());
}

TEST_CASE("cache keys and atomic store") {
    const Cache cache(scratch("cache"));
    const CacheKey key{"rep", 2, 3, "[[2],[1]]"};
    CHECK_FALSE(cache.load(key).has_value());
    CHECK(cache.store(key, json{{"x", 1}}));
    REQUIRE(cache.load(key).has_value());
    CHECK(cache.load(key)->at("x") == 1);
    CacheKey other = key;
    other.version = "gmnrep-0";
    CHECK_FALSE(cache.load(other).has_value());
    for (const auto& e : std::filesystem::directory_iterator(cache.dir())) {
        CHECK(e.path().extension() != ".tmp");
    }
}

TEST_CASE("partitions and tableaux") {
    auto r = call({"partitions", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 5);
    r = call({"tableaux", "--m", "2", "--n", "10", "--shape", "3,2,1|3,1"});
    REQUIRE(r.code == 0);
    const auto list = json::parse(r.out);
    const json want = json{{"m", 2}, {"p", {1, 1, 2, 1, 2, 1, 1, 2, 1, 2}}, {"c", {0, 1, 0, 2, -1, -1, -2, 1, 0, 2}}};
    bool found = false;
    for (const auto& e : list) found = found || e.at("content") == want;
    CHECK(found);
    CHECK(call({"tableaux", "--m", "2", "--n", "3", "--shape", "2|2"}).code == 2);
}

TEST_CASE("content and tableau") {
    auto r = call({"content", "--tableau", R"({"m":2,"rows":[[[1,2,4],[6,9],[7]],[[3,8,10],[5]]]})"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("content").at("c") == json({0, 1, 0, 2, -1, -1, -2, 1, 0, 2}));
    r = call({"tableau", "--string", doc.at("content").dump()});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("tableau") == doc.at("tableau"));
    r = call({"tableau", "--string", R"({"p":[1,1],"c":[0,2]})", "--m", "1"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err).at("detail").at("condition") == 2);
}

TEST_CASE("rep, cache reuse and unitary output") {
    const auto dir = scratch("rep");
    setenv("GMNREP_CACHE", dir.c_str(), 1);
    auto fresh = call({"rep", "--m", "2", "--n", "3", "--shape", "2,1|", "--no-cache"});
    REQUIRE(fresh.code == 0);
    auto first = call({"rep", "--m", "2", "--n", "3", "--shape", "2,1|"});
    auto second = call({"rep", "--m", "2", "--n", "3", "--shape", "2,1|"});
    CHECK(first.out == fresh.out);
    CHECK(second.out == fresh.out);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 1);
    const auto cached = representation_from_json(json::parse(second.out));
    CHECK(verify_relations(cached).passed());
    CHECK(jm_diagonal_check(cached).passed());
    const auto doc = json::parse(fresh.out);
    CHECK(doc.at("form") == json({"1/2", "3/2"}));
    auto u = call({"rep", "--m", "1", "--n", "3", "--shape", "2,1", "--unitary", "--no-cache"});
    REQUIRE(u.code == 0);
    CHECK(json::parse(u.out).at("unitary_residual").get<double>() < 1e-10);
    CHECK(call({"rep", "--m", "2", "--n", "3", "--shape", "2|2"}).code == 2);
}

TEST_CASE("verify and completeness") {
    auto r = call({"verify", "--m", "2", "--n", "3", "--check", "all"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("pass") == true);
    r = call({"completeness", "--m", "2", "--n", "3"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("sum_sq") == 48);
    CHECK(doc.at("order") == 48);
    CHECK(doc.at("pass") == true);
    CHECK(call({"verify", "--m", "2", "--n", "2", "--check", "bogus"}).code == 2);
    const auto a = call({"verify", "--m", "1", "--n", "3", "--check", "jm"});
    const auto b = call({"verify", "--m", "1", "--n", "3", "--check", "jm"});
    CHECK(a.out == b.out);
}

TEST_CASE("affine-a2") {
    auto r = call({"affine-a2", "--kind", "two-dim-equal", "--m", "1", "--a", "1", "--at", "0", "--bt", "1"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("irreducible") == false);
    CHECK(doc.contains("invariant_vector"));
    r = call({"affine-a2", "--kind", "two-dim-distinct", "--m", "2", "--a", "1", "--b", "1"});
    CHECK(r.code == 2);
    CHECK(call({"affine-a2", "--grid", "--m", "2"}).code == 0);
}

TEST_CASE("usage errors and text output") {
    auto r = call({"nonsense"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err).at("error") == "usage");
    CHECK(call({"partitions", "--m", "x", "--n", "2"}).code == 2);
    CHECK(call({}).code == 2);
    r = call({"--format", "text", "completeness", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sum_sq: 8") != std::string::npos);
}
