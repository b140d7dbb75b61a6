// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gmnrep/affine_a2.hpp"
#include "gmnrep/group.hpp"
#include "gmnrep/idempotents.hpp"
#include "gmnrep/jucys_murphy.hpp"
#include "gmnrep/representation.hpp"

using namespace gmnrep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    int checked = 0;

    void absorb(const Certificate& c) {
        ++checked;
        if (c.passed() || !pass) {
            pass = pass && c.passed();
            return;
        }
        pass = false;
        const auto f = c.failures();
        detail = c.subject + ": " + (f.empty() ? std::string("failed") : f.front().name + " " + f.front().detail);
    }
    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::vector<std::pair<int, int>> range_1to4_plus5() {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= 3; ++m) {
        for (int n = 2; n <= 4; ++n) out.emplace_back(m, n);
    }
    out.emplace_back(1, 5);
    out.emplace_back(2, 5);
    return out;
}

std::vector<std::pair<int, int>> box(int max_m, int min_n, int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= max_m; ++m) {
        for (int n = min_n; n <= max_n; ++n) out.emplace_back(m, n);
    }
    return out;
}

const std::vector<Representation>& reps(int m, int n) {
    static std::map<std::pair<int, int>, std::vector<Representation>> memo;
    auto it = memo.find({m, n});
    if (it != memo.end()) return it->second;
    std::vector<Representation> out;
    for (const auto& shape : enum_mpartitions(m, n)) out.push_back(build_seminormal(m, n, shape));
    return memo.emplace(std::make_pair(m, n), std::move(out)).first->second;
}

Outcome relations() {
    Outcome o;
    for (auto [m, n] : range_1to4_plus5()) {
        o.absorb(group_relations_check(m, n));
        for (const auto& rep : reps(m, n)) {
            o.absorb(verify_relations(rep));
            o.absorb(verify_homomorphism(rep, 50, 2024));
        }
    }
    return o;
}

Outcome jm_diagonal() {
    Outcome o;
    for (auto [m, n] : range_1to4_plus5()) {
        for (const auto& rep : reps(m, n)) o.absorb(jm_diagonal_check(rep));
    }
    return o;
}

Outcome completeness() {
    Outcome o;
    for (auto [m, n] : range_1to4_plus5()) o.absorb(completeness_check(m, n).certificate);
    o.require(completeness_check(2, 3).sum_sq == 48, "(2,3) != 48");
    o.require(completeness_check(3, 2).sum_sq == 18, "(3,2) != 18");
    o.require(completeness_check(2, 4).sum_sq == 384, "(2,4) != 384");
    return o;
}

Outcome simple_spectrum() {
    Outcome o;
    for (auto [m, n] : box(3, 1, 5)) {
        const auto all = enum_all_mtableaux(m, n);
        std::set<std::vector<ContentColumn>> seen;
        for (const auto& t : all) seen.insert(content_string(t).columns);
        o.require(seen.size() == all.size(), "repeated content string at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
    return o;
}

Outcome form() {
    Outcome o;
    double worst = 0;
    for (auto [m, n] : box(3, 1, 4)) {
        for (const auto& rep : reps(m, n)) {
            const auto f = hermitian_form(rep);
            o.absorb(verify_form_invariance(rep, f));
            const double r = unitary_residual(unitary_matrices(rep, f));
            worst = std::max(worst, r);
            o.require(r < 1e-10, "unitary residual " + std::to_string(r) + " at shape " + format_shape(rep.shape()));
        }
    }
    if (o.pass) {
        std::ostringstream os;
        os << "max unitary residual " << worst;
        o.detail = os.str();
    }
    return o;
}

Outcome idempotents() {
    Outcome o;
    for (auto [m, n] : box(2, 1, 4)) o.absorb(verify_idempotents_group_algebra(m, n));
    for (auto [m, n] : box(3, 1, 5)) o.absorb(verify_idempotents_matrix_witness(m, n));
    return o;
}

Outcome t_compatibility() {
    Outcome o;
    for (auto [m, n] : box(2, 1, 3)) o.absorb(verify_T_compatibility(m, n));
    return o;
}

Outcome commutativity() {
    Outcome o;
    for (auto [m, n] : box(3, 1, 4)) {
        o.absorb(jm_commutativity_check(m, n));
        o.absorb(jm_locality_check(m, n));
    }
    return o;
}

Outcome intertwiners() {
    Outcome o;
    for (auto [m, n] : box(3, 2, 4)) {
        o.absorb(intertwiner_identities_check(m, n));
        for (const auto& rep : reps(m, n)) o.absorb(intertwiner_action_check(rep));
    }
    return o;
}

Outcome spectrum_bound() {
    Outcome o;
    for (auto [m, n] : box(3, 1, 5)) {
        for (const auto& rep : reps(m, n)) o.absorb(spectrum_bound_check(rep));
    }
    return o;
}

Outcome affine() {
    Outcome o;
    for (int m = 1; m <= 4; ++m) o.absorb(a2_grid_check(m, -3, 3));
    for (int d : {1, -1}) {
        const auto rep = build_a2(A2Kind::TwoDimEqual, A2Params{1, 1, 1, Rational(0), Rational(d), 1});
        const auto irr = is_irreducible_a2(rep);
        o.require(!irr.irreducible && irr.invariant_vector.has_value(), "no invariant vector at b~ - a~ = " + std::to_string(d));
    }
    const auto rep = build_a2(A2Kind::TwoDimEqual, A2Params{1, 1, 1, Rational(0), Rational(2), 1});
    o.require(is_irreducible_a2(rep).irreducible, "(0,2) reported reducible");
    return o;
}

Outcome branching_rule() {
    Outcome o;
    for (auto [m, n] : box(3, 1, 4)) {
        for (const auto& rep : reps(m, n)) {
            std::vector<BranchBlock> blocks;
            o.absorb(branching(rep, &blocks));
            std::set<MPartition> shapes;
            for (const auto& b : blocks) shapes.insert(b.sub_shape);
            o.require(shapes.size() == blocks.size() && blocks.size() == removable_nodes(rep.shape()).size(),
                      "restriction of " + format_shape(rep.shape()) + " is not multiplicity free");
        }
    }
    return o;
}

Outcome worked_example() {
    Outcome o;
    const MTableau tab(2, {{{1, 2, 4}, {6, 9}, {7}}, {{3, 8, 10}, {5}}});
    ContentString want;
    want.m = 2;
    const std::vector<int> p{1, 1, 2, 1, 2, 1, 1, 2, 1, 2};
    const std::vector<int> c{0, 1, 0, 2, -1, -1, -2, 1, 0, 2};
    for (std::size_t i = 0; i < p.size(); ++i) want.columns.push_back({p[i], c[i]});
    o.require(content_string(tab) == want, "tableau does not map to the expected string");
    o.require(string_to_tableau(want) == tab, "string does not map back to the tableau");
    const auto rep = build_seminormal(2, 10, tab.shape(), false);
    const auto idx = rep.index_of(tab);
    o.require(idx.has_value(), "tableau missing from the basis");
    if (idx) o.absorb(jm_vector_check(rep, *idx));
    if (o.pass) o.detail = format_tableau(tab) + " <-> string, dim " + std::to_string(rep.dim());
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"relations hold in every seminormal representation", relations},
        {"JM elements diagonal with content-string eigenvalues", jm_diagonal},
        {"sum of squared dimensions equals the group order", completeness},
        {"content strings pairwise distinct", simple_spectrum},
        {"Hermitian form invariant, unitary residual < 1e-10", form},
        {"primitive orthogonal idempotents summing to 1", idempotents},
        {"tableau relations realized by idempotents", t_compatibility},
        {"JM commutativity and locality", commutativity},
        {"intertwiner identities and action", intertwiners},
        {"spectrum of j~_i within [1-i, i-1]", spectrum_bound},
        {"A(m,2) families and irreducibility boundary", affine},
        {"multiplicity-free branching", branching_rule},
        {"m=2, n=10 tableau and content string round trip", worked_example},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ("
                  << o.checked << " certificates, " << static_cast<int>(secs * 1000) << " ms)";
        if (!o.detail.empty()) std::cout << " - " << o.detail;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
