#include "gmnrep/idempotents.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gmnrep/dense_algebra.hpp"
#include "gmnrep/group.hpp"
#include "gmnrep/jucys_murphy.hpp"
#include "gmnrep/representation.hpp"

namespace gmnrep {

namespace {

using Rows = std::vector<std::vector<std::vector<int>>>;

/// Factor attached to placing node alpha on top of mu at level k, as a polynomial in (j~_k, j_k).
struct LevelFactor {
    std::vector<std::pair<int, Rational>> tilde;  // (c(beta), 1/(c(alpha) - c(beta)))
    std::vector<std::pair<int, CycRat>> root;     // (diagram of beta, 1/(p(alpha) - p(beta)))
};

LevelFactor level_factor(const MPartition& mu, const Node& alpha) {
    const int m = mu.m();
    LevelFactor f;
    bool seen_self = false;
    for (const Node& beta : addable_nodes(mu)) {
        if (beta == alpha) {
            seen_self = true;
            continue;
        }
        if (beta.diagram == alpha.diagram && beta.content() == alpha.content()) {
            throw std::logic_error("build_idempotent: two addable nodes share a content column");
        }
        if (beta.content() != alpha.content()) f.tilde.emplace_back(beta.content(), Rational(alpha.content() - beta.content()).inverse());
        if (beta.diagram != alpha.diagram) f.root.emplace_back(beta.diagram, root_difference_inverse(m, alpha.diagram, beta.diagram));
    }
    if (!seen_self) throw std::logic_error("build_idempotent: node is not addable");
    return f;
}

std::mutex memo_mu;
std::map<std::tuple<int, int, Rows>, AlgebraElement> memo;

}  // namespace

AlgebraElement build_idempotent(const MTableau& tab, int ambient_n) {
    const int m = tab.m();
    if (ambient_n < tab.n()) throw std::invalid_argument("build_idempotent: ambient n below tableau size");
    if (tab.n() == 0) return AlgebraElement::one(m, ambient_n);
    const auto key = std::make_tuple(m, ambient_n, tab.rows());
    {
        std::lock_guard lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const int k = tab.n();
    const Node alpha = tab.node_of(k);
    const MTableau prev = tab.without_largest();
    const LevelFactor f = level_factor(prev.shape(), alpha);
    const auto& fam = jm_family(m, ambient_n);
    AlgebraElement p = build_idempotent(prev, ambient_n);
    for (const auto& [c, inv] : f.tilde) {
        AlgebraElement factor = fam.Jt(k) - AlgebraElement::scalar(m, ambient_n, CycRat(m, Rational(c)));
        p = p * (factor * inv);
    }
    for (const auto& [diagram, inv] : f.root) {
        AlgebraElement factor = fam.J(k) - AlgebraElement::scalar(m, ambient_n, root_of_unity(m, diagram));
        p = p * (factor * inv);
    }
    std::lock_guard lock(memo_mu);
    memo.emplace(key, p);
    return p;
}

IdempotentTable idempotent_table(int m, int n) {
    IdempotentTable t;
    t.m = m;
    t.n = n;
    t.tableaux = enum_all_mtableaux(m, n);
    for (const auto& x : t.tableaux) t.elements.push_back(build_idempotent(x, n));
    return t;
}

bool idempotents_in_group_algebra_range(int m, int n) { return (m <= 2 && n <= 4) || (m == 3 && n <= 3); }

Certificate verify_idempotents_group_algebra(int m, int n) {
    Certificate cert;
    cert.subject = "idempotents in the group algebra m=" + std::to_string(m) + " n=" + std::to_string(n);
    const IdempotentTable table = idempotent_table(m, n);
    const std::size_t count = table.elements.size();

    AlgebraElement sum = AlgebraElement::zero(m, n);
    for (const auto& p : table.elements) sum += p;
    cert.add("sum of p_X = 1", sum == AlgebraElement::one(m, n));

    const DenseKernel kernel(m, n);
    std::vector<std::optional<DenseKernel::Scaled>> scaled;
    for (const auto& p : table.elements) scaled.push_back(kernel.scale(p));
    std::size_t fallbacks = 0;
    auto product_zero = [&](std::size_t a, std::size_t b) {
        if (scaled[a] && scaled[b]) {
            if (auto z = kernel.product_is_zero(*scaled[a], *scaled[b])) return *z;
        }
        ++fallbacks;
        return (table.elements[a] * table.elements[b]).is_zero();
    };
    auto idempotent = [&](std::size_t a) {
        if (scaled[a]) {
            if (auto z = kernel.is_idempotent(*scaled[a])) return *z;
        }
        ++fallbacks;
        return table.elements[a] * table.elements[a] == table.elements[a];
    };
    std::string bad_sq;
    std::string bad_orth;
    for (std::size_t a = 0; a < count; ++a) {
        if (bad_sq.empty() && !idempotent(a)) bad_sq = format_tableau(table.tableaux[a]);
        for (std::size_t b = 0; b < count && bad_orth.empty(); ++b) {
            if (a != b && !product_zero(a, b)) {
                bad_orth = format_tableau(table.tableaux[a]) + " * " + format_tableau(table.tableaux[b]);
            }
        }
    }
    cert.add("p_X^2 = p_X", bad_sq.empty(), bad_sq);
    cert.add("p_X p_Y = 0 for X != Y", bad_orth.empty(), bad_orth);
    cert.add("dense kernel fallbacks", true, std::to_string(fallbacks));

    std::string bad_unit;
    const auto group = enumerate_group(m, n);
    for (const auto& shape : enum_mpartitions(m, n)) {
        const Representation rep = build_seminormal(m, n, shape, false);
        std::map<GroupElement, Matrix> mats;
        for (const auto& g : group) mats.emplace(g, rep.evaluate(g));
        for (std::size_t a = 0; a < count && bad_unit.empty(); ++a) {
            Matrix e(m, rep.dim(), rep.dim());
            for (const auto& [g, c] : table.elements[a].terms()) e += mats.at(g) * c;
            Matrix expected(m, rep.dim(), rep.dim());
            if (auto idx = rep.index_of(table.tableaux[a])) expected(*idx, *idx) = CycRat(m, Rational(1));
            if (e != expected) bad_unit = format_tableau(table.tableaux[a]) + " in " + format_shape(shape);
        }
    }
    cert.add("evaluated p_X is the matrix unit at X, zero on other shapes", bad_unit.empty(), bad_unit);
    return cert;
}

Certificate verify_idempotents_matrix_witness(int m, int n) {
    Certificate cert;
    cert.subject = "idempotent matrix witness m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto& fam = jm_family(m, n);
    std::string bad;
    std::size_t units = 0;
    for (const auto& shape : enum_mpartitions(m, n)) {
        const Representation rep = build_seminormal(m, n, shape, false);
        const std::size_t d = rep.dim();
        std::vector<Matrix> J;
        std::vector<Matrix> Jt;
        for (int k = 1; k <= n; ++k) {
            J.push_back(rep.evaluate(fam.J(k)));
            Jt.push_back(rep.evaluate(fam.Jt(k)));
        }
        const Matrix id = Matrix::identity(m, d);
        // Depth-first over prefix tableaux; a zero prefix kills every extension.
        struct Frame {
            MTableau tab;
            Matrix q;
        };
        std::vector<Frame> stack;
        stack.push_back({MTableau(m, Rows(static_cast<std::size_t>(m))), id});
        while (!stack.empty() && bad.empty()) {
            Frame fr = std::move(stack.back());
            stack.pop_back();
            const int k = fr.tab.n();
            if (k == n) {
                Matrix expected(m, d, d);
                if (auto idx = rep.index_of(fr.tab)) expected(*idx, *idx) = CycRat(m, Rational(1));
                if (fr.q != expected) bad = format_tableau(fr.tab) + " in " + format_shape(shape);
                ++units;
                continue;
            }
            for (const Node& alpha : addable_nodes(fr.tab.shape())) {
                const LevelFactor f = level_factor(fr.tab.shape(), alpha);
                Matrix q = fr.q;
                for (const auto& [c, inv] : f.tilde) {
                    q = q * ((Jt[static_cast<std::size_t>(k)] - id * CycRat(m, Rational(c))) * CycRat(m, inv));
                }
                for (const auto& [diagram, inv] : f.root) {
                    q = q * ((J[static_cast<std::size_t>(k)] - id * root_of_unity(m, diagram)) * inv);
                }
                if (q.is_zero()) continue;
                stack.push_back({fr.tab.with_entry_at(alpha), std::move(q)});
            }
        }
    }
    cert.add("evaluated p_X is the matrix unit at X, zero on other shapes", bad.empty(), bad);
    cert.add("nonzero leaves", true, std::to_string(units));
    return cert;
}

Certificate verify_idempotent_system(int m, int n) {
    Certificate cert;
    cert.subject = "idempotent system m=" + std::to_string(m) + " n=" + std::to_string(n);
    if (idempotents_in_group_algebra_range(m, n)) cert.merge(verify_idempotents_group_algebra(m, n));
    cert.merge(verify_idempotents_matrix_witness(m, n));
    return cert;
}

Certificate verify_T_compatibility(int m, int n) {
    Certificate cert;
    cert.subject = "tableau-algebra relations through p_X m=" + std::to_string(m) + " n=" + std::to_string(n);
    const IdempotentTable table = idempotent_table(m, n);
    std::map<Rows, const AlgebraElement*> by_rows;
    for (std::size_t a = 0; a < table.tableaux.size(); ++a) by_rows.emplace(table.tableaux[a].rows(), &table.elements[a]);
    const AlgebraElement zero = AlgebraElement::zero(m, n);
    std::string bad_t;
    std::string bad_distinct;
    std::string bad_equal;
    for (std::size_t a = 0; a < table.tableaux.size(); ++a) {
        const MTableau& x = table.tableaux[a];
        const AlgebraElement& p = table.elements[a];
        const ContentString cs = content_string(x);
        const CycRat p1 = cs.columns[0].p(m);
        const AlgebraElement t_minus = AlgebraElement::delta(gen_t(m, n)) - AlgebraElement::scalar(m, n, p1);
        if (bad_t.empty() && !(t_minus * p).is_zero()) bad_t = format_tableau(x);
        for (int i = 1; i < n; ++i) {
            const auto& ca = cs.columns[static_cast<std::size_t>(i - 1)];
            const auto& cb = cs.columns[static_cast<std::size_t>(i)];
            const auto y = apply_swap(x, i);
            const AlgebraElement& py = y ? *by_rows.at(y->rows()) : zero;
            const AlgebraElement s = AlgebraElement::delta(gen_s(m, n, i));
            if (ca.root != cb.root) {
                if (bad_distinct.empty() && !(s * p == py * s)) bad_distinct = format_tableau(x) + " i=" + std::to_string(i);
            } else {
                const Rational lhs_c = Rational(ca.content - cb.content).inverse();
                const Rational rhs_c = Rational(cb.content - ca.content).inverse();
                const AlgebraElement lhs = (s + AlgebraElement::scalar(m, n, CycRat(m, lhs_c))) * p;
                const AlgebraElement rhs = py * (s + AlgebraElement::scalar(m, n, CycRat(m, rhs_c)));
                if (bad_equal.empty() && !(lhs == rhs)) bad_equal = format_tableau(x) + " i=" + std::to_string(i);
            }
        }
    }
    cert.add("(t - p(X|1)) p_X = 0", bad_t.empty(), bad_t);
    cert.add("s_i p_X = p_{X^s_i} s_i when roots differ", bad_distinct.empty(), bad_distinct);
    cert.add("(s_i + 1/(c_i - c_{i+1})) p_X = p_{X^s_i} (s_i + 1/(c_{i+1} - c_i)) when roots agree", bad_equal.empty(),
             bad_equal);
    return cert;
}

Certificate verify_idempotent_eigen(int m, int n) {
    Certificate cert;
    cert.subject = "idempotent eigenvalues m=" + std::to_string(m) + " n=" + std::to_string(n);
    const IdempotentTable table = idempotent_table(m, n);
    const auto& fam = jm_family(m, n);
    std::string bad;
    for (std::size_t a = 0; a < table.tableaux.size() && bad.empty(); ++a) {
        const ContentColumn col = content_string(table.tableaux[a]).columns.back();
        const AlgebraElement& p = table.elements[a];
        if (!(fam.J(n) * p == p * col.p(m)) || !(fam.Jt(n) * p == p * Rational(col.content))) {
            bad = format_tableau(table.tableaux[a]);
        }
    }
    cert.add("j_n p_X = p(X|n) p_X, j~_n p_X = c(X|n) p_X", bad.empty(), bad);
    return cert;
}

}  // namespace gmnrep
