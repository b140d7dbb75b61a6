#include "gmnrep/jucys_murphy.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gmnrep {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

AlgebraElement jm_j(int m, int n, int i) {
    check_index(i, 1, n, "jm_j");
    // Built by the recursion rather than the closed form t_i.
    GroupElement x = gen_t(m, n);
    for (int k = 1; k < i; ++k) {
        GroupElement s = gen_s(m, n, k);
        x = multiply(s, multiply(x, s));
    }
    return AlgebraElement::delta(x);
}

AlgebraElement jm_jtilde(int m, int n, int i) {
    check_index(i, 1, n, "jm_jtilde");
    AlgebraElement jt = AlgebraElement::zero(m, n);
    GroupElement ji = gen_t(m, n);
    const Rational inv_m(1, m);
    for (int k = 1; k < i; ++k) {
        const AlgebraElement s = AlgebraElement::delta(gen_s(m, n, k));
        AlgebraElement next = s * jt * s;
        for (int p = 1; p <= m; ++p) {
            GroupElement term = multiply(power(ji, p), multiply(gen_s(m, n, k), power(ji, -p)));
            next.add_term(term, CycRat(m, inv_m));
        }
        jt = std::move(next);
        GroupElement sk = gen_s(m, n, k);
        ji = multiply(sk, multiply(ji, sk));
    }
    return jt;
}

AlgebraElement projector_P(int m, int n, int i) {
    check_index(i, 2, n, "projector_P");
    const GroupElement prev = gen_t_i(m, n, i - 1);
    const GroupElement cur = gen_t_i(m, n, i);
    AlgebraElement p = AlgebraElement::zero(m, n);
    for (int k = 1; k <= m; ++k) p.add_term(multiply(power(prev, k), power(cur, -k)), CycRat(m, Rational(1, m)));
    return p;
}

AlgebraElement intertwiner_utilde(int m, int n, int i) {
    check_index(i, 1, n - 1, "intertwiner_utilde");
    return alg_commutator(AlgebraElement::delta(gen_s(m, n, i)), jm_jtilde(m, n, i));
}

AlgebraElement intertwiner_utilde_alt(int m, int n, int i) {
    check_index(i, 1, n - 1, "intertwiner_utilde_alt");
    const AlgebraElement s = AlgebraElement::delta(gen_s(m, n, i));
    return s * (jm_jtilde(m, n, i) - jm_jtilde(m, n, i + 1)) + projector_P(m, n, i + 1);
}

AlgebraElement baxterize(int m, int n, int i, const Rational& alpha, const Rational& beta) {
    check_index(i, 1, n - 1, "baxterize");
    if (alpha == beta) throw std::domain_error("baxterize: pole at alpha == beta");
    AlgebraElement b = AlgebraElement::delta(gen_s(m, n, i));
    b.add_term(identity(m, n), CycRat(m, (alpha - beta).inverse()));
    return b;
}

const JMFamily& jm_family(int m, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<JMFamily>> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find({m, n});
        if (it != memo.end()) return *it->second;
    }
    auto fam = std::make_unique<JMFamily>();
    fam->m = m;
    fam->n = n;
    for (int i = 1; i <= n; ++i) {
        fam->j.push_back(jm_j(m, n, i));
        fam->jt.push_back(jm_jtilde(m, n, i));
    }
    for (int i = 2; i <= n; ++i) fam->P.push_back(projector_P(m, n, i));
    for (int i = 1; i < n; ++i) fam->u.push_back(intertwiner_utilde(m, n, i));
    std::lock_guard lock(mu);
    auto [it, inserted] = memo.emplace(std::make_pair(m, n), std::move(fam));
    return *it->second;
}

Certificate jm_commutativity_check(int m, int n) {
    Certificate cert;
    cert.subject = "JM commutativity m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto& fam = jm_family(m, n);
    std::vector<std::pair<std::string, const AlgebraElement*>> all;
    for (int i = 1; i <= n; ++i) all.emplace_back("j_" + std::to_string(i), &fam.J(i));
    for (int i = 1; i <= n; ++i) all.emplace_back("j~_" + std::to_string(i), &fam.Jt(i));
    std::string bad;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            ++pairs;
            if (bad.empty() && !alg_commutator(*all[a].second, *all[b].second).is_zero()) {
                bad = all[a].first + ", " + all[b].first;
            }
        }
    }
    cert.add("all pairs commute (" + std::to_string(pairs) + " pairs)", bad.empty(), bad);
    return cert;
}

Certificate jm_locality_check(int m, int n) {
    Certificate cert;
    cert.subject = "JM locality m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto& fam = jm_family(m, n);
    std::string bad;
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n - 1; ++k) {
            if (k == i || k == i - 1) continue;
            const AlgebraElement s = AlgebraElement::delta(gen_s(m, n, k));
            if (bad.empty() && (!alg_commutator(s, fam.J(i)).is_zero() || !alg_commutator(s, fam.Jt(i)).is_zero())) {
                bad = "s_" + std::to_string(k) + " with index " + std::to_string(i);
            }
        }
    }
    cert.add("[s_k, j_i] = [s_k, j~_i] = 0 for k > i, k < i-1", bad.empty(), bad);
    return cert;
}

Certificate intertwiner_identities_check(int m, int n) {
    Certificate cert;
    cert.subject = "intertwiner identities m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto& fam = jm_family(m, n);
    for (int i = 1; i < n; ++i) {
        const std::string u = "u~_" + std::to_string(i + 1);
        const AlgebraElement& U = fam.U(i);
        const AlgebraElement& P = fam.Proj(i + 1);
        cert.add(u + " closed forms agree", U == intertwiner_utilde_alt(m, n, i));
        bool exch_j = U * fam.J(i) == fam.J(i + 1) * U && U * fam.J(i + 1) == fam.J(i) * U;
        bool exch_jt = U * fam.Jt(i) == fam.Jt(i + 1) * U && U * fam.Jt(i + 1) == fam.Jt(i) * U;
        for (int k = 1; k <= n; ++k) {
            if (k == i || k == i + 1) continue;
            exch_j = exch_j && U * fam.J(k) == fam.J(k) * U;
            exch_jt = exch_jt && U * fam.Jt(k) == fam.Jt(k) * U;
        }
        cert.add(u + " exchanges j_" + std::to_string(i) + ", j_" + std::to_string(i + 1) + " and fixes the rest", exch_j);
        cert.add(u + " exchanges j~_" + std::to_string(i) + ", j~_" + std::to_string(i + 1) + " and fixes the rest",
                 exch_jt);
        const AlgebraElement d = fam.Jt(i) - fam.Jt(i + 1);
        const AlgebraElement sq = U * U;
        cert.add(u + "^2 = -(j~_i - j~_{i+1})^2 + P_{i+1}", sq == -(d * d) + P);
        cert.add(u + "^2 = -(j~_i - j~_{i+1} + P)(j~_i - j~_{i+1} - P)", sq == -((d + P) * (d - P)));
        cert.add("P_" + std::to_string(i + 1) + " idempotent", P * P == P);
        cert.add("P_" + std::to_string(i + 1) + " commutes with j~_i, j~_{i+1}",
                 alg_commutator(P, fam.Jt(i)).is_zero() && alg_commutator(P, fam.Jt(i + 1)).is_zero());
    }
    for (int i = 2; i < n; ++i) {
        const AlgebraElement& a = fam.U(i - 1);
        const AlgebraElement& b = fam.U(i);
        cert.add("u~_" + std::to_string(i) + " u~_" + std::to_string(i + 1) + " u~_" + std::to_string(i) + " = u~_" +
                     std::to_string(i + 1) + " u~_" + std::to_string(i) + " u~_" + std::to_string(i + 1),
                 a * b * a == b * a * b);
    }
    return cert;
}

Certificate baxter_check(int m, int n, const Rational& alpha, const Rational& beta, const Rational& gamma) {
    Certificate cert;
    cert.subject = "Baxterized elements m=" + std::to_string(m) + " n=" + std::to_string(n);
    for (int i = 1; i < n; ++i) {
        const Rational d = alpha - beta;
        const AlgebraElement lhs = baxterize(m, n, i, alpha, beta) * baxterize(m, n, i, beta, alpha);
        const AlgebraElement rhs = AlgebraElement::scalar(m, n, CycRat(m, Rational(1) - (d * d).inverse()));
        cert.add("s_" + std::to_string(i) + "(a,b) s_" + std::to_string(i) + "(b,a) = 1 - (a-b)^-2", lhs == rhs);
    }
    for (int i = 1; i + 1 < n; ++i) {
        const AlgebraElement lhs =
            baxterize(m, n, i, alpha, beta) * baxterize(m, n, i + 1, alpha, gamma) * baxterize(m, n, i, beta, gamma);
        const AlgebraElement rhs = baxterize(m, n, i + 1, beta, gamma) * baxterize(m, n, i, alpha, gamma) *
                                   baxterize(m, n, i + 1, alpha, beta);
        cert.add("Yang-Baxter at i=" + std::to_string(i), lhs == rhs);
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const AlgebraElement a = baxterize(m, n, i, alpha, beta);
            const AlgebraElement b = baxterize(m, n, j, beta, gamma);
            cert.add("s_" + std::to_string(i) + "(a,b) s_" + std::to_string(j) + "(b,c) commute", a * b == b * a);
        }
    }
    return cert;
}

}  // namespace gmnrep
