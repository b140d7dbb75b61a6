#pragma once

#include <vector>

#include "gmnrep/algebra.hpp"
#include "gmnrep/certificate.hpp"

namespace gmnrep {

/// j_i = t_i (j_1 = t, j_{i+1} = s_i j_i s_i), 1 <= i <= n.
AlgebraElement jm_j(int m, int n, int i);

/// j~_1 = 0, j~_{i+1} = s_i j~_i s_i + (1/m) sum_{p=1}^{m} j_i^p s_i j_i^{-p}.
AlgebraElement jm_jtilde(int m, int n, int i);

/// P_i = (1/m) sum_{p=1}^{m} j_{i-1}^p j_i^{-p}, 2 <= i <= n.
AlgebraElement projector_P(int m, int n, int i);

/// u~_{i+1} = s_i j~_i - j~_i s_i, 1 <= i <= n-1 (commutator form).
AlgebraElement intertwiner_utilde(int m, int n, int i);

/// u~_{i+1} = s_i (j~_i - j~_{i+1}) + P_{i+1} (second closed form).
AlgebraElement intertwiner_utilde_alt(int m, int n, int i);

/// Baxterized element s_i(alpha, beta) = s_i + 1/(alpha - beta). Throws std::domain_error when alpha == beta.
AlgebraElement baxterize(int m, int n, int i, const Rational& alpha, const Rational& beta);

/// j_i, j~_i, P_i and u~_{i+1} for one (m, n), computed once and shared.
struct JMFamily {
    int m = 1;
    int n = 0;
    std::vector<AlgebraElement> j;   // j[i-1] = j_i
    std::vector<AlgebraElement> jt;  // jt[i-1] = j~_i
    std::vector<AlgebraElement> P;   // P[i-2] = P_i, i >= 2
    std::vector<AlgebraElement> u;   // u[i-1] = u~_{i+1}

    const AlgebraElement& J(int i) const { return j.at(static_cast<std::size_t>(i - 1)); }
    const AlgebraElement& Jt(int i) const { return jt.at(static_cast<std::size_t>(i - 1)); }
    const AlgebraElement& Proj(int i) const { return P.at(static_cast<std::size_t>(i - 2)); }
    const AlgebraElement& U(int i) const { return u.at(static_cast<std::size_t>(i - 1)); }
};

/// Thread-safe memo over (m, n).
const JMFamily& jm_family(int m, int n);

/// [a, b] = 0 for every pair a, b in {j_1..j_n, j~_1..j~_n}.
Certificate jm_commutativity_check(int m, int n);
/// [s_k, j_i] = [s_k, j~_i] = 0 for k > i and k < i-1.
Certificate jm_locality_check(int m, int n);
/// Closed forms of u~ agree; exchange identities with j and j~; Artin relation; square formula;
/// P_{i+1} idempotent and commuting with j~_i, j~_{i+1}.
Certificate intertwiner_identities_check(int m, int n);
/// Unitarity, Yang-Baxter and far commutation of Baxterized elements at fixed spectral parameters.
Certificate baxter_check(int m, int n, const Rational& alpha, const Rational& beta, const Rational& gamma);

}  // namespace gmnrep
