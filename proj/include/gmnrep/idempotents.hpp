#pragma once

#include <vector>

#include "gmnrep/algebra.hpp"
#include "gmnrep/certificate.hpp"
#include "gmnrep/tableau.hpp"

namespace gmnrep {

/**
 * Primitive idempotent p_X by the addable-node recursion: p_empty = 1 and
 * p_X = p_{X_mu} prod_{beta: c(beta) != c(alpha)} (j~_k - c(beta)) / (c(alpha) - c(beta))
 *                 prod_{beta: p(beta) != p(alpha)} (j_k - p(beta)) / (p(alpha) - p(beta)),
 * beta running over the addable nodes of mu, alpha the node holding k = |X|.
 * Computed in the group algebra of G(m,1,ambient_n), ambient_n >= |X|. Memoized.
 */
AlgebraElement build_idempotent(const MTableau& tab, int ambient_n);
inline AlgebraElement build_idempotent(const MTableau& tab) { return build_idempotent(tab, tab.n()); }

struct IdempotentTable {
    int m = 1;
    int n = 0;
    std::vector<MTableau> tableaux;  // canonical order
    std::vector<AlgebraElement> elements;
};
IdempotentTable idempotent_table(int m, int n);

/// Group-algebra sizes for which the exact group-algebra checks run.
bool idempotents_in_group_algebra_range(int m, int n);

/// Orthogonality, p_X^2 = p_X and sum = 1 in the group algebra, plus the matrix-unit
/// witness of each p_X evaluated in every seminormal representation.
Certificate verify_idempotents_group_algebra(int m, int n);
/// Matrix-unit witness computed through the recursion applied to evaluated JM matrices.
Certificate verify_idempotents_matrix_witness(int m, int n);
/// Both routes where the group algebra is in range, the matrix witness otherwise.
Certificate verify_idempotent_system(int m, int n);

/// With X -> p_X the three relation families of the tableau algebra hold in the group algebra.
Certificate verify_T_compatibility(int m, int n);
/// j_n p_X = p(X|n) p_X and j~_n p_X = c(X|n) p_X.
Certificate verify_idempotent_eigen(int m, int n);

}  // namespace gmnrep
