#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmnrep/certificate.hpp"
#include "gmnrep/matrix.hpp"
#include "gmnrep/representation.hpp"

namespace gmnrep {

enum class A2Kind { OneDim, TwoDimDistinct, TwoDimEqual };

std::string to_string(A2Kind kind);
/// Accepts "one-dim", "two-dim-distinct", "two-dim-equal". Throws std::invalid_argument.
A2Kind parse_a2_kind(const std::string& text);

/// a, b are root labels in [1, m] (xi_a = zeta^(a-1)); at, bt stand for a~, b~.
struct A2Params {
    int m = 1;
    int a = 1;
    int b = 1;
    Rational at;
    Rational bt;
    int eps = 1;
};

struct A2Matrices {
    int m = 1;
    Matrix x, y, xt, yt, s;
};

struct A2Rep {
    A2Kind kind = A2Kind::OneDim;
    A2Params params;
    A2Matrices mats;
};

/**
 * One-dim: x, y -> a; x~ -> a~; y~ -> a~ + eps; s -> eps.
 * Two-dim distinct: s swap, x = diag(a, b), y = diag(b, a), x~ = diag(a~, b~), y~ = diag(b~, a~), a != b.
 * Two-dim equal: s = [[r, 1 - r^2], [1, -r]] with r = (b~ - a~)^{-1}, x = y = a, x~, y~ as above, b~ != a~.
 * Throws std::domain_error on a violated constraint.
 */
A2Rep build_a2(A2Kind kind, const A2Params& params);

/// xy = yx, x~y~ = y~x~, x x~ = x~ x, y x~ = x~ y, y = sxs, x^m = 1,
/// y~ = s x~ s + (1/m) sum_p x^p s x^{m-p}, s^2 = 1.
Certificate verify_a2_relations(const A2Matrices& mats);
/// Pairwise commutation of x, y, x~, y~ and Spec(x) within the m-th roots of unity (x diagonal).
Certificate a2_commutation_check(const A2Matrices& mats);

struct A2Irreducibility {
    bool irreducible = true;
    /// The closed criterion for the kind (b~ - a~ not in {1, -1} for two-dim-equal).
    bool criterion = true;
    /// Common eigenvector of all five matrices when one exists.
    std::optional<std::vector<CycRat>> invariant_vector;
};
/// Irreducibility by exact common-eigenvector search, reported next to the closed criterion.
A2Irreducibility is_irreducible_a2(const A2Rep& rep);

/// Every kind over all root labels and a~, b~ in [lo, hi]: relations, commuting family, and the
/// exact search agreeing with the closed irreducibility criterion, with a vector on the reducible side.
Certificate a2_grid_check(int m, int lo, int hi);

/// (j_i, j_{i+1}, j~_i, j~_{i+1}, s_i) evaluated in rep, 1 <= i <= n-1.
A2Matrices a2_from_representation(const Representation& rep, int i);

}  // namespace gmnrep
