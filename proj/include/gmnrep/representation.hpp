#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmnrep/algebra.hpp"
#include "gmnrep/certificate.hpp"
#include "gmnrep/matrix.hpp"
#include "gmnrep/partition.hpp"
#include "gmnrep/tableau.hpp"

namespace gmnrep {

/// Vector in the seminormal basis, keyed by basis position. Never stores zeros.
using SparseVector = std::map<std::size_t, CycRat>;

/**
 * Seminormal representation V_shape of G(m,1,n).
 *
 * The basis is the standard m-tableaux of the shape in canonical content-string
 * order. t acts by p(X|1); s_i sends X to X^{s_i} when p(X|i) != p(X|i+1), and
 * otherwise to d^{-1} X + (1 + d^{-1}) X^{s_i} with d = c(X|i+1) - c(X|i)
 * (the second term dropped when X^{s_i} is not standard). All matrices act on
 * column vectors.
 */
class Representation {
public:
    Representation() = default;

    int m() const { return m_; }
    int n() const { return n_; }
    const MPartition& shape() const { return shape_; }
    const std::vector<MTableau>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::optional<std::size_t> index_of(const MTableau& tab) const;
    const std::vector<ContentString>& strings() const { return strings_; }

    /// False for representations built without dense generator matrices.
    bool has_matrices() const { return dense_; }
    const Matrix& mat_t() const { return mat_t_; }
    /// i in [1, n-1].
    const Matrix& mat_s(int i) const { return mat_s_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Matrix>& mat_s() const { return mat_s_; }

    /// Nonzero entries (row, value) of column j of s_i.
    const std::vector<std::pair<std::size_t, CycRat>>& s_column(int i, std::size_t j) const;
    const CycRat& t_eigenvalue(std::size_t j) const { return t_diag_[j]; }

    SparseVector apply_s(int i, const SparseVector& v) const;
    SparseVector apply_t(const SparseVector& v, int power = 1) const;
    /// t_k^r acting through s_{k-1} .. s_1 t^r s_1 .. s_{k-1}.
    SparseVector apply_t_k(int k, int r, const SparseVector& v) const;
    SparseVector apply(const GroupElement& g, const SparseVector& v) const;
    SparseVector apply(const AlgebraElement& a, const SparseVector& v) const;

    Matrix evaluate(const GroupElement& g) const;
    /// Linear extension of the representation map.
    Matrix evaluate(const AlgebraElement& a) const;

    /// Rebuilds from exported generator matrices (for instance a cache entry). The
    /// basis must be the standard tableaux of shape; throws std::invalid_argument otherwise.
    static Representation from_matrices(int m, int n, const MPartition& shape, std::vector<MTableau> basis,
                                        Matrix t, std::vector<Matrix> s);

    friend Representation build_seminormal(int m, int n, const MPartition& shape, bool dense);

private:
    int m_ = 1;
    int n_ = 0;
    MPartition shape_;
    std::vector<MTableau> basis_;
    std::vector<ContentString> strings_;
    std::map<std::vector<std::vector<std::vector<int>>>, std::size_t> index_;
    std::vector<CycRat> t_diag_;
    // cols_[i-1][j]: column j of s_i.
    std::vector<std::vector<std::vector<std::pair<std::size_t, CycRat>>>> cols_;
    bool dense_ = false;
    Matrix mat_t_;
    std::vector<Matrix> mat_s_;
};

/// Throws std::invalid_argument when |shape| != n, shape.m() != m or n < 1.
/// dense = false skips the dense generator matrices (sparse action only).
Representation build_seminormal(int m, int n, const MPartition& shape, bool dense = true);

SparseVector basis_vector(int m, std::size_t j);

/// Every defining relation of G(m,1,n) as an exact matrix identity.
Certificate verify_relations(const Representation& rep);
/// rep(uv) = rep(u) rep(v) on random word pairs.
Certificate verify_homomorphism(const Representation& rep, int pairs, unsigned seed);
/// evaluate(j_i), evaluate(j~_i) are diagonal and match each basis content string.
Certificate jm_diagonal_check(const Representation& rep);
/// JM eigenvalues of one basis vector computed through the sparse action only.
Certificate jm_vector_check(const Representation& rep, std::size_t j);
/// Diagonal of evaluate(j~_i) lies in [1-i, i-1].
Certificate spectrum_bound_check(const Representation& rep);
/// Column structure of s_i against the eigenvalue columns at positions i and i+1.
Certificate adjacent_transposition_check(const Representation& rep);

/// <X,X> = prod over j<k with p_j = p_k, c_j not in {c_k, c_k +- 1} of (c_j - c_k - 1)/(c_j - c_k).
std::vector<Rational> hermitian_form(const Representation& rep);
/// M^dagger G M = G for every generator matrix M, G = diag(form).
Certificate verify_form_invariance(const Representation& rep, const std::vector<Rational>& form);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;
/// Generators in the rescaled basis sqrt(form) X, as complex doubles: t first, then s_1..s_{n-1}.
std::vector<ComplexMatrix> unitary_matrices(const Representation& rep, const std::vector<Rational>& form);
/// max |M^dagger M - I| over the given matrices.
double unitary_residual(const std::vector<ComplexMatrix>& mats);

/// u~_{i+1} maps X to (c_i - c_{i+1} - delta(p_i, p_{i+1})) X^{s_i}; both closed forms agree;
/// evaluate(P_{i+1}) is idempotent.
Certificate intertwiner_action_check(const Representation& rep);

struct BranchBlock {
    Node node;
    MPartition sub_shape;
    std::vector<std::size_t> positions;  // basis positions of rep, ordered by the sub-basis
};
/// Restriction to G(m,1,n-1): blocks per removable node, each compared with a fresh build.
Certificate branching(const Representation& rep, std::vector<BranchBlock>* blocks = nullptr);

/// Distinct JM strings plus strong connectivity of the generator graph.
Certificate irreducibility_check(const Representation& rep);

struct CompletenessReport {
    std::uint64_t sum_sq = 0;
    std::uint64_t order = 0;
    std::size_t shapes = 0;
    Certificate certificate;
};
/// Sum of dim^2 against m^n n!, plus disjoint JM spectra across shapes.
CompletenessReport completeness_check(int m, int n);

}  // namespace gmnrep
