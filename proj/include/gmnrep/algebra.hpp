#pragma once

#include <map>

#include "gmnrep/cyclotomic.hpp"
#include "gmnrep/group.hpp"

namespace gmnrep {

/**
 * Finitely supported element of the group ring Q(zeta_m) G(m,1,n).
 * Terms are kept in the canonical GroupElement order and never carry a zero coefficient.
 */
class AlgebraElement {
public:
    using Terms = std::map<GroupElement, CycRat>;

    AlgebraElement(int m, int n) : m_(m), n_(n) {}

    static AlgebraElement zero(int m, int n) { return {m, n}; }
    static AlgebraElement one(int m, int n);
    static AlgebraElement delta(const GroupElement& g);
    static AlgebraElement delta(const GroupElement& g, const CycRat& c);
    /// c times the identity element.
    static AlgebraElement scalar(int m, int n, const CycRat& c);

    int m() const { return m_; }
    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    CycRat coefficient(const GroupElement& g) const;

    /// Adds c to the coefficient of g, pruning the term if it cancels.
    void add_term(const GroupElement& g, const CycRat& c);

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const CycRat& c);
    friend AlgebraElement operator*(const AlgebraElement& a, const Rational& c);
    AlgebraElement& operator+=(const AlgebraElement& b);
    AlgebraElement& operator-=(const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int m_;
    int n_;
    Terms terms_;
};

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_scale(const AlgebraElement& a, const CycRat& c);
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
/// ab - ba
AlgebraElement alg_commutator(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace gmnrep
