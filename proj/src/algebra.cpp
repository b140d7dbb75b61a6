#include "gmnrep/algebra.hpp"

#include <stdexcept>

namespace gmnrep {

namespace {

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.m() != b.m() || a.n() != b.n()) throw std::domain_error("AlgebraElement: mismatched (m, n)");
}

}  // namespace

AlgebraElement AlgebraElement::one(int m, int n) { return delta(identity(m, n)); }

AlgebraElement AlgebraElement::delta(const GroupElement& g) { return delta(g, CycRat(g.m(), Rational(1))); }

AlgebraElement AlgebraElement::delta(const GroupElement& g, const CycRat& c) {
    AlgebraElement a(g.m(), g.n());
    a.add_term(g, c);
    return a;
}

AlgebraElement AlgebraElement::scalar(int m, int n, const CycRat& c) { return delta(identity(m, n), c); }

CycRat AlgebraElement::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CycRat(m_) : it->second;
}

void AlgebraElement::add_term(const GroupElement& g, const CycRat& c) {
    if (g.m() != m_ || g.n() != n_) throw std::domain_error("AlgebraElement: group element from a different group");
    if (c.order() != m_) throw std::domain_error("AlgebraElement: coefficient of wrong order");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(m_, n_);
    for (const auto& [g, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), g, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
    check_same(*this, b);
    for (const auto& [g, c] : b.terms_) add_term(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
    check_same(*this, b);
    for (const auto& [g, c] : b.terms_) add_term(g, -c);
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a);
    r += b;
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a);
    r -= b;
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a, b);
    AlgebraElement r(a.m_, a.n_);
    for (const auto& [g, x] : a.terms_) {
        for (const auto& [h, y] : b.terms_) r.add_term(multiply(g, h), x * y);
    }
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const CycRat& c) {
    AlgebraElement r(a.m_, a.n_);
    if (c.is_zero()) return r;
    for (const auto& [g, x] : a.terms_) r.add_term(g, x * c);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const Rational& c) { return a * CycRat(a.m(), c); }

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) { return a - b; }
AlgebraElement alg_scale(const AlgebraElement& a, const CycRat& c) { return a * c; }
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
AlgebraElement alg_commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

}  // namespace gmnrep
