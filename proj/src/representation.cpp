#include "gmnrep/representation.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gmnrep/group.hpp"
#include "gmnrep/jucys_murphy.hpp"

namespace gmnrep {

namespace {

void accumulate(SparseVector& acc, std::size_t idx, const CycRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

std::string str(const CycRat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string where(const Representation& rep) { return "shape " + format_shape(rep.shape()); }

int mod(std::int64_t a, int m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

SparseVector basis_vector(int m, std::size_t j) { return SparseVector{{j, CycRat(m, Rational(1))}}; }

Representation build_seminormal(int m, int n, const MPartition& shape, bool dense) {
    if (n < 1) throw std::invalid_argument("build_seminormal: n must be at least 1");
    if (shape.m() != m) throw std::invalid_argument("build_seminormal: shape has the wrong number of diagrams");
    if (shape.size() != n) throw std::invalid_argument("build_seminormal: shape size differs from n");
    Representation rep;
    rep.m_ = m;
    rep.n_ = n;
    rep.shape_ = shape;
    rep.basis_ = enum_standard_mtableaux(shape);
    const std::size_t dim = rep.basis_.size();
    for (std::size_t j = 0; j < dim; ++j) {
        rep.index_.emplace(rep.basis_[j].rows(), j);
        rep.strings_.push_back(content_string(rep.basis_[j]));
        rep.t_diag_.push_back(root_of_unity(m, rep.basis_[j].node_of(1).diagram));
    }
    rep.cols_.assign(static_cast<std::size_t>(n - 1), std::vector<std::vector<std::pair<std::size_t, CycRat>>>(dim));
    for (int i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& s = rep.strings_[j].columns;
            const auto& a = s[static_cast<std::size_t>(i - 1)];
            const auto& b = s[static_cast<std::size_t>(i)];
            const auto swapped = apply_swap(rep.basis_[j], i);
            auto& col = rep.cols_[static_cast<std::size_t>(i - 1)][j];
            if (a.root != b.root) {
                col.emplace_back(*rep.index_of(*swapped), CycRat(m, Rational(1)));
                continue;
            }
            const Rational inv = Rational(b.content - a.content).inverse();
            col.emplace_back(j, CycRat(m, inv));
            if (swapped) col.emplace_back(*rep.index_of(*swapped), CycRat(m, Rational(1) + inv));
        }
    }
    rep.dense_ = dense;
    if (dense) {
        rep.mat_t_ = Matrix::diagonal(rep.t_diag_);
        for (int i = 1; i < n; ++i) {
            Matrix s(m, dim, dim);
            for (std::size_t j = 0; j < dim; ++j) {
                for (const auto& [row, v] : rep.s_column(i, j)) s(row, j) = v;
            }
            rep.mat_s_.push_back(std::move(s));
        }
    }
    return rep;
}

Representation Representation::from_matrices(int m, int n, const MPartition& shape, std::vector<MTableau> basis,
                                             Matrix t, std::vector<Matrix> s) {
    if (n < 1 || shape.m() != m || shape.size() != n) throw std::invalid_argument("from_matrices: bad shape");
    if (s.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("from_matrices: expected n-1 matrices s");
    const std::size_t dim = basis.size();
    if (t.rows() != dim || t.cols() != dim || t.order() != m || !t.is_diagonal()) {
        throw std::invalid_argument("from_matrices: t must be a diagonal dim x dim matrix");
    }
    Representation rep;
    rep.m_ = m;
    rep.n_ = n;
    rep.shape_ = shape;
    rep.basis_ = std::move(basis);
    for (std::size_t j = 0; j < dim; ++j) {
        if (!(rep.basis_[j].shape() == shape)) throw std::invalid_argument("from_matrices: basis tableau of another shape");
        rep.index_.emplace(rep.basis_[j].rows(), j);
        rep.strings_.push_back(content_string(rep.basis_[j]));
        rep.t_diag_.push_back(t(j, j));
    }
    if (rep.index_.size() != dim) throw std::invalid_argument("from_matrices: repeated basis tableau");
    rep.cols_.assign(static_cast<std::size_t>(n - 1), std::vector<std::vector<std::pair<std::size_t, CycRat>>>(dim));
    for (int i = 1; i < n; ++i) {
        const Matrix& si = s[static_cast<std::size_t>(i - 1)];
        if (si.rows() != dim || si.cols() != dim || si.order() != m) throw std::invalid_argument("from_matrices: bad s");
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t r = 0; r < dim; ++r) {
                if (!si(r, j).is_zero()) rep.cols_[static_cast<std::size_t>(i - 1)][j].emplace_back(r, si(r, j));
            }
        }
    }
    rep.dense_ = true;
    rep.mat_t_ = std::move(t);
    rep.mat_s_ = std::move(s);
    return rep;
}

std::optional<std::size_t> Representation::index_of(const MTableau& tab) const {
    auto it = index_.find(tab.rows());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::pair<std::size_t, CycRat>>& Representation::s_column(int i, std::size_t j) const {
    if (i < 1 || i >= n_) throw std::out_of_range("s_column: index outside [1, n-1]");
    return cols_[static_cast<std::size_t>(i - 1)][j];
}

SparseVector Representation::apply_s(int i, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [j, c] : v) {
        for (const auto& [row, x] : s_column(i, j)) accumulate(out, row, c * x);
    }
    return out;
}

SparseVector Representation::apply_t(const SparseVector& v, int power) const {
    SparseVector out;
    for (const auto& [j, c] : v) accumulate(out, j, c * t_diag_[j].pow(power));
    return out;
}

SparseVector Representation::apply_t_k(int k, int r, const SparseVector& v) const {
    if (k < 1 || k > n_) throw std::out_of_range("apply_t_k: index outside [1, n]");
    if (mod(r, m_) == 0) return v;
    SparseVector w = v;
    for (int a = k - 1; a >= 1; --a) w = apply_s(a, w);
    w = apply_t(w, mod(r, m_));
    for (int a = 1; a < k; ++a) w = apply_s(a, w);
    return w;
}

SparseVector Representation::apply(const GroupElement& g, const SparseVector& v) const {
    if (g.m() != m_ || g.n() != n_) throw std::domain_error("Representation::apply: group mismatch");
    SparseVector w = v;
    const auto word = permutation_word(g.perm());
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = apply_s(*it, w);
    for (int k = n_; k >= 1; --k) w = apply_t_k(k, g.residues()[static_cast<std::size_t>(k - 1)], w);
    return w;
}

SparseVector Representation::apply(const AlgebraElement& a, const SparseVector& v) const {
    if (a.m() != m_ || a.n() != n_) throw std::domain_error("Representation::apply: algebra mismatch");
    SparseVector out;
    for (const auto& [g, c] : a.terms()) {
        for (const auto& [j, x] : apply(g, v)) accumulate(out, j, c * x);
    }
    return out;
}

Matrix Representation::evaluate(const GroupElement& g) const {
    Matrix r(m_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& [i, c] : apply(g, basis_vector(m_, j))) r(i, j) = c;
    }
    return r;
}

Matrix Representation::evaluate(const AlgebraElement& a) const {
    Matrix r(m_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& [i, c] : apply(a, basis_vector(m_, j))) r(i, j) = c;
    }
    return r;
}

Certificate verify_relations(const Representation& rep) {
    if (!rep.has_matrices()) throw std::logic_error("verify_relations: representation built without matrices");
    Certificate cert;
    cert.subject = "relations, " + where(rep);
    const int m = rep.m();
    const int n = rep.n();
    const Matrix id = Matrix::identity(m, rep.dim());
    const Matrix& t = rep.mat_t();
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const Matrix& a = rep.mat_s(i);
        const Matrix& b = rep.mat_s(i + 1);
        cert.add("s" + std::to_string(i) + " s" + std::to_string(i + 1) + " s" + std::to_string(i) + " = s" +
                     std::to_string(i + 1) + " s" + std::to_string(i) + " s" + std::to_string(i + 1),
                 a * b * a == b * a * b);
    }
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            cert.add("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) + " s" +
                         std::to_string(i),
                     rep.mat_s(i) * rep.mat_s(j) == rep.mat_s(j) * rep.mat_s(i));
        }
    }
    for (int i = 1; i <= n - 1; ++i) cert.add("s" + std::to_string(i) + "^2 = 1", rep.mat_s(i) * rep.mat_s(i) == id);
    if (n >= 2) {
        const Matrix& s1 = rep.mat_s(1);
        cert.add("t s1 t s1 = s1 t s1 t", t * s1 * t * s1 == s1 * t * s1 * t);
    }
    for (int i = 2; i <= n - 1; ++i) {
        cert.add("t s" + std::to_string(i) + " = s" + std::to_string(i) + " t", t * rep.mat_s(i) == rep.mat_s(i) * t);
    }
    cert.add("t^m = 1", t.pow(static_cast<unsigned>(m)) == id);
    return cert;
}

Certificate verify_homomorphism(const Representation& rep, int pairs, unsigned seed) {
    if (!rep.has_matrices()) throw std::logic_error("verify_homomorphism: representation built without matrices");
    Certificate cert;
    cert.subject = "homomorphism, " + where(rep);
    const int m = rep.m();
    const int n = rep.n();
    std::mt19937 rng(seed);
    auto random_word = [&] {
        Word w;
        const int len = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int k = 0; k < len; ++k) {
            Letter l;
            if (n < 2 || std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                l.kind = Letter::Kind::T;
                l.power = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
            } else {
                l.kind = Letter::Kind::S;
                l.index = std::uniform_int_distribution<int>(1, n - 1)(rng);
            }
            w.push_back(l);
        }
        return w;
    };
    auto word_matrix = [&](const Word& w) {
        Matrix r = Matrix::identity(m, rep.dim());
        for (const auto& l : w) {
            if (l.kind == Letter::Kind::T) {
                r = r * rep.mat_t().pow(static_cast<unsigned>(mod(l.power, m)));
            } else {
                r = r * rep.mat_s(l.index).pow(static_cast<unsigned>(mod(l.power, 2)));
            }
        }
        return r;
    };
    for (int k = 0; k < pairs; ++k) {
        const Word u = random_word();
        const Word v = random_word();
        const GroupElement gu = evaluate_word(m, n, u);
        const GroupElement gv = evaluate_word(m, n, v);
        const Matrix mu = rep.evaluate(gu);
        const Matrix mv = rep.evaluate(gv);
        const std::string label = format_word(u) + " | " + format_word(v);
        cert.add("rep(u) from word, " + label, mu == word_matrix(u));
        cert.add("rep(uv) = rep(u) rep(v), " + label, rep.evaluate(multiply(gu, gv)) == mu * mv);
    }
    return cert;
}

Certificate jm_diagonal_check(const Representation& rep) {
    Certificate cert;
    cert.subject = "jm diagonal, " + where(rep);
    const int m = rep.m();
    const auto& fam = jm_family(m, rep.n());
    for (int i = 1; i <= rep.n(); ++i) {
        const Matrix e = rep.evaluate(fam.J(i));
        const Matrix f = rep.evaluate(fam.Jt(i));
        std::string bad;
        if (!e.is_diagonal()) bad = "j_" + std::to_string(i) + " not diagonal";
        if (bad.empty() && !f.is_diagonal()) bad = "j~_" + std::to_string(i) + " not diagonal";
        for (std::size_t x = 0; bad.empty() && x < rep.dim(); ++x) {
            const auto& col = rep.strings()[x].columns[static_cast<std::size_t>(i - 1)];
            if (e(x, x) != col.p(m)) {
                bad = "j_" + std::to_string(i) + " eigenvalue " + str(e(x, x)) + " on " + format_tableau(rep.basis()[x]);
            } else if (f(x, x) != CycRat(m, Rational(col.content))) {
                bad = "j~_" + std::to_string(i) + " eigenvalue " + str(f(x, x)) + " on " +
                      format_tableau(rep.basis()[x]);
            }
        }
        cert.add("j_" + std::to_string(i) + ", j~_" + std::to_string(i) + " diagonal with content string entries",
                 bad.empty(), bad);
    }
    return cert;
}

Certificate jm_vector_check(const Representation& rep, std::size_t j) {
    Certificate cert;
    cert.subject = "jm eigenvector " + format_tableau(rep.basis().at(j)) + ", " + where(rep);
    const int m = rep.m();
    const auto& fam = jm_family(m, rep.n());
    const SparseVector v = basis_vector(m, j);
    for (int i = 1; i <= rep.n(); ++i) {
        const auto& col = rep.strings()[j].columns[static_cast<std::size_t>(i - 1)];
        const SparseVector a = rep.apply(fam.J(i), v);
        const SparseVector b = rep.apply(fam.Jt(i), v);
        const CycRat c(m, Rational(col.content));
        cert.add("j_" + std::to_string(i) + " eigenvalue", a == SparseVector{{j, col.p(m)}});
        cert.add("j~_" + std::to_string(i) + " eigenvalue " + std::to_string(col.content),
                 c.is_zero() ? b.empty() : b == SparseVector{{j, c}});
    }
    return cert;
}

Certificate spectrum_bound_check(const Representation& rep) {
    Certificate cert;
    cert.subject = "spectrum bound, " + where(rep);
    const auto& fam = jm_family(rep.m(), rep.n());
    for (int i = 1; i <= rep.n(); ++i) {
        const Matrix f = rep.evaluate(fam.Jt(i));
        std::string bad;
        if (!f.is_diagonal()) bad = "not diagonal";
        for (std::size_t x = 0; bad.empty() && x < rep.dim(); ++x) {
            const CycRat& e = f(x, x);
            if (!e.is_rational() || !e.to_rational().is_integer() || e.to_rational() < Rational(1 - i) ||
                e.to_rational() > Rational(i - 1)) {
                bad = "eigenvalue " + str(e) + " on " + format_tableau(rep.basis()[x]);
            }
        }
        cert.add("spec j~_" + std::to_string(i) + " in [" + std::to_string(1 - i) + ", " + std::to_string(i - 1) + "]",
                 bad.empty(), bad);
    }
    return cert;
}

Certificate adjacent_transposition_check(const Representation& rep) {
    Certificate cert;
    cert.subject = "adjacent transpositions, " + where(rep);
    const int m = rep.m();
    const auto& fam = jm_family(m, rep.n());
    for (int i = 1; i < rep.n(); ++i) {
        std::string bad;
        for (std::size_t j = 0; bad.empty() && j < rep.dim(); ++j) {
            const auto& s = rep.strings()[j].columns;
            const auto& a = s[static_cast<std::size_t>(i - 1)];
            const auto& b = s[static_cast<std::size_t>(i)];
            SparseVector col;
            for (const auto& [row, x] : rep.s_column(i, j)) accumulate(col, row, x);
            const auto swapped = apply_swap(rep.basis()[j], i);
            const std::string at = format_tableau(rep.basis()[j]);
            if (a.root != b.root) {
                if (!swapped || col != basis_vector(m, *rep.index_of(*swapped))) bad = "distinct roots, " + at;
                continue;
            }
            const int d = b.content - a.content;
            if (!swapped) {
                if (d != 1 && d != -1) {
                    bad = "non-standard swap with content gap " + std::to_string(d) + ", " + at;
                } else if (col != SparseVector{{j, CycRat(m, Rational(d))}}) {
                    bad = "expected eigenvalue " + std::to_string(d) + ", " + at;
                }
                continue;
            }
            if (d == 1 || d == -1) {
                bad = "standard swap with content gap " + std::to_string(d) + ", " + at;
                continue;
            }
            SparseVector v = col;
            accumulate(v, j, CycRat(m, -Rational(d).inverse()));
            if (v.empty()) {
                bad = "vanishing swapped vector, " + at;
                continue;
            }
            ContentString target = rep.strings()[j];
            std::swap(target.columns[static_cast<std::size_t>(i - 1)], target.columns[static_cast<std::size_t>(i)]);
            for (int k = 1; bad.empty() && k <= rep.n(); ++k) {
                const auto& tc = target.columns[static_cast<std::size_t>(k - 1)];
                SparseVector pv;
                SparseVector cv;
                for (const auto& [r, x] : v) {
                    accumulate(pv, r, x * tc.p(m));
                    accumulate(cv, r, x * Rational(tc.content));
                }
                if (rep.apply(fam.J(k), v) != pv || rep.apply(fam.Jt(k), v) != cv) {
                    bad = "swapped vector is not a JM eigenvector at k=" + std::to_string(k) + ", " + at;
                }
            }
        }
        cert.add("s_" + std::to_string(i) + " columns", bad.empty(), bad);
    }
    return cert;
}

std::vector<Rational> hermitian_form(const Representation& rep) {
    std::vector<Rational> form;
    for (const auto& s : rep.strings()) {
        Rational v(1);
        const auto& c = s.columns;
        for (std::size_t j = 0; j < c.size(); ++j) {
            for (std::size_t k = j + 1; k < c.size(); ++k) {
                if (c[j].root != c[k].root) continue;
                const int d = c[j].content - c[k].content;
                if (d == 0 || d == 1 || d == -1) continue;
                v *= Rational(d - 1, d);
            }
        }
        if (v.sign() <= 0) throw std::logic_error("hermitian_form: non-positive value");
        form.push_back(v);
    }
    return form;
}

Certificate verify_form_invariance(const Representation& rep, const std::vector<Rational>& form) {
    if (!rep.has_matrices()) throw std::logic_error("verify_form_invariance: representation built without matrices");
    Certificate cert;
    cert.subject = "form invariance, " + where(rep);
    std::vector<CycRat> d;
    for (const auto& r : form) d.push_back(CycRat(rep.m(), r));
    const Matrix g = Matrix::diagonal(d);
    bool positive = true;
    for (const auto& r : form) positive = positive && r.sign() > 0;
    cert.add("form positive", positive);
    cert.add("t^dagger G t = G", rep.mat_t().conj_transpose() * g * rep.mat_t() == g);
    for (int i = 1; i < rep.n(); ++i) {
        const Matrix& s = rep.mat_s(i);
        cert.add("s" + std::to_string(i) + "^dagger G s" + std::to_string(i) + " = G", s.conj_transpose() * g * s == g);
    }
    return cert;
}

std::vector<ComplexMatrix> unitary_matrices(const Representation& rep, const std::vector<Rational>& form) {
    if (!rep.has_matrices()) throw std::logic_error("unitary_matrices: representation built without matrices");
    std::vector<double> root;
    for (const auto& r : form) root.push_back(std::sqrt(r.to_double()));
    auto convert = [&](const Matrix& mat) {
        ComplexMatrix out(rep.dim(), std::vector<std::complex<double>>(rep.dim()));
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            for (std::size_t j = 0; j < rep.dim(); ++j) out[i][j] = root[i] * to_complex(mat(i, j)) / root[j];
        }
        return out;
    };
    std::vector<ComplexMatrix> out{convert(rep.mat_t())};
    for (const auto& s : rep.mat_s()) out.push_back(convert(s));
    return out;
}

double unitary_residual(const std::vector<ComplexMatrix>& mats) {
    double worst = 0.0;
    for (const auto& a : mats) {
        const std::size_t d = a.size();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                std::complex<double> acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += std::conj(a[k][i]) * a[k][j];
                worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

Certificate intertwiner_action_check(const Representation& rep) {
    Certificate cert;
    cert.subject = "intertwiners, " + where(rep);
    const int m = rep.m();
    const int n = rep.n();
    const auto& fam = jm_family(m, n);
    for (int i = 1; i < n; ++i) {
        const Matrix u = rep.evaluate(fam.U(i));
        cert.add("u~_" + std::to_string(i + 1) + " closed forms agree", u == rep.evaluate(intertwiner_utilde_alt(m, n, i)));
        Matrix expected(m, rep.dim(), rep.dim());
        for (std::size_t j = 0; j < rep.dim(); ++j) {
            const auto swapped = apply_swap(rep.basis()[j], i);
            if (!swapped) continue;
            const auto& a = rep.strings()[j].columns[static_cast<std::size_t>(i - 1)];
            const auto& b = rep.strings()[j].columns[static_cast<std::size_t>(i)];
            const int coef = a.content - b.content - (a.root == b.root ? 1 : 0);
            expected(*rep.index_of(*swapped), j) = CycRat(m, Rational(coef));
        }
        cert.add("u~_" + std::to_string(i + 1) + " action", u == expected);
    }
    for (int i = 2; i <= n; ++i) {
        const Matrix p = rep.evaluate(fam.Proj(i));
        bool spectrum = p.is_diagonal();
        for (const auto& d : p.diag()) spectrum = spectrum && (d.is_zero() || d.is_one());
        cert.add("P_" + std::to_string(i) + " idempotent", p * p == p);
        cert.add("P_" + std::to_string(i) + " spectrum in {0,1}", spectrum);
    }
    return cert;
}

Certificate branching(const Representation& rep, std::vector<BranchBlock>* blocks_out) {
    Certificate cert;
    cert.subject = "branching, " + where(rep);
    const int m = rep.m();
    const int n = rep.n();
    std::vector<BranchBlock> blocks;
    std::vector<Representation> subs;
    for (const Node& node : removable_nodes(rep.shape())) {
        BranchBlock b{node, rep.shape().without_node(node), {}};
        if (n == 1) {
            for (std::size_t j = 0; j < rep.dim(); ++j) {
                if (rep.basis()[j].node_of(1) == node) b.positions.push_back(j);
            }
        } else {
            subs.push_back(build_seminormal(m, n - 1, b.sub_shape));
            for (const auto& y : subs.back().basis()) {
                const auto idx = rep.index_of(y.with_entry_at(node));
                if (!idx) throw std::logic_error("branching: extended tableau missing from basis");
                b.positions.push_back(*idx);
            }
        }
        blocks.push_back(std::move(b));
    }
    std::vector<int> owner(rep.dim(), -1);
    std::vector<std::size_t> local(rep.dim(), 0);
    bool partition_ok = true;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t k = 0; k < blocks[b].positions.size(); ++k) {
            const std::size_t p = blocks[b].positions[k];
            if (owner[p] != -1) partition_ok = false;
            owner[p] = static_cast<int>(b);
            local[p] = k;
        }
    }
    for (int o : owner) partition_ok = partition_ok && o != -1;
    cert.add("blocks partition the basis", partition_ok);
    std::set<MPartition> distinct;
    for (const auto& b : blocks) distinct.insert(b.sub_shape);
    cert.add("multiplicity free", distinct.size() == blocks.size());
    if (n > 1 && partition_ok) {
        if (!rep.has_matrices()) throw std::logic_error("branching: representation built without matrices");
        auto compare = [&](const std::string& name, const Matrix& big, auto sub_matrix) {
            std::string bad;
            for (std::size_t r = 0; bad.empty() && r < rep.dim(); ++r) {
                for (std::size_t c = 0; bad.empty() && c < rep.dim(); ++c) {
                    const CycRat& x = big(r, c);
                    if (owner[r] != owner[c]) {
                        if (!x.is_zero()) bad = "entry outside blocks";
                    } else if (x != sub_matrix(static_cast<std::size_t>(owner[r]))(local[r], local[c])) {
                        bad = "block differs from " + format_shape(blocks[static_cast<std::size_t>(owner[r])].sub_shape);
                    }
                }
            }
            cert.add(name + " block diagonal, blocks match", bad.empty(), bad);
        };
        compare("t", rep.mat_t(), [&](std::size_t b) -> const Matrix& { return subs[b].mat_t(); });
        for (int i = 1; i <= n - 2; ++i) {
            compare("s" + std::to_string(i), rep.mat_s(i),
                    [&](std::size_t b) -> const Matrix& { return subs[b].mat_s(i); });
        }
    }
    if (blocks_out) *blocks_out = std::move(blocks);
    return cert;
}

Certificate irreducibility_check(const Representation& rep) {
    Certificate cert;
    cert.subject = "irreducibility, " + where(rep);
    std::set<std::vector<ContentColumn>> seen;
    for (const auto& s : rep.strings()) seen.insert(s.columns);
    cert.add("simple JM spectrum", seen.size() == rep.dim());
    const std::size_t d = rep.dim();
    std::vector<std::vector<std::size_t>> fwd(d);
    std::vector<std::vector<std::size_t>> bwd(d);
    for (int i = 1; i < rep.n(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [row, x] : rep.s_column(i, j)) {
                if (row == j || x.is_zero()) continue;
                fwd[j].push_back(row);
                bwd[row].push_back(j);
            }
        }
    }
    auto reach = [&](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> seen_v(d, false);
        std::vector<std::size_t> stack{0};
        seen_v[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (!seen_v[w]) {
                    seen_v[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count;
    };
    cert.add("generator graph strongly connected", d == 0 || (reach(fwd) == d && reach(bwd) == d));
    return cert;
}

CompletenessReport completeness_check(int m, int n) {
    CompletenessReport report;
    report.certificate.subject = "completeness m=" + std::to_string(m) + " n=" + std::to_string(n);
    report.order = group_order(m, n);
    const auto& fam = jm_family(m, n);
    std::map<std::vector<std::string>, std::string> spectra;
    bool eigen_ok = true;
    bool disjoint = true;
    bool irreducible = true;
    for (const auto& shape : enum_mpartitions(m, n)) {
        ++report.shapes;
        const Representation rep = build_seminormal(m, n, shape, false);
        report.sum_sq += static_cast<std::uint64_t>(rep.dim()) * rep.dim();
        irreducible = irreducible && irreducibility_check(rep).passed();
        for (std::size_t j = 0; j < rep.dim(); ++j) {
            const SparseVector v = basis_vector(m, j);
            std::vector<std::string> key;
            for (int i = 1; i <= n; ++i) {
                for (const auto* a : {&fam.J(i), &fam.Jt(i)}) {
                    const SparseVector w = rep.apply(*a, v);
                    const CycRat lambda = w.count(j) ? w.at(j) : CycRat(m);
                    const bool eigen = w.empty() || (w.size() == 1 && w.begin()->first == j);
                    eigen_ok = eigen_ok && eigen;
                    key.push_back(str(lambda));
                }
            }
            auto [it, inserted] = spectra.emplace(key, format_shape(shape));
            if (!inserted) disjoint = false;
        }
    }
    auto& cert = report.certificate;
    cert.add("sum of dim^2 = m^n n!", report.sum_sq == report.order,
             std::to_string(report.sum_sq) + " vs " + std::to_string(report.order));
    cert.add("basis vectors are JM eigenvectors", eigen_ok);
    cert.add("JM spectra pairwise distinct across all shapes", disjoint);
    cert.add("every representation irreducible", irreducible);
    return report;
}

}  // namespace gmnrep
