#include "gmnrep/affine_a2.hpp"

#include <stdexcept>

#include "gmnrep/jucys_murphy.hpp"

namespace gmnrep {

namespace {

CycRat rat(int m, const Rational& r) { return CycRat(m, r); }

Matrix mat2(int m, const CycRat& a, const CycRat& b, const CycRat& c, const CycRat& d) {
    Matrix r(m, 2, 2);
    r(0, 0) = a;
    r(0, 1) = b;
    r(1, 0) = c;
    r(1, 1) = d;
    return r;
}

Matrix mat1(const CycRat& a) {
    Matrix r(a.order(), 1, 1);
    r(0, 0) = a;
    return r;
}

bool is_scalar(const Matrix& a) {
    if (!a.is_diagonal()) return false;
    for (std::size_t i = 1; i < a.rows(); ++i) {
        if (a(i, i) != a(0, 0)) return false;
    }
    return true;
}

/// v spans an invariant line of a: a v is a multiple of v (v nonzero, dimension 2).
bool preserves_line(const Matrix& a, const std::vector<CycRat>& v) {
    const CycRat w0 = a(0, 0) * v[0] + a(0, 1) * v[1];
    const CycRat w1 = a(1, 0) * v[0] + a(1, 1) * v[1];
    return (w0 * v[1] - w1 * v[0]).is_zero();
}

/// Eigenlines of a non-scalar triangular 2x2 matrix, computed exactly.
std::optional<std::vector<std::vector<CycRat>>> eigenlines(const Matrix& a) {
    if (!a(1, 0).is_zero() && !a(0, 1).is_zero()) return std::nullopt;
    std::vector<std::vector<CycRat>> lines;
    // Kernel of a - lambda for lambda on the diagonal; (a - lambda) has rank one.
    for (std::size_t k = 0; k < 2; ++k) {
        const CycRat lambda = a(k, k);
        const CycRat p = a(0, 0) - lambda;
        const CycRat q = a(0, 1);
        const CycRat r = a(1, 0);
        const CycRat s = a(1, 1) - lambda;
        if (!p.is_zero() || !q.is_zero()) {
            lines.push_back({q, -p});
        } else {
            lines.push_back({s, -r});
        }
    }
    return lines;
}

}  // namespace

std::string to_string(A2Kind kind) {
    switch (kind) {
        case A2Kind::OneDim: return "one-dim";
        case A2Kind::TwoDimDistinct: return "two-dim-distinct";
        case A2Kind::TwoDimEqual: return "two-dim-equal";
    }
    return "?";
}

A2Kind parse_a2_kind(const std::string& text) {
    if (text == "one-dim") return A2Kind::OneDim;
    if (text == "two-dim-distinct") return A2Kind::TwoDimDistinct;
    if (text == "two-dim-equal") return A2Kind::TwoDimEqual;
    throw std::invalid_argument("unknown A2 kind '" + text + "'");
}

A2Rep build_a2(A2Kind kind, const A2Params& p) {
    const int m = p.m;
    if (m < 1) throw std::domain_error("build_a2: m must be positive");
    if (p.a < 1 || p.a > m) throw std::domain_error("build_a2: root label a outside [1, m]");
    A2Rep rep{kind, p, {}};
    auto& M = rep.mats;
    M.m = m;
    const CycRat a = root_of_unity(m, p.a);
    switch (kind) {
        case A2Kind::OneDim: {
            if (p.eps != 1 && p.eps != -1) throw std::domain_error("build_a2: eps must be +1 or -1");
            M.x = mat1(a);
            M.y = mat1(a);
            M.xt = mat1(rat(m, p.at));
            M.yt = mat1(rat(m, p.at + Rational(p.eps)));
            M.s = mat1(rat(m, Rational(p.eps)));
            break;
        }
        case A2Kind::TwoDimDistinct: {
            if (p.b < 1 || p.b > m) throw std::domain_error("build_a2: root label b outside [1, m]");
            if (p.a == p.b) throw std::domain_error("build_a2: two-dim-distinct needs a != b");
            const CycRat b = root_of_unity(m, p.b);
            const CycRat z(m);
            const CycRat one(m, Rational(1));
            M.s = mat2(m, z, one, one, z);
            M.x = mat2(m, a, z, z, b);
            M.y = mat2(m, b, z, z, a);
            M.xt = mat2(m, rat(m, p.at), z, z, rat(m, p.bt));
            M.yt = mat2(m, rat(m, p.bt), z, z, rat(m, p.at));
            break;
        }
        case A2Kind::TwoDimEqual: {
            if (p.at == p.bt) throw std::domain_error("build_a2: two-dim-equal needs b~ != a~");
            const Rational r = (p.bt - p.at).inverse();
            const CycRat z(m);
            M.s = mat2(m, rat(m, r), rat(m, Rational(1) - r * r), rat(m, Rational(1)), rat(m, -r));
            M.x = mat2(m, a, z, z, a);
            M.y = M.x;
            M.xt = mat2(m, rat(m, p.at), z, z, rat(m, p.bt));
            M.yt = mat2(m, rat(m, p.bt), z, z, rat(m, p.at));
            break;
        }
    }
    return rep;
}

Certificate verify_a2_relations(const A2Matrices& M) {
    Certificate cert;
    cert.subject = "A(m,2) relations";
    const int m = M.m;
    const Matrix id = Matrix::identity(m, M.s.rows());
    Matrix sum(m, M.s.rows(), M.s.cols());
    for (int p = 1; p <= m; ++p) {
        sum += M.x.pow(static_cast<unsigned>(p)) * M.s * M.x.pow(static_cast<unsigned>(m - p));
    }
    cert.add("x y = y x", M.x * M.y == M.y * M.x);
    cert.add("x~ y~ = y~ x~", M.xt * M.yt == M.yt * M.xt);
    cert.add("x x~ = x~ x", M.x * M.xt == M.xt * M.x);
    cert.add("y x~ = x~ y", M.y * M.xt == M.xt * M.y);
    cert.add("y = s x s", M.y == M.s * M.x * M.s);
    cert.add("x^m = 1", M.x.pow(static_cast<unsigned>(m)) == id);
    cert.add("y~ = s x~ s + (1/m) sum x^p s x^(m-p)", M.yt == M.s * M.xt * M.s + sum * CycRat(m, Rational(1, m)));
    cert.add("s^2 = 1", M.s * M.s == id);
    return cert;
}

Certificate a2_commutation_check(const A2Matrices& M) {
    Certificate cert;
    cert.subject = "A(m,2) commuting family";
    const Matrix* mats[] = {&M.x, &M.y, &M.xt, &M.yt};
    const char* names[] = {"x", "y", "x~", "y~"};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            cert.add(std::string(names[i]) + " " + names[j] + " commute", *mats[i] * *mats[j] == *mats[j] * *mats[i]);
        }
    }
    bool roots = M.x.is_diagonal();
    for (const auto& d : M.x.diag()) roots = roots && d.pow(M.m).is_one();
    cert.add("Spec(x) in m-th roots of unity", roots);
    return cert;
}

A2Irreducibility is_irreducible_a2(const A2Rep& rep) {
    A2Irreducibility out;
    const auto& M = rep.mats;
    switch (rep.kind) {
        case A2Kind::OneDim: out.criterion = true; break;
        case A2Kind::TwoDimDistinct: out.criterion = true; break;
        case A2Kind::TwoDimEqual: {
            const Rational d = rep.params.bt - rep.params.at;
            out.criterion = d != Rational(1) && d != Rational(-1);
            break;
        }
    }
    if (M.s.rows() == 1) {
        out.irreducible = true;
        return out;
    }
    const Matrix* mats[] = {&M.x, &M.y, &M.xt, &M.yt, &M.s};
    const Matrix* pivot = nullptr;
    for (const Matrix* a : mats) {
        if (!is_scalar(*a) && eigenlines(*a)) {
            pivot = a;
            break;
        }
    }
    std::vector<std::vector<CycRat>> candidates;
    if (pivot) {
        candidates = *eigenlines(*pivot);
    } else {
        bool all_scalar = true;
        for (const Matrix* a : mats) all_scalar = all_scalar && is_scalar(*a);
        if (!all_scalar) throw std::domain_error("is_irreducible_a2: no exact eigenline available");
        candidates.push_back({CycRat(M.m, Rational(1)), CycRat(M.m)});
    }
    out.irreducible = true;
    for (const auto& v : candidates) {
        bool common = true;
        for (const Matrix* a : mats) common = common && preserves_line(*a, v);
        if (common) {
            out.irreducible = false;
            out.invariant_vector = v;
            break;
        }
    }
    return out;
}

A2Matrices a2_from_representation(const Representation& rep, int i) {
    if (i < 1 || i >= rep.n()) throw std::out_of_range("a2_from_representation: index outside [1, n-1]");
    const auto& fam = jm_family(rep.m(), rep.n());
    A2Matrices M;
    M.m = rep.m();
    M.x = rep.evaluate(fam.J(i));
    M.y = rep.evaluate(fam.J(i + 1));
    M.xt = rep.evaluate(fam.Jt(i));
    M.yt = rep.evaluate(fam.Jt(i + 1));
    M.s = rep.has_matrices() ? rep.mat_s(i) : rep.evaluate(gen_s(rep.m(), rep.n(), i));
    return M;
}

Certificate a2_grid_check(int m, int lo, int hi) {
    Certificate cert;
    cert.subject = "A(m,2) grid m=" + std::to_string(m);
    std::size_t built = 0;
    std::size_t reducible = 0;
    std::string bad_rel;
    std::string bad_irr;
    auto run = [&](A2Kind kind, const A2Params& p) {
        const A2Rep rep = build_a2(kind, p);
        ++built;
        const std::string label = to_string(kind) + " a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                                  " a~=" + p.at.to_string() + " b~=" + p.bt.to_string() + " eps=" + std::to_string(p.eps);
        if (bad_rel.empty() && (!verify_a2_relations(rep.mats).passed() || !a2_commutation_check(rep.mats).passed())) {
            bad_rel = label;
        }
        const A2Irreducibility irr = is_irreducible_a2(rep);
        if (!irr.irreducible) ++reducible;
        bool ok = irr.irreducible == irr.criterion && irr.irreducible != irr.invariant_vector.has_value();
        if (kind == A2Kind::TwoDimEqual) {
            const Rational d = p.bt - p.at;
            ok = ok && irr.irreducible == (d != Rational(1) && d != Rational(-1));
        }
        if (bad_irr.empty() && !ok) bad_irr = label;
    };
    for (int a = 1; a <= m; ++a) {
        for (int at = lo; at <= hi; ++at) {
            for (int eps : {1, -1}) run(A2Kind::OneDim, {m, a, a, Rational(at), Rational(at), eps});
            for (int bt = lo; bt <= hi; ++bt) {
                for (int b = 1; b <= m; ++b) {
                    if (b != a) run(A2Kind::TwoDimDistinct, {m, a, b, Rational(at), Rational(bt), 1});
                }
                if (bt != at) run(A2Kind::TwoDimEqual, {m, a, a, Rational(at), Rational(bt), 1});
            }
        }
    }
    cert.add("relations and commuting family on " + std::to_string(built) + " representations", bad_rel.empty(), bad_rel);
    cert.add("irreducible exactly when b~ - a~ is not +-1 (" + std::to_string(reducible) + " reducible, vector emitted)",
             bad_irr.empty(), bad_irr);
    return cert;
}

}  // namespace gmnrep
