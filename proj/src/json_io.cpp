#include "gmnrep/json_io.hpp"

#include <stdexcept>

namespace gmnrep {

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    return Rational::from_string(j.get<std::string>());
}

json to_json(const CycRat& c) {
    json coeffs = json::array();
    for (int k = 0; k < c.order(); ++k) coeffs.push_back(to_json(c.coeff(k)));
    return json{{"m", c.order()}, {"coeffs", coeffs}};
}

CycRat cycrat_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(rational_from_json(x));
    if (coeffs.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("CycRat JSON: expected m coefficients");
    return CycRat::from_coeffs(m, coeffs);
}

json to_json(const GroupElement& g) {
    std::vector<int> perm;
    for (int x : g.perm()) perm.push_back(x + 1);
    return json{{"m", g.m()}, {"n", g.n()}, {"residues", g.residues()}, {"perm", perm}};
}

GroupElement group_element_from_json(const json& j) {
    auto perm = j.at("perm").get<std::vector<int>>();
    for (int& x : perm) --x;
    return GroupElement(j.at("m").get<int>(), j.at("n").get<int>(), j.at("residues").get<std::vector<int>>(),
                        std::move(perm));
}

json to_json(const AlgebraElement& a) {
    json terms = json::array();
    for (const auto& [g, c] : a.terms()) terms.push_back(json{{"g", to_json(g)}, {"c", to_json(c)}});
    return json{{"m", a.m()}, {"n", a.n()}, {"terms", terms}};
}

AlgebraElement algebra_element_from_json(const json& j) {
    AlgebraElement a(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) a.add_term(group_element_from_json(t.at("g")), cycrat_from_json(t.at("c")));
    return a;
}

json to_json(const MPartition& p) { return json{{"m", p.m()}, {"parts", p.parts()}}; }

MPartition mpartition_from_json(const json& j) {
    if (j.is_array()) {
        auto parts = j.get<std::vector<std::vector<int>>>();
        const int m = static_cast<int>(parts.size());
        return MPartition(m, std::move(parts));
    }
    return MPartition(j.at("m").get<int>(), j.at("parts").get<std::vector<std::vector<int>>>());
}

json to_json(const MTableau& t) { return json{{"shape", to_json(t.shape())}, {"rows", t.rows()}}; }

MTableau mtableau_from_json(const json& j) {
    const json& rows_j = j.is_array() ? j : j.at("rows");
    auto rows = rows_j.get<std::vector<std::vector<std::vector<int>>>>();
    const int m = static_cast<int>(rows.size());
    MTableau t(m, std::move(rows));
    if (j.is_object() && j.contains("shape") && !(mpartition_from_json(j.at("shape")) == t.shape())) {
        throw std::invalid_argument("tableau JSON: rows do not fill the stated shape");
    }
    return t;
}

json to_json(const ContentString& s) {
    std::vector<int> p;
    std::vector<int> c;
    for (const auto& col : s.columns) {
        p.push_back(col.root);
        c.push_back(col.content);
    }
    return json{{"m", s.m}, {"p", p}, {"c", c}};
}

ContentString content_string_from_json(const json& j, int m_hint) {
    ContentString s;
    if (j.contains("m")) {
        s.m = j.at("m").get<int>();
        if (m_hint > 0 && m_hint != s.m) throw std::invalid_argument("content string JSON: m disagrees with --m");
    } else if (m_hint > 0) {
        s.m = m_hint;
    } else {
        throw std::invalid_argument("content string JSON: m missing");
    }
    const auto p = j.at("p").get<std::vector<int>>();
    const auto c = j.at("c").get<std::vector<int>>();
    if (p.size() != c.size()) throw std::invalid_argument("content string JSON: p and c differ in length");
    for (std::size_t i = 0; i < p.size(); ++i) s.columns.push_back({p[i], c[i]});
    return s;
}

json to_json(const Matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(to_json(a(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, int m) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    Matrix a(m, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) {
            a(i, k) = cycrat_from_json(j.at(i).at(k));
            if (a(i, k).order() != m) throw std::invalid_argument("matrix JSON: entry of another order");
        }
    }
    return a;
}

json to_json(const Certificate& c) {
    json checks = json::array();
    for (const auto& x : c.checks) {
        json e{{"name", x.name}, {"pass", x.passed}};
        if (!x.detail.empty()) e["detail"] = x.detail;
        checks.push_back(std::move(e));
    }
    return json{{"subject", c.subject}, {"pass", c.passed()}, {"checks", checks}};
}

json representation_to_json(const Representation& rep, const std::vector<Rational>& form) {
    json basis = json::array();
    for (const auto& t : rep.basis()) basis.push_back(to_json(t));
    json s = json::array();
    for (const auto& a : rep.mat_s()) s.push_back(to_json(a));
    json f = json::array();
    for (const auto& r : form) f.push_back(to_json(r));
    return json{{"m", rep.m()},      {"n", rep.n()}, {"shape", to_json(rep.shape())}, {"dim", rep.dim()},
                {"basis", basis},    {"t", to_json(rep.mat_t())}, {"s", s}, {"form", f}};
}

Representation representation_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<MTableau> basis;
    for (const auto& t : j.at("basis")) basis.push_back(mtableau_from_json(t));
    std::vector<Matrix> s;
    for (const auto& a : j.at("s")) s.push_back(matrix_from_json(a, m));
    return Representation::from_matrices(m, n, mpartition_from_json(j.at("shape")), std::move(basis),
                                         matrix_from_json(j.at("t"), m), std::move(s));
}

json to_json(const ComplexMatrix& a) {
    json rows = json::array();
    for (const auto& r : a) {
        json row = json::array();
        for (const auto& z : r) row.push_back(json::array({z.real(), z.imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const A2Matrices& mats) {
    return json{{"x", to_json(mats.x)}, {"y", to_json(mats.y)}, {"xt", to_json(mats.xt)}, {"yt", to_json(mats.yt)},
                {"s", to_json(mats.s)}};
}

json to_json(const A2Params& p) {
    return json{{"m", p.m}, {"a", p.a}, {"b", p.b}, {"at", to_json(p.at)}, {"bt", to_json(p.bt)}, {"eps", p.eps}};
}

}  // namespace gmnrep
