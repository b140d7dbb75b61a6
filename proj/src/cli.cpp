#include "gmnrep/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "gmnrep/affine_a2.hpp"
#include "gmnrep/cache.hpp"
#include "gmnrep/group.hpp"
#include "gmnrep/idempotents.hpp"
#include "gmnrep/jucys_murphy.hpp"
#include "gmnrep/representation.hpp"

namespace gmnrep {

namespace {

const std::vector<std::string> kChecks = {"relations", "jm",           "form",        "branching",
                                          "idempotents", "affine",     "intertwiners", "completeness"};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
    CheckFailed(const std::string& what, json detail) : std::runtime_error(what), detail(std::move(detail)) {}
    json detail;
};

void render(const json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v) {
            if (x.is_object()) return false;
        }
        return v.dump().size() <= 100;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !flat(v)) {
                os << pad << k << ":\n";
                render(v, indent + 1, os);
            } else {
                os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured() && !flat(v)) {
                os << pad << "-\n";
                render(v, indent + 1, os);
            } else {
                os << pad << "- " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

json read_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
    if (arg == "-") return json::parse(std::cin);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read '" + arg + "'");
    return json::parse(in);
}

void require_mn(int m, int n, int min_n = 0) {
    if (m < 1) throw UsageError("--m must be positive");
    if (n < min_n) throw UsageError("--n must be at least " + std::to_string(min_n));
}

MPartition shape_arg(const std::string& text, int m, int n) {
    MPartition shape;
    try {
        shape = parse_shape(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --shape: ") + e.what());
    }
    if (shape.m() != m) throw UsageError("--shape has " + std::to_string(shape.m()) + " diagrams, expected " + std::to_string(m));
    if (shape.size() != n) throw UsageError("--shape has " + std::to_string(shape.size()) + " nodes, expected " + std::to_string(n));
    return shape;
}

std::vector<Representation> all_reps(int m, int n) {
    std::vector<Representation> reps;
    for (const auto& shape : enum_mpartitions(m, n)) reps.push_back(build_seminormal(m, n, shape));
    return reps;
}

}  // namespace

std::string render_text(const json& doc) {
    std::ostringstream os;
    render(doc, 0, os);
    return os.str();
}

json verify_suite(int m, int n, const std::vector<std::string>& checks) {
    std::set<std::string> want(checks.begin(), checks.end());
    if (want.count("all")) want.insert(kChecks.begin(), kChecks.end());
    for (const auto& c : want) {
        if (c != "all" && std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) {
            throw UsageError("unknown check '" + c + "'");
        }
    }
    std::vector<Representation> reps = n >= 1 ? all_reps(m, n) : std::vector<Representation>{};
    json certs = json::array();
    bool pass = true;
    auto push = [&](const std::string& group, const Certificate& c) {
        json j = to_json(c);
        j["check"] = group;
        pass = pass && c.passed();
        certs.push_back(std::move(j));
    };
    if (want.count("relations")) {
        push("relations", group_relations_check(m, n));
        for (const auto& rep : reps) {
            push("relations", verify_relations(rep));
            push("relations", verify_homomorphism(rep, 50, 12345));
        }
    }
    if (want.count("jm")) {
        push("jm", jm_commutativity_check(m, n));
        push("jm", jm_locality_check(m, n));
        for (const auto& rep : reps) {
            push("jm", jm_diagonal_check(rep));
            push("jm", spectrum_bound_check(rep));
            push("jm", adjacent_transposition_check(rep));
        }
    }
    if (want.count("form")) {
        for (const auto& rep : reps) {
            const auto form = hermitian_form(rep);
            Certificate c = verify_form_invariance(rep, form);
            const double residual = unitary_residual(unitary_matrices(rep, form));
            std::ostringstream os;
            os << residual;
            c.add("unitary residual < 1e-10", residual < 1e-10, os.str());
            push("form", c);
        }
    }
    if (want.count("branching")) {
        for (const auto& rep : reps) {
            push("branching", branching(rep));
            push("branching", irreducibility_check(rep));
        }
    }
    if (want.count("idempotents") && n >= 1) {
        push("idempotents", verify_idempotent_system(m, n));
        if (m <= 2 && n <= 3) {
            push("idempotents", verify_T_compatibility(m, n));
            push("idempotents", verify_idempotent_eigen(m, n));
        }
    }
    if (want.count("affine")) {
        for (const auto& rep : reps) {
            for (int i = 1; i < n; ++i) {
                Certificate c = verify_a2_relations(a2_from_representation(rep, i));
                c.subject = "A(m,2) quotient at i=" + std::to_string(i) + ", shape " + format_shape(rep.shape());
                push("affine", c);
            }
        }
        push("affine", a2_grid_check(m, -3, 3));
    }
    if (want.count("intertwiners")) {
        push("intertwiners", intertwiner_identities_check(m, n));
        push("intertwiners", baxter_check(m, n, Rational(0), Rational(1), Rational(3)));
        for (const auto& rep : reps) push("intertwiners", intertwiner_action_check(rep));
    }
    if (want.count("completeness") && n >= 1) push("completeness", completeness_check(m, n).certificate);
    return json{{"m", m}, {"n", n}, {"pass", pass}, {"certificates", certs}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Irreducible representations of G(m,1,n) and their verification", "gmnrep"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    int m = 1;
    int n = 1;
    std::string shape_text;
    auto add_mn = [&](CLI::App* sub) {
        sub->add_option("--m", m, "Order of the cyclic factor")->required();
        sub->add_option("--n", n, "Rank")->required();
    };

    auto* partitions = app.add_subcommand("partitions", "List the m-partitions of n");
    add_mn(partitions);

    auto* tableaux = app.add_subcommand("tableaux", "Standard m-tableaux with their content strings");
    add_mn(tableaux);
    tableaux->add_option("--shape", shape_text, "Restrict to one shape, e.g. \"2,1|1\"");

    std::string tableau_file;
    auto* content = app.add_subcommand("content", "Content string of a tableau");
    content->add_option("--tableau", tableau_file, "Tableau JSON (file, '-' or inline)")->required();

    std::string string_file;
    int m_hint = 0;
    auto* tableau = app.add_subcommand("tableau", "Tableau of a content string");
    tableau->add_option("--string", string_file, "Content string JSON (file, '-' or inline)")->required();
    tableau->add_option("--m", m_hint, "m when the string omits it");

    bool unitary = false;
    bool no_cache = false;
    auto* rep_cmd = app.add_subcommand("rep", "Seminormal representation of one shape");
    add_mn(rep_cmd);
    rep_cmd->add_option("--shape", shape_text, "Shape, e.g. \"2,1|1\" or [[2,1],[1]]")->required();
    rep_cmd->add_flag("--unitary", unitary, "Add floating-point unitary matrices");
    rep_cmd->add_flag("--no-cache", no_cache, "Bypass the on-disk cache");

    std::vector<std::string> checks{"all"};
    auto* verify = app.add_subcommand("verify", "Run verification certificates");
    add_mn(verify);
    verify->add_option("--check", checks, "relations|jm|form|branching|idempotents|affine|intertwiners|completeness|all");

    auto* completeness = app.add_subcommand("completeness", "Sum of squared dimensions against the group order");
    add_mn(completeness);

    std::string kind_text;
    A2Params params;
    std::string at_text = "0";
    std::string bt_text = "0";
    bool grid = false;
    auto* a2 = app.add_subcommand("affine-a2", "Representations of A(m,2)");
    a2->add_option("--kind", kind_text, "one-dim|two-dim-distinct|two-dim-equal");
    a2->add_option("--m", params.m, "Order m");
    a2->add_option("--a", params.a, "Root label of a in [1, m]");
    a2->add_option("--b", params.b, "Root label of b in [1, m]");
    a2->add_option("--at", at_text, "a~ as a fraction");
    a2->add_option("--bt", bt_text, "b~ as a fraction");
    a2->add_option("--eps", params.eps, "+1 or -1");
    a2->add_flag("--grid", grid, "Run the whole parameter grid a~, b~ in [-3, 3]");

    std::vector<std::string> argv_store{"gmnrep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    auto error_json = [&](const std::string& kind, const std::string& msg, const json& detail = nullptr) {
        json e{{"error", kind}, {"message", msg}};
        if (!detail.is_null()) e["detail"] = detail;
        err << e.dump() << "\n";
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json("usage", e.what());
        return 2;
    }

    auto emit = [&](const json& doc) {
        if (format == "text") {
            out << render_text(doc);
        } else {
            out << doc.dump(2) << "\n";
        }
    };

    try {
        if (*partitions) {
            require_mn(m, n);
            json list = json::array();
            for (const auto& p : enum_mpartitions(m, n)) list.push_back(to_json(p));
            emit(list);
            return 0;
        }
        if (*tableaux) {
            require_mn(m, n);
            std::vector<MTableau> tabs;
            if (!shape_text.empty()) {
                tabs = enum_standard_mtableaux(shape_arg(shape_text, m, n));
            } else {
                tabs = enum_all_mtableaux(m, n);
            }
            json list = json::array();
            for (const auto& t : tabs) list.push_back(json{{"tableau", to_json(t)}, {"content", to_json(content_string(t))}});
            emit(list);
            return 0;
        }
        if (*content) {
            MTableau t;
            try {
                t = mtableau_from_json(read_json_arg(tableau_file));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit(json{{"tableau", to_json(t)}, {"content", to_json(content_string(t))}});
            return 0;
        }
        if (*tableau) {
            ContentString s;
            try {
                s = content_string_from_json(read_json_arg(string_file), m_hint);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            try {
                const MTableau t = string_to_tableau(s);
                emit(json{{"content", to_json(s)}, {"tableau", to_json(t)}});
                return 0;
            } catch (const InvalidContentString& e) {
                const auto& r = e.report();
                throw CheckFailed(e.what(), json{{"condition", r.condition}, {"j", r.j}, {"k", r.k}});
            }
        }
        if (*rep_cmd) {
            require_mn(m, n, 1);
            const MPartition shape = shape_arg(shape_text, m, n);
            const Cache cache = Cache::from_environment();
            const CacheKey key{"rep", m, n, to_json(shape).dump()};
            json doc;
            Representation rep;
            std::optional<json> hit = no_cache ? std::nullopt : cache.load(key);
            if (hit) {
                rep = representation_from_json(*hit);
                doc = *hit;
            } else {
                rep = build_seminormal(m, n, shape);
                doc = representation_to_json(rep, hermitian_form(rep));
                if (!no_cache) cache.store(key, doc);
            }
            if (unitary) {
                const auto mats = unitary_matrices(rep, hermitian_form(rep));
                json u = json::array();
                for (const auto& a : mats) u.push_back(to_json(a));
                doc["unitary"] = json{{"t", u.at(0)}, {"s", json(u.begin() + 1, u.end())}};
                doc["unitary_residual"] = unitary_residual(mats);
            }
            emit(doc);
            return 0;
        }
        if (*verify) {
            require_mn(m, n, 1);
            const json doc = verify_suite(m, n, checks);
            emit(doc);
            return doc.at("pass").get<bool>() ? 0 : 1;
        }
        if (*completeness) {
            require_mn(m, n, 1);
            const auto r = completeness_check(m, n);
            emit(json{{"m", m},
                      {"n", n},
                      {"sum_sq", r.sum_sq},
                      {"order", r.order},
                      {"shapes", r.shapes},
                      {"pass", r.certificate.passed()},
                      {"certificate", to_json(r.certificate)}});
            return r.certificate.passed() ? 0 : 1;
        }
        if (*a2) {
            if (grid) {
                const Certificate c = a2_grid_check(params.m, -3, 3);
                emit(to_json(c));
                return c.passed() ? 0 : 1;
            }
            if (kind_text.empty()) throw UsageError("--kind is required unless --grid is given");
            A2Kind kind;
            try {
                kind = parse_a2_kind(kind_text);
                params.at = Rational::from_string(at_text);
                params.bt = Rational::from_string(bt_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            A2Rep rep;
            try {
                rep = build_a2(kind, params);
            } catch (const std::domain_error& e) {
                throw UsageError(e.what());
            }
            const Certificate rel = verify_a2_relations(rep.mats);
            const Certificate com = a2_commutation_check(rep.mats);
            const A2Irreducibility irr = is_irreducible_a2(rep);
            json doc{{"kind", to_string(kind)},
                     {"params", to_json(params)},
                     {"matrices", to_json(rep.mats)},
                     {"relations", to_json(rel)},
                     {"commuting", to_json(com)},
                     {"irreducible", irr.irreducible},
                     {"criterion", irr.criterion}};
            if (irr.invariant_vector) {
                json v = json::array();
                for (const auto& c : *irr.invariant_vector) v.push_back(to_json(c));
                doc["invariant_vector"] = v;
            }
            emit(doc);
            return rel.passed() && com.passed() && irr.irreducible == irr.criterion ? 0 : 1;
        }
    } catch (const UsageError& e) {
        error_json("usage", e.what());
        return 2;
    } catch (const CheckFailed& e) {
        error_json("check-failed", e.what(), e.detail);
        return 1;
    } catch (const json::exception& e) {
        error_json("usage", std::string("bad JSON: ") + e.what());
        return 2;
    } catch (const std::length_error& e) {
        error_json("usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return 1;
    }
    return 2;
}

}  // namespace gmnrep
