#include "gmnrep/tableau.hpp"

#include <algorithm>
#include <map>

namespace gmnrep {

bool content_string_less(const ContentString& a, const ContentString& b) {
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        const auto& x = a.columns[i];
        const auto& y = b.columns[i];
        if (x.root != y.root) return x.root < y.root;
        if (x.content != y.content) return x.content > y.content;
    }
    return a.size() < b.size();
}

MTableau::MTableau(int m, std::vector<std::vector<std::vector<int>>> rows) : rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("MTableau: expected " + std::to_string(m) + " diagrams");
    }
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(m));
    int total = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        for (const auto& row : rows_[k]) {
            parts[k].push_back(static_cast<int>(row.size()));
            total += static_cast<int>(row.size());
        }
    }
    shape_ = MPartition(m, std::move(parts));
    position_.assign(static_cast<std::size_t>(total), Node{0, 0, 0});
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto& d = rows_[k];
        for (std::size_t r = 0; r < d.size(); ++r) {
            for (std::size_t c = 0; c < d[r].size(); ++c) {
                const int v = d[r][c];
                if (v < 1 || v > total || position_[static_cast<std::size_t>(v - 1)].diagram != 0) {
                    throw std::invalid_argument("MTableau: entries must be a permutation of 1..n");
                }
                position_[static_cast<std::size_t>(v - 1)] =
                    Node{static_cast<int>(k) + 1, static_cast<int>(r) + 1, static_cast<int>(c) + 1};
                if (c > 0 && d[r][c - 1] >= v) throw std::invalid_argument("MTableau: rows must increase");
                if (r > 0 && d[r - 1][c] >= v) throw std::invalid_argument("MTableau: columns must increase");
            }
        }
    }
}

int MTableau::entry_at(const Node& node) const {
    if (!shape_.contains(node)) throw std::out_of_range("MTableau::entry_at: node outside shape");
    return rows_[static_cast<std::size_t>(node.diagram - 1)][static_cast<std::size_t>(node.row - 1)]
                [static_cast<std::size_t>(node.col - 1)];
}

MTableau MTableau::without_largest() const {
    if (position_.empty()) throw std::logic_error("MTableau::without_largest: empty tableau");
    const Node last = position_.back();
    auto rows = rows_;
    auto& d = rows[static_cast<std::size_t>(last.diagram - 1)];
    d[static_cast<std::size_t>(last.row - 1)].pop_back();
    if (d[static_cast<std::size_t>(last.row - 1)].empty()) d.pop_back();
    auto pos = position_;
    pos.pop_back();
    return MTableau(shape_.without_node(last), std::move(rows), std::move(pos));
}

MTableau MTableau::with_entry_at(const Node& node) const {
    MPartition shape = shape_.with_node(node);
    auto rows = rows_;
    auto& d = rows[static_cast<std::size_t>(node.diagram - 1)];
    if (node.row > static_cast<int>(d.size())) d.emplace_back();
    d[static_cast<std::size_t>(node.row - 1)].push_back(n() + 1);
    auto pos = position_;
    pos.push_back(node);
    return MTableau(std::move(shape), std::move(rows), std::move(pos));
}

ContentColumn content_column(const MPartition& shape, const Node& node) {
    if (!shape.contains(node)) throw std::out_of_range("content_column: node outside shape");
    return {node.diagram, node.content()};
}

ContentString content_string(const MTableau& tab) {
    ContentString s;
    s.m = tab.m();
    for (int i = 1; i <= tab.n(); ++i) s.columns.push_back({tab.node_of(i).diagram, tab.node_of(i).content()});
    return s;
}

namespace {

std::vector<MTableau> fillings(const MPartition& shape) {
    if (shape.size() == 0) return {MTableau(shape.m(), std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(shape.m())))};
    std::vector<MTableau> out;
    for (const Node& node : removable_nodes(shape)) {
        for (const MTableau& t : fillings(shape.without_node(node))) out.push_back(t.with_entry_at(node));
    }
    return out;
}

void sort_canonical(std::vector<MTableau>& tabs) {
    std::vector<std::pair<ContentString, MTableau>> keyed;
    keyed.reserve(tabs.size());
    for (auto& t : tabs) keyed.emplace_back(content_string(t), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return content_string_less(a.first, b.first); });
    tabs.clear();
    for (auto& [k, t] : keyed) tabs.push_back(std::move(t));
}

}  // namespace

std::vector<MTableau> enum_standard_mtableaux(const MPartition& shape) {
    auto tabs = fillings(shape);
    sort_canonical(tabs);
    return tabs;
}

std::vector<MTableau> enum_all_mtableaux(int m, int n) {
    std::vector<MTableau> all;
    for (const auto& shape : enum_mpartitions(m, n)) {
        auto tabs = fillings(shape);
        all.insert(all.end(), std::make_move_iterator(tabs.begin()), std::make_move_iterator(tabs.end()));
    }
    sort_canonical(all);
    return all;
}

CcontReport validate_ccont(const ContentString& s) {
    const auto& col = s.columns;
    const int n = static_cast<int>(col.size());
    auto fail = [](int condition, int j, int k, std::string msg) {
        return CcontReport{false, condition, j, k, std::move(msg)};
    };
    if (s.m < 1) return fail(1, 0, 0, "condition (1): m must be positive");
    if (n > 0 && col[0].content != 0) return fail(1, 1, 0, "condition (1): first content must be 0");
    for (int j = 1; j <= n; ++j) {
        const int r = col[static_cast<std::size_t>(j - 1)].root;
        if (r < 1 || r > s.m) {
            return fail(1, j, 0, "condition (1): column " + std::to_string(j) + " is not an m-th root of unity");
        }
    }
    for (int j = 2; j <= n; ++j) {
        const auto& cj = col[static_cast<std::size_t>(j - 1)];
        if (cj.content == 0) continue;
        bool found = false;
        for (int i = 1; i < j && !found; ++i) {
            const auto& ci = col[static_cast<std::size_t>(i - 1)];
            found = ci.root == cj.root && (ci.content == cj.content - 1 || ci.content == cj.content + 1);
        }
        if (!found) {
            return fail(2, j, 0, "condition (2): column " + std::to_string(j) + " has no earlier neighbour");
        }
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const auto& cj = col[static_cast<std::size_t>(j - 1)];
            const auto& ck = col[static_cast<std::size_t>(k - 1)];
            if (cj != ck) continue;
            bool below = false;
            bool above = false;
            for (int i = j + 1; i < k; ++i) {
                const auto& ci = col[static_cast<std::size_t>(i - 1)];
                if (ci.root != cj.root) continue;
                below = below || ci.content == cj.content - 1;
                above = above || ci.content == cj.content + 1;
            }
            if (!below || !above) {
                return fail(3, j, k,
                            "condition (3): repeated column at " + std::to_string(j) + " and " + std::to_string(k) +
                                " lacks both neighbours in between");
            }
        }
    }
    return {};
}

MTableau string_to_tableau(const ContentString& s) {
    CcontReport report = validate_ccont(s);
    if (!report.valid) throw InvalidContentString(std::move(report));
    MTableau tab(s.m, std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(s.m)));
    for (const auto& c : s.columns) {
        bool placed = false;
        for (const Node& node : addable_nodes(tab.shape())) {
            if (node.diagram == c.root && node.content() == c.content) {
                tab = tab.with_entry_at(node);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("string_to_tableau: valid string without an addable node");
    }
    return tab;
}

std::optional<MTableau> apply_swap(const MTableau& tab, int i) {
    if (i < 1 || i >= tab.n()) throw std::out_of_range("apply_swap: index outside [1, n-1]");
    const Node a = tab.node_of(i);
    const Node b = tab.node_of(i + 1);
    if (a.diagram == b.diagram && (a.row == b.row || a.col == b.col)) return std::nullopt;
    auto rows = tab.rows();
    rows[static_cast<std::size_t>(a.diagram - 1)][static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)] = i + 1;
    rows[static_cast<std::size_t>(b.diagram - 1)][static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = i;
    return MTableau(tab.m(), std::move(rows));
}

std::string format_tableau(const MTableau& tab) {
    std::string s = "(";
    for (std::size_t k = 0; k < tab.rows().size(); ++k) {
        if (k) s += " | ";
        const auto& d = tab.rows()[k];
        if (d.empty()) s += "-";
        for (std::size_t r = 0; r < d.size(); ++r) {
            if (r) s += " / ";
            for (std::size_t c = 0; c < d[r].size(); ++c) s += (c ? " " : "") + std::to_string(d[r][c]);
        }
    }
    return s + ")";
}

}  // namespace gmnrep
