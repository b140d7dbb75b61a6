#include "gmnrep/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace gmnrep {

namespace {

// Partitions of n with largest first row first.
void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(n, n, cur, out);
    return out;
}

void mpartitions(int m, int k, int remaining, std::vector<std::vector<int>>& cur, std::vector<MPartition>& out) {
    if (k == m) {
        if (remaining == 0) out.emplace_back(m, cur);
        return;
    }
    if (k == m - 1) {
        for (const auto& p : partitions_of(remaining)) {
            cur.push_back(p);
            mpartitions(m, k + 1, 0, cur, out);
            cur.pop_back();
        }
        return;
    }
    for (int size = remaining; size >= 0; --size) {
        for (const auto& p : partitions_of(size)) {
            cur.push_back(p);
            mpartitions(m, k + 1, remaining - size, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

MPartition::MPartition(int m, std::vector<std::vector<int>> parts) : m_(m), parts_(std::move(parts)) {
    if (m < 1) throw std::invalid_argument("MPartition: m must be positive");
    if (parts_.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("MPartition: expected " + std::to_string(m) + " diagrams, got " +
                                    std::to_string(parts_.size()));
    }
    for (const auto& p : parts_) {
        for (std::size_t r = 0; r < p.size(); ++r) {
            if (p[r] <= 0) throw std::invalid_argument("MPartition: row lengths must be positive");
            if (r > 0 && p[r] > p[r - 1]) throw std::invalid_argument("MPartition: rows must be weakly decreasing");
        }
    }
}

MPartition MPartition::empty(int m) { return MPartition(m, std::vector<std::vector<int>>(static_cast<std::size_t>(m))); }

int MPartition::diagram_size(int k) const {
    const auto& d = diagram(k);
    return std::accumulate(d.begin(), d.end(), 0);
}

int MPartition::size() const {
    int s = 0;
    for (int k = 1; k <= m_; ++k) s += diagram_size(k);
    return s;
}

bool MPartition::contains(const Node& node) const {
    if (node.diagram < 1 || node.diagram > m_ || node.row < 1 || node.col < 1) return false;
    const auto& d = diagram(node.diagram);
    return node.row <= static_cast<int>(d.size()) && node.col <= d[static_cast<std::size_t>(node.row - 1)];
}

MPartition MPartition::with_node(const Node& node) const {
    auto parts = parts_;
    auto& d = parts.at(static_cast<std::size_t>(node.diagram - 1));
    if (node.row == static_cast<int>(d.size()) + 1 && node.col == 1) {
        d.push_back(1);
    } else if (node.row <= static_cast<int>(d.size()) && d[static_cast<std::size_t>(node.row - 1)] + 1 == node.col) {
        ++d[static_cast<std::size_t>(node.row - 1)];
    } else {
        throw std::invalid_argument("MPartition::with_node: node is not at the end of a row");
    }
    return MPartition(m_, std::move(parts));
}

MPartition MPartition::without_node(const Node& node) const {
    if (!contains(node)) throw std::invalid_argument("MPartition::without_node: node outside shape");
    auto parts = parts_;
    auto& d = parts[static_cast<std::size_t>(node.diagram - 1)];
    auto& len = d[static_cast<std::size_t>(node.row - 1)];
    if (len != node.col) throw std::invalid_argument("MPartition::without_node: node is not at the end of its row");
    --len;
    if (len == 0) d.pop_back();
    return MPartition(m_, std::move(parts));
}

std::vector<MPartition> enum_mpartitions(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("enum_mpartitions: need m >= 1, n >= 0");
    std::vector<MPartition> out;
    std::vector<std::vector<int>> cur;
    mpartitions(m, 0, n, cur, out);
    return out;
}

std::vector<Node> addable_nodes(const MPartition& shape) {
    std::vector<Node> out;
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& d = shape.diagram(k);
        const int rows = static_cast<int>(d.size());
        for (int r = 1; r <= rows + 1; ++r) {
            const int len = r <= rows ? d[static_cast<std::size_t>(r - 1)] : 0;
            const int above = r == 1 ? -1 : d[static_cast<std::size_t>(r - 2)];
            if (r == 1 || above > len) out.push_back({k, r, len + 1});
        }
    }
    return out;
}

std::vector<Node> removable_nodes(const MPartition& shape) {
    std::vector<Node> out;
    for (int k = 1; k <= shape.m(); ++k) {
        const auto& d = shape.diagram(k);
        const int rows = static_cast<int>(d.size());
        for (int r = 1; r <= rows; ++r) {
            const int len = d[static_cast<std::size_t>(r - 1)];
            const int below = r < rows ? d[static_cast<std::size_t>(r)] : 0;
            if (below < len) out.push_back({k, r, len});
        }
    }
    return out;
}

std::string format_shape(const MPartition& shape) {
    std::string s;
    for (int k = 1; k <= shape.m(); ++k) {
        if (k > 1) s += '|';
        const auto& d = shape.diagram(k);
        for (std::size_t r = 0; r < d.size(); ++r) s += (r ? "," : "") + std::to_string(d[r]);
    }
    return s;
}

MPartition parse_shape(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        auto j = nlohmann::json::parse(text);
        auto parts = j.get<std::vector<std::vector<int>>>();
        const int m = static_cast<int>(parts.size());
        return MPartition(m, std::move(parts));
    }
    std::vector<std::vector<int>> parts(1);
    std::string field;
    auto flush_row = [&] {
        if (field.empty()) return;
        int v = 0;
        auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || p != field.data() + field.size()) {
            throw std::invalid_argument("parse_shape: bad row length '" + field + "'");
        }
        parts.back().push_back(v);
        field.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_row();
        } else if (c == '|') {
            flush_row();
            parts.emplace_back();
        } else if (c != ' ' && c != '(' && c != ')') {
            field += c;
        }
    }
    flush_row();
    const int m = static_cast<int>(parts.size());
    return MPartition(m, std::move(parts));
}

}  // namespace gmnrep
