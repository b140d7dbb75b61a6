#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmnrep/cyclotomic.hpp"
#include "gmnrep/partition.hpp"

namespace gmnrep {

/// Eigenvalue column (xi_root, content) of a node: root label in [1, m], classical content s - r.
struct ContentColumn {
    int root = 1;
    int content = 0;

    CycRat p(int m) const { return root_of_unity(m, root); }
    friend auto operator<=>(const ContentColumn&, const ContentColumn&) = default;
};

struct ContentString {
    int m = 1;
    std::vector<ContentColumn> columns;

    std::size_t size() const { return columns.size(); }
    friend bool operator==(const ContentString&, const ContentString&) = default;
};

/// Canonical ordering of content strings: lexicographic in the columns, each
/// column keyed by (root label ascending, content descending).
bool content_string_less(const ContentString& a, const ContentString& b);

/**
 * Standard Young m-tableau: every diagram of the shape filled with distinct
 * entries from 1..n, increasing along rows and down columns.
 */
class MTableau {
public:
    MTableau() = default;
    /// rows[k][r] lists the entries of row r+1 of diagram k+1. Throws std::invalid_argument if not standard.
    MTableau(int m, std::vector<std::vector<std::vector<int>>> rows);

    int m() const { return shape_.m(); }
    int n() const { return static_cast<int>(position_.size()); }
    const MPartition& shape() const { return shape_; }
    const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }
    /// Node holding entry i (1-based).
    const Node& node_of(int i) const { return position_.at(static_cast<std::size_t>(i - 1)); }
    int entry_at(const Node& node) const;

    /// Drops the node holding n.
    MTableau without_largest() const;
    /// Places n+1 at an addable node.
    MTableau with_entry_at(const Node& node) const;

    friend bool operator==(const MTableau& a, const MTableau& b) { return a.rows_ == b.rows_; }

private:
    MTableau(MPartition shape, std::vector<std::vector<std::vector<int>>> rows, std::vector<Node> position)
        : shape_(std::move(shape)), rows_(std::move(rows)), position_(std::move(position)) {}

    MPartition shape_;
    std::vector<std::vector<std::vector<int>>> rows_;
    std::vector<Node> position_;
};

ContentColumn content_column(const MPartition& shape, const Node& node);
ContentString content_string(const MTableau& tab);

/// All standard fillings of shape, in canonical content-string order.
std::vector<MTableau> enum_standard_mtableaux(const MPartition& shape);
/// All standard m-tableaux of size n over every shape, in canonical content-string order.
std::vector<MTableau> enum_all_mtableaux(int m, int n);

struct CcontReport {
    bool valid = true;
    int condition = 0;  // 1, 2 or 3 when invalid
    int j = 0;          // 1-based index of the offending column
    int k = 0;          // second index for condition (3)
    std::string message;
};

/// Checks the three defining conditions of a classical content string and names the first failure.
CcontReport validate_ccont(const ContentString& s);

class InvalidContentString : public std::domain_error {
public:
    explicit InvalidContentString(CcontReport report)
        : std::domain_error("invalid content string: " + report.message), report_(std::move(report)) {}
    const CcontReport& report() const { return report_; }

private:
    CcontReport report_;
};

/// Inverse of content_string. Throws InvalidContentString on strings outside cCont_m(n).
MTableau string_to_tableau(const ContentString& s);

/// Exchanges i and i+1; std::nullopt marks a non-standard result (read as the zero vector).
std::optional<MTableau> apply_swap(const MTableau& tab, int i);

std::string format_tableau(const MTableau& tab);

}  // namespace gmnrep
