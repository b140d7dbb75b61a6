#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gmnrep {

/// A box of a Young m-diagram. All coordinates are 1-based.
struct Node {
    int diagram = 1;
    int row = 1;
    int col = 1;

    int content() const { return col - row; }
    friend auto operator<=>(const Node&, const Node&) = default;
};

/**
 * m-tuple of integer partitions (a Young m-diagram). Components may be empty.
 */
class MPartition {
public:
    MPartition() = default;
    /// Throws std::invalid_argument unless every component is weakly decreasing and positive.
    MPartition(int m, std::vector<std::vector<int>> parts);

    static MPartition empty(int m);

    int m() const { return m_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    /// k is 1-based.
    const std::vector<int>& diagram(int k) const { return parts_[static_cast<std::size_t>(k - 1)]; }
    int size() const;
    int diagram_size(int k) const;

    bool contains(const Node& node) const;
    MPartition with_node(const Node& node) const;
    MPartition without_node(const Node& node) const;

    friend auto operator<=>(const MPartition&, const MPartition&) = default;

private:
    int m_ = 1;
    std::vector<std::vector<int>> parts_{{}};
};

/// All m-partitions of n: diagram 1 takes the most boxes first; within a size,
/// partitions run from the longest first row down.
std::vector<MPartition> enum_mpartitions(int m, int n);

/// Ordered by diagram, then row.
std::vector<Node> addable_nodes(const MPartition& shape);
std::vector<Node> removable_nodes(const MPartition& shape);

/// Compact text form "3,2,1|3,1" (an empty diagram is an empty field).
std::string format_shape(const MPartition& shape);
/// Accepts the compact form or a JSON list of lists; m is inferred from the number of diagrams.
MPartition parse_shape(const std::string& text);

}  // namespace gmnrep
