#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capsid/bigint.hpp"
#include "capsid/perm_group.hpp"
#include "capsid/permutation.hpp"

namespace capsid {

// A rooted tree whose leaves are bijectively labeled by a finite set X of
// positive integers and whose internal vertices have at least two children.
// A vertex is identified with the set of leaf labels below it.
//
// Storage is canonical: vertices are kept in preorder, children sorted by
// their least leaf label. Consequently the first leaf of every subtree is its
// least label, and two trees are equal iff their storage is identical.
class AssemblyTree {
 public:
  struct Node {
    std::uint32_t first_leaf;    // offset of the subtree's leaves in leaves()
    std::uint32_t leaf_count;
    std::uint32_t subtree_size;  // vertices in the subtree, itself included
    std::int32_t parent;         // -1 for the root

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  static AssemblyTree leaf(Point label);
  // Root with the given subtrees as children (any order). Throws DomainError
  // if fewer than two children are given or their leaf sets overlap.
  static AssemblyTree join(std::vector<AssemblyTree> children);

  std::size_t vertex_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }
  const Node& node(std::size_t v) const { return nodes_[v]; }
  bool is_leaf(std::size_t v) const { return nodes_[v].subtree_size == 1; }
  // Leaf labels in preorder; a subtree's labels are a contiguous range.
  std::span<const Point> leaves() const { return leaves_; }
  std::span<const Point> leaves_of(std::size_t v) const {
    return std::span<const Point>(leaves_).subspan(nodes_[v].first_leaf, nodes_[v].leaf_count);
  }
  Point min_label(std::size_t v) const { return leaves_[nodes_[v].first_leaf]; }
  std::vector<std::size_t> children(std::size_t v) const;
  // Sorted label set of vertex v.
  std::vector<Point> label(std::size_t v) const;
  // Sorted leaf set X.
  std::vector<Point> leaf_set() const;
  // Copy of the subtree rooted at v.
  AssemblyTree subtree(std::size_t v) const;

  // Canonical text, e.g. "((1,2),3,4)"; a single leaf prints as "1".
  std::string to_string() const;

  friend bool operator==(const AssemblyTree&, const AssemblyTree&) = default;
  friend std::strong_ordering operator<=>(const AssemblyTree& a, const AssemblyTree& b) {
    if (auto c = a.leaves_ <=> b.leaves_; c != 0) return c;
    return a.nodes_ <=> b.nodes_;
  }

 private:
  friend class TreeEnumerator;
  friend AssemblyTree act(const Permutation& g, const AssemblyTree& tree);

  std::vector<Node> nodes_;
  std::vector<Point> leaves_;
};

// Parses nested parentheses with comma-separated children, e.g. "((1,2),3,4)".
// Whitespace is ignored. Throws ParseError on malformed syntax, duplicate
// leaves, or internal vertices with fewer than two children.
AssemblyTree parse_tree(std::string_view text);

// g(tau): every vertex label v replaced by g(v). g must cover every leaf.
AssemblyTree act(const Permutation& g, const AssemblyTree& tree);

// Largest leaf set accepted by the exhaustive enumerator.
inline constexpr std::size_t kMaxEnumerationLeaves = 9;

// Calls `visit` once for every assembly tree on the given labels, in a fixed
// order: root partitions are generated block by block, the block holding the
// least remaining label first. The tree passed to `visit` is reused between
// calls; copy it to keep it. Throws LimitError beyond kMaxEnumerationLeaves and
// DomainError for empty or repeated labels.
void for_each_tree(std::span<const Point> labels,
                   const std::function<void(const AssemblyTree&)>& visit);

std::vector<AssemblyTree> enumerate_all_trees(std::span<const Point> labels);

// Number of assembly trees on n labeled leaves, from the tree series.
BigInt count_trees(std::size_t n);

// {g(tau) : g in G}.
std::set<AssemblyTree> orbit_of_tree(const PermGroup& group, const AssemblyTree& tree);

}  // namespace capsid
