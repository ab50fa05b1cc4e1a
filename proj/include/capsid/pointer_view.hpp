#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capsid/permutation.hpp"
#include "capsid/tree.hpp"

namespace capsid {

// Pointer representation of a tree together with one permutation g: every
// vertex has child pointers and a parent pointer, and every leaf has a
// g-pointer to the leaf labeled g(u). Labels are stored at leaves only.
//
// Vertex handles are preorder positions. The pointer-following accessors
// count every traversal so a run can be audited afterwards; a view is
// therefore single-threaded.
class TreePointerView {
 public:
  using Vertex = std::size_t;
  static constexpr Vertex kNull = static_cast<Vertex>(-1);

  TreePointerView(const AssemblyTree& tree, const Permutation& g);

  Vertex root() const { return 0; }
  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t leaf_count() const { return leaf_count_; }
  bool is_leaf(Vertex v) const { return child_begin_[v] == child_begin_[v + 1]; }
  std::size_t child_count(Vertex v) const { return child_begin_[v + 1] - child_begin_[v]; }
  Point leaf_label(Vertex leaf) const { return label_[leaf]; }

  // Counted traversals.
  Vertex child(Vertex v, std::size_t i);
  Vertex parent(Vertex v);
  Vertex g_image(Vertex leaf);

  // Uncounted reads, for inspection.
  Vertex peek_child(Vertex v, std::size_t i) const { return children_[child_begin_[v] + i]; }
  Vertex peek_parent(Vertex v) const { return parent_[v]; }
  Vertex peek_g_image(Vertex leaf) const { return g_pointer_[leaf]; }

  // Traversal counts. A child pointer is identified by the vertex it points
  // to, so child_traversals(c) counts uses of the pointer parent(c) -> c.
  std::uint32_t child_traversals(Vertex c) const { return child_count_[c]; }
  std::uint32_t parent_traversals(Vertex v) const { return parent_count_[v]; }
  std::uint32_t g_traversals(Vertex leaf) const { return g_count_[leaf]; }
  void reset_counters();

 private:
  std::size_t leaf_count_ = 0;
  std::vector<std::size_t> child_begin_;
  std::vector<Vertex> children_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> g_pointer_;
  std::vector<Point> label_;
  std::vector<std::uint32_t> child_count_;
  std::vector<std::uint32_t> parent_count_;
  std::vector<std::uint32_t> g_count_;
};

inline TreePointerView pointer_view(const AssemblyTree& tree, const Permutation& g) {
  return TreePointerView(tree, g);
}

}  // namespace capsid
