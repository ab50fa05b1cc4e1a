#include "capsid/pointer_view.hpp"

#include <algorithm>
#include <unordered_map>

#include "capsid/errors.hpp"

namespace capsid {

TreePointerView::TreePointerView(const AssemblyTree& tree, const Permutation& g) {
  const std::size_t n = tree.vertex_count();
  parent_.resize(n);
  g_pointer_.assign(n, kNull);
  label_.assign(n, 0);
  child_begin_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto kids = tree.children(v);
    child_begin_[v + 1] = child_begin_[v] + kids.size();
    children_.insert(children_.end(), kids.begin(), kids.end());
    const auto p = tree.node(v).parent;
    parent_[v] = p < 0 ? kNull : static_cast<Vertex>(p);
  }
  std::unordered_map<Point, Vertex> leaf_of;
  for (std::size_t v = 0; v < n; ++v) {
    if (!tree.is_leaf(v)) continue;
    label_[v] = tree.min_label(v);
    leaf_of.emplace(label_[v], v);
    ++leaf_count_;
  }
  for (const auto& [label, v] : leaf_of) {
    if (static_cast<std::size_t>(label) > g.degree()) {
      throw DomainError("permutation of degree " + std::to_string(g.degree()) +
                        " does not act on leaf " + std::to_string(label));
    }
    // A g-pointer leaving the leaf set stays null.
    if (auto it = leaf_of.find(g(label)); it != leaf_of.end()) g_pointer_[v] = it->second;
  }
  child_count_.assign(n, 0);
  parent_count_.assign(n, 0);
  g_count_.assign(n, 0);
}

TreePointerView::Vertex TreePointerView::child(Vertex v, std::size_t i) {
  const Vertex c = children_[child_begin_[v] + i];
  ++child_count_[c];
  return c;
}

TreePointerView::Vertex TreePointerView::parent(Vertex v) {
  ++parent_count_[v];
  return parent_[v];
}

TreePointerView::Vertex TreePointerView::g_image(Vertex leaf) {
  ++g_count_[leaf];
  return g_pointer_[leaf];
}

void TreePointerView::reset_counters() {
  std::fill(child_count_.begin(), child_count_.end(), 0u);
  std::fill(parent_count_.begin(), parent_count_.end(), 0u);
  std::fill(g_count_.begin(), g_count_.end(), 0u);
}

}  // namespace capsid
