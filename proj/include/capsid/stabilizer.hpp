#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "capsid/perm_group.hpp"
#include "capsid/pointer_view.hpp"
#include "capsid/tree.hpp"

namespace capsid {

// Finds the vertex g(v) of the tree, where g is the permutation the view was
// built for: leaves follow their g-pointer; an internal vertex succeeds when
// the images of all its children exist and share one parent w, and w has as
// many children as v. Returns nullopt when g(v) is not a vertex.
//
// Every child, parent and g pointer is followed at most once per call from
// the root.
std::optional<TreePointerView::Vertex> locate_image(TreePointerView& view,
                                                    TreePointerView::Vertex v);

// True iff g(tree) == tree.
bool fixes(const Permutation& g, const AssemblyTree& tree);

struct StabilizerResult {
  std::vector<Permutation> generators;  // non-identity elements found to fix the tree
  PermGroup group;                      // their closure: the full stabilizer
};

// stab_G(tree), found by classifying elements of G as fixing / non-fixing and
// discarding whole cosets of the partial stabilizer at each step. Undecided
// elements are visited in ascending order. The leaf set must lie within
// 1..degree and be invariant under G; throws DomainError otherwise.
StabilizerResult stabilizer(const PermGroup& group, const AssemblyTree& tree);

struct TraversalAudit {
  std::size_t max_child = 0;
  std::size_t max_parent = 0;
  std::size_t max_g = 0;
  std::size_t total = 0;
  // child + parent + g pointers present in the view
  std::size_t pointer_count = 0;

  bool each_pointer_at_most_once() const { return max_child <= 1 && max_parent <= 1 && max_g <= 1; }
  bool within_linear_bound() const { return total <= pointer_count; }
};

TraversalAudit pointer_traversal_audit(const TreePointerView& view);

}  // namespace capsid
