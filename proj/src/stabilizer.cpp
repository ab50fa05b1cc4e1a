#include "capsid/stabilizer.hpp"

#include <algorithm>

#include "capsid/errors.hpp"

namespace capsid {

using Vertex = TreePointerView::Vertex;

std::optional<Vertex> locate_image(TreePointerView& view, Vertex v) {
  if (view.is_leaf(v)) {
    const Vertex image = view.g_image(v);
    if (image == TreePointerView::kNull) return std::nullopt;
    return image;
  }
  const std::size_t k = view.child_count(v);
  Vertex common = TreePointerView::kNull;
  for (std::size_t i = 0; i < k; ++i) {
    const auto image = locate_image(view, view.child(v, i));
    if (!image) return std::nullopt;
    const Vertex p = view.parent(*image);
    if (p == TreePointerView::kNull) return std::nullopt;
    if (i == 0) {
      // The children's images must be all of w's children, not a subset;
      // otherwise two vertices could claim the same image.
      if (view.child_count(p) != k) return std::nullopt;
      common = p;
    } else if (p != common) {
      return std::nullopt;
    }
  }
  return common;
}

bool fixes(const Permutation& g, const AssemblyTree& tree) {
  TreePointerView view(tree, g);
  const auto image = locate_image(view, view.root());
  return image && *image == view.root();
}

StabilizerResult stabilizer(const PermGroup& group, const AssemblyTree& tree) {
  const auto leaves = tree.leaf_set();
  if (static_cast<std::size_t>(leaves.back()) > group.degree()) {
    throw DomainError("tree leaf " + std::to_string(leaves.back()) + " outside the group's points 1.." +
                      std::to_string(group.degree()));
  }
  for (const auto& g : group.generators()) {
    for (Point x : leaves) {
      if (!std::binary_search(leaves.begin(), leaves.end(), g(x))) {
        throw DomainError("tree leaf set is not invariant under the group");
      }
    }
  }

  const MultiplicationTable table(group);
  const std::size_t n = table.size();
  const auto elements = group.elements();

  std::vector<std::size_t> fixing;  // R, identity included
  std::vector<bool> in_subgroup(n, false);
  in_subgroup[0] = true;
  std::vector<std::size_t> non_fixing;  // C_R
  std::vector<bool> undecided(n, true);

  auto recompute_subgroup = [&] {
    std::fill(in_subgroup.begin(), in_subgroup.end(), false);
    std::vector<std::size_t> members{0};
    in_subgroup[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : fixing) {
        const std::size_t y = table.multiply(members[i], s);
        if (!in_subgroup[y]) {
          in_subgroup[y] = true;
          members.push_back(y);
        }
      }
    }
    return members;
  };
  std::vector<std::size_t> subgroup_members{0};

  for (;;) {
    const auto next = std::find(undecided.begin(), undecided.end(), true);
    if (next == undecided.end()) break;
    const auto g = static_cast<std::size_t>(next - undecided.begin());
    if (fixes(elements[g], tree)) {
      fixing.push_back(g);
      subgroup_members = recompute_subgroup();
      // Keep the least representative of each left coset of <R>.
      std::sort(non_fixing.begin(), non_fixing.end());
      std::vector<bool> covered(n, false);
      std::vector<std::size_t> kept;
      for (std::size_t c : non_fixing) {
        if (covered[c]) continue;
        kept.push_back(c);
        for (std::size_t h : subgroup_members) covered[table.multiply(c, h)] = true;
      }
      non_fixing = std::move(kept);
    } else {
      non_fixing.push_back(g);
    }
    for (std::size_t h : subgroup_members) {
      undecided[h] = false;
      for (std::size_t c : non_fixing) undecided[table.multiply(c, h)] = false;
    }
  }

  std::vector<Permutation> gens;
  for (std::size_t g : fixing) {
    if (g != 0) gens.push_back(elements[g]);
  }
  PermGroup closure = close_generators(gens, group.degree());
  return {std::move(gens), std::move(closure)};
}

TraversalAudit pointer_traversal_audit(const TreePointerView& view) {
  TraversalAudit audit;
  audit.pointer_count = 1;  // the root's (null) parent pointer
  for (Vertex v = 0; v < view.vertex_count(); ++v) {
    audit.max_parent = std::max<std::size_t>(audit.max_parent, view.parent_traversals(v));
    audit.total += view.parent_traversals(v);
    if (v != view.root()) {
      audit.max_child = std::max<std::size_t>(audit.max_child, view.child_traversals(v));
      audit.total += view.child_traversals(v);
      audit.pointer_count += 2;  // the child pointer into v and v's parent pointer
    }
    if (view.is_leaf(v)) {
      audit.max_g = std::max<std::size_t>(audit.max_g, view.g_traversals(v));
      audit.total += view.g_traversals(v);
      audit.pointer_count += 1;
    }
  }
  return audit;
}

}  // namespace capsid
