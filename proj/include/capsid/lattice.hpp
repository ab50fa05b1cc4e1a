#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "capsid/perm_group.hpp"

namespace capsid {

// All subgroups of a group, ordered as all_subgroups() returns them, with
// containment and the Moebius function of the containment order.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<PermGroup>& nodes() const { return nodes_; }
  const PermGroup& node(std::size_t i) const { return nodes_[i]; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes_.size() - 1; }

  bool leq(std::size_t h, std::size_t k) const { return leq_[h * size() + k]; }
  // mu(H, K); zero when H is not contained in K.
  long long mobius(std::size_t h, std::size_t k) const { return mobius_[h * size() + k]; }

  // Node index of a subgroup; throws DomainError if it is not a node.
  std::size_t index_of(const PermGroup& subgroup) const;

  // Conjugacy classes over node indices; see conjugacy_classes().
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t node) const { return class_of_[node]; }

 private:
  PermGroup group_;
  std::vector<PermGroup> nodes_;
  std::vector<bool> leq_;
  std::vector<long long> mobius_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

inline SubgroupLattice build_lattice(const PermGroup& group) { return SubgroupLattice(group); }

// Node indices K with H <= K <= G, ascending.
std::vector<std::size_t> interval_above(const SubgroupLattice& lattice, std::size_t h);
std::vector<std::size_t> interval_above(const SubgroupLattice& lattice, const PermGroup& h);

// Containment multiplicities between conjugacy classes joined by at least one
// covering pair (a maximal subgroup relation).
struct HasseEdge {
  std::size_t lower_class;
  std::size_t upper_class;
  std::size_t lower_order;
  std::size_t upper_order;
  std::size_t lower_per_upper;  // class-`lower` subgroups inside one class-`upper` subgroup
  std::size_t upper_per_lower;  // class-`upper` subgroups containing one class-`lower` subgroup
};

std::vector<HasseEdge> hasse_edge_counts(const SubgroupLattice& lattice);

// Moebius matrix as CSV. The header row and first column label each node as
// "index:order"; cells are blank where H is not contained in K.
std::string mobius_csv(const SubgroupLattice& lattice);

}  // namespace capsid
