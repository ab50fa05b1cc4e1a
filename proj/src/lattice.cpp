#include "capsid/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "capsid/errors.hpp"

namespace capsid {

SubgroupLattice::SubgroupLattice(const PermGroup& group)
    : group_(group), nodes_(all_subgroups(group)) {
  const std::size_t n = nodes_.size();
  leq_.assign(n * n, false);
  mobius_.assign(n * n, 0);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) leq_[h * n + k] = nodes_[h].is_subgroup_of(nodes_[k]);
  }
  // mu(H,H) = 1 and mu(H,K) = -sum_{H <= L < K} mu(H,L). Nodes are sorted by
  // order, so every L strictly below K precedes it.
  for (std::size_t h = 0; h < n; ++h) {
    mobius_[h * n + h] = 1;
    for (std::size_t k = h + 1; k < n; ++k) {
      if (!leq(h, k)) continue;
      long long sum = 0;
      for (std::size_t l = h; l < k; ++l) {
        if (leq(h, l) && leq(l, k)) sum += mobius_[h * n + l];
      }
      mobius_[h * n + k] = -sum;
    }
  }
  classes_ = conjugacy_classes(group_, nodes_);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t i : classes_[c]) class_of_[i] = c;
  }
}

std::size_t SubgroupLattice::index_of(const PermGroup& subgroup) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == subgroup) return i;
  }
  throw DomainError("subgroup is not a node of the lattice");
}

std::vector<std::size_t> interval_above(const SubgroupLattice& lattice, std::size_t h) {
  if (h >= lattice.size()) throw DomainError("subgroup is not a node of the lattice");
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice.leq(h, k)) result.push_back(k);
  }
  return result;
}

std::vector<std::size_t> interval_above(const SubgroupLattice& lattice, const PermGroup& h) {
  return interval_above(lattice, lattice.index_of(h));
}

std::vector<HasseEdge> hasse_edge_counts(const SubgroupLattice& lattice) {
  const std::size_t n = lattice.size();
  auto covers = [&](std::size_t h, std::size_t k) {
    if (h == k || !lattice.leq(h, k)) return false;
    for (std::size_t l = 0; l < n; ++l) {
      if (l != h && l != k && lattice.leq(h, l) && lattice.leq(l, k)) return false;
    }
    return true;
  };
  const auto& classes = lattice.classes();
  std::vector<HasseEdge> edges;
  for (std::size_t lo = 0; lo < classes.size(); ++lo) {
    for (std::size_t up = 0; up < classes.size(); ++up) {
      if (lo == up) continue;
      bool any_cover = false;
      for (std::size_t h : classes[lo]) {
        for (std::size_t k : classes[up]) any_cover = any_cover || covers(h, k);
      }
      if (!any_cover) continue;
      const std::size_t upper_rep = classes[up].front();
      const std::size_t lower_rep = classes[lo].front();
      HasseEdge e{lo, up, lattice.node(lower_rep).order(), lattice.node(upper_rep).order(), 0, 0};
      for (std::size_t h : classes[lo]) e.lower_per_upper += lattice.leq(h, upper_rep) ? 1 : 0;
      for (std::size_t k : classes[up]) e.upper_per_lower += lattice.leq(lower_rep, k) ? 1 : 0;
      edges.push_back(e);
    }
  }
  return edges;
}

std::string mobius_csv(const SubgroupLattice& lattice) {
  std::ostringstream out;
  const std::size_t n = lattice.size();
  auto label = [&](std::size_t i) {
    return std::to_string(i) + ":" + std::to_string(lattice.node(i).order());
  };
  out << "H\\K";
  for (std::size_t k = 0; k < n; ++k) out << ',' << label(k);
  out << '\n';
  for (std::size_t h = 0; h < n; ++h) {
    out << label(h);
    for (std::size_t k = 0; k < n; ++k) {
      out << ',';
      if (lattice.leq(h, k)) out << lattice.mobius(h, k);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace capsid
