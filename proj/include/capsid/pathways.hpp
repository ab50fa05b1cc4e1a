#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "capsid/bigint.hpp"
#include "capsid/lattice.hpp"
#include "capsid/perm_group.hpp"

namespace capsid {

// t-bar(H) = sum over H <= K <= G of mu(H,K) t(K). `t` is indexed by lattice
// node. Throws DomainError on a negative result.
BigInt tbar(const SubgroupLattice& lattice, std::size_t h, const std::vector<BigInt>& t);

struct SubgroupClassSummary {
  std::size_t representative;  // lattice node index
  std::size_t order;
  std::size_t class_size;
  std::size_t orbit_count;     // |X| / |H|
  BigInt t;
  BigInt tbar;
};

struct PathwayDistribution {
  std::size_t leaf_count = 0;
  BigInt total_trees;
  std::map<std::size_t, BigInt> per_divisor;  // m -> N(m), every divisor m of |G|
  std::vector<SubgroupClassSummary> classes;  // in lattice class order

  BigInt total_pathways() const;
};

// t(K) for every node K of the lattice of a simply acting G, from the series.
std::vector<BigInt> fixed_counts(const SubgroupLattice& lattice);

// Throws DomainError unless G acts simply.
PathwayDistribution pathway_size_distribution(const PermGroup& group);
PathwayDistribution pathway_size_distribution(const SubgroupLattice& lattice);

struct PathwayProbability {
  std::size_t size;  // m
  BigInt count;      // N(m)
  Rational probability;
};

// One row per divisor m with N(m) > 0, ascending in m.
std::vector<PathwayProbability> pathway_probabilities(const PathwayDistribution& d);

// (1/|G|) sum over g of t(<g>): the number of orbits by Burnside's lemma.
BigInt burnside_pathway_count(const PermGroup& group);

struct IcosahedralReport {
  PathwayDistribution distribution;
  std::string text;
};

// The T = 1 icosahedral computation (T copies of the regular action
// otherwise). Text holds the t-bar table, the pathway table, the comparison
// footer and the Moebius matrix CSV.
IcosahedralReport icosahedral_report(std::size_t t_number = 1);

// Aligned "m  N(m)  probability" table, or CSV.
std::string format_pathway_table(const PathwayDistribution& d, bool csv);

}  // namespace capsid
