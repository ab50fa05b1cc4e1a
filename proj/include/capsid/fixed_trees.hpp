#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "capsid/bigint.hpp"
#include "capsid/perm_group.hpp"
#include "capsid/tree.hpp"

namespace capsid {

// Where a block came from: the orbits of its part, the subgroup H_i, the
// seed Q_i and the coset representative r with block = r(Q_i).
struct BlockOrigin {
  std::vector<std::size_t> part;  // indices into orbits(G)
  PermGroup subgroup;
  std::vector<Point> seed;
  Permutation representative;
};

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by least point
  std::vector<BlockOrigin> origins;        // parallel to blocks; empty if not constructed

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks == b.blocks; }
};

// True iff `blocks` partitions {1..degree} and g(B) is again a block for every
// g in G and every block B.
bool is_compatible(const PermGroup& group, std::span<const std::vector<Point>> blocks);

// Every compatible block system, built from (partition, subgroups, seeds)
// triples and deduplicated by partition. Ordered by block list. Throws
// DomainError unless G acts simply.
std::vector<BlockSystem> enumerate_block_systems(const PermGroup& group);

// Union of the blocks of all systems.
std::set<std::vector<Point>> distinct_blocks(std::span<const BlockSystem> systems);

// The root's children of a G-fixed tree, as a block system. Throws
// DomainError if some element of G moves the tree.
BlockSystem children_block_system(const PermGroup& group, const AssemblyTree& tree);

struct FixedTreeDiagnostics {
  std::size_t generated = 0;  // trees emitted by the recursion
  std::size_t distinct = 0;   // after set-level deduplication
  bool filters_sufficed() const { return generated == distinct; }
};

// Default cap on the number of trees one generation may produce.
inline constexpr std::size_t kDefaultFixedTreeBudget = 2'000'000;

// All assembly trees on {1..degree} fixed by every element of G, each once,
// in canonical order. Throws DomainError unless G acts simply and
// LimitError when more than `budget` trees are produced.
std::vector<AssemblyTree> generate_fixed_trees(const PermGroup& group,
                                               FixedTreeDiagnostics* diagnostics = nullptr,
                                               std::size_t budget = kDefaultFixedTreeBudget);

BigInt count_fixed_trees_direct(const PermGroup& group, std::size_t budget = kDefaultFixedTreeBudget);

}  // namespace capsid
