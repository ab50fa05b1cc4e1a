#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "capsid/permutation.hpp"

namespace capsid {

// Default bound on |G| for subgroup enumeration. The environment variable
// CAPSID_MAX_GROUP_ORDER overrides it.
std::size_t default_max_group_order();

// A finite permutation group with its complete element set.
//
// Elements are kept sorted (lexicographic on image sequences), so the
// identity is always elements()[0] and two groups are equal iff their
// element lists are equal.
class PermGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> generators() const { return generators_; }
  std::span<const Permutation> elements() const { return elements_; }

  bool contains(const Permutation& p) const;
  // Position of p in elements(); p must be a member.
  std::size_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend PermGroup close_generators(std::vector<Permutation> generators, std::size_t degree);
  friend struct GroupBuilder;

  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> sorted_elements);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Multiplication table over element indices of a group; index 0 is the
// identity. Used wherever many products of the same group are needed.
class MultiplicationTable {
 public:
  explicit MultiplicationTable(const PermGroup& group);

  std::size_t size() const { return size_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;

 private:
  std::size_t size_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

// Smallest group containing the generators. Identity generators are
// dropped from the stored generator list. Throws DomainError when degrees
// disagree.
PermGroup close_generators(std::vector<Permutation> generators, std::size_t degree);

// Orbits of the natural action on {1..degree}; each orbit sorted, orbits
// ordered by their least point.
std::vector<std::vector<Point>> orbits(const PermGroup& group);

// True iff no non-identity element fixes a point.
bool is_simple_action(const PermGroup& group);

// Every subgroup exactly once, ordered by (order, sorted element list).
// The first entry is the trivial group and the last is `group` itself.
// Throws LimitError when |group| > max_order.
std::vector<PermGroup> all_subgroups(const PermGroup& group,
                                     std::size_t max_order = default_max_group_order());

// Partitions `subgroups` (all subgroups of `group`) into conjugacy classes.
// Each class lists indices into `subgroups` in ascending order; the first
// index is the class representative. Classes are ordered by representative.
std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& group,
                                                        std::span<const PermGroup> subgroups);

std::vector<std::vector<PermGroup>> conjugacy_classes_of_subgroups(const PermGroup& group);

// Abstract isomorphism test, by backtracking over images of a small
// generating set and checking the induced map on the Cayley graph.
bool are_isomorphic(const PermGroup& a, const PermGroup& b);

// Sorted multiset of element orders.
std::vector<std::size_t> element_order_profile(const PermGroup& group);

// g H g^-1.
PermGroup conjugate(const PermGroup& subgroup, const Permutation& g);

// Throws DomainError unless `subgroup` <= `group`.
PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup);

// One representative per left coset gH, each the least element of its
// coset; returned in ascending order (the identity first).
// Throws DomainError unless `subgroup` <= `group`.
std::vector<Permutation> left_coset_representatives(const PermGroup& group,
                                                    const PermGroup& subgroup);

// Left-translation action of `group` on its own sorted element list:
// point i+1 stands for elements()[i].
PermGroup regular_action(const PermGroup& group);

// `copies` disjoint copies of the action of `group`: point x of copy c
// (0-based) becomes c * degree + x.
PermGroup replicate_action(const PermGroup& group, std::size_t copies);

PermGroup trivial_group(std::size_t degree);
// <(1 2 ... k)> acting regularly on k points.
PermGroup cyclic_group(std::size_t k);
// {id, (1 2)(3 4), (1 3)(2 4), (1 4)(2 3)} acting on 4 points.
PermGroup klein4_group();
// The rotation group of the icosahedron in its degree-60 regular action,
// built from <(1 2 3 4 5), (1 2 3)> = A5.
PermGroup icosahedral_group();

}  // namespace capsid
