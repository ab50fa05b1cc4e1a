#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "capsid/bigint.hpp"
#include "capsid/perm_group.hpp"

namespace capsid {

// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact rational
// coefficients. Counting series are exponential generating functions: the
// n-th count is n! * c_n.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coefficients_(order + 1) {}
  // Throws DomainError for an empty coefficient list.
  explicit PowerSeries(std::vector<Rational> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coefficients_[n]; }
  Rational& operator[](std::size_t n) { return coefficients_[n]; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;

  // n! * c_n. Throws DomainError if that is not a non-negative integer, which
  // for a counting series means an arithmetic bug upstream.
  BigInt count(std::size_t n) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

// Binary operations require equal truncation orders (DomainError otherwise).
PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
// exp(a); requires a[0] == 0.
PowerSeries series_exp(const PowerSeries& a);
// a(k x).
PowerSeries scale_argument(const PowerSeries& a, std::size_t k);
PowerSeries scalar_mul(const PowerSeries& a, const Rational& q);
PowerSeries truncate(const PowerSeries& a, std::size_t order);

// EGF f of assembly trees on n labeled leaves, the solution of
// 1 - x + 2 f(x) = exp(f(x)) with f(0) = 0.
PowerSeries base_tree_series(std::size_t order);

// One term (1/(G:H)) f_H((G:H) x) of the functional equation for f_G.
struct SeriesTerm {
  std::size_t index;           // (G:H)
  std::size_t subgroup_order;  // |H|
};

// The terms of 1 + 2 f_G(x) = exp(sum over H <= G of f_H((G:H)x)/(G:H)),
// one per subgroup, in all_subgroups() order (the H = G term last).
std::vector<SeriesTerm> functional_equation_terms(const PermGroup& group);

// Solves the fixed-tree functional equations. Results are memoized by the
// isomorphism type of the group, which is all f_H depends on for a simple
// action. Not thread-safe; give each thread its own solver.
class FixedTreeSeriesSolver {
 public:
  // EGF of t_n(group), the number of trees on n |G| leaves fixed by a group
  // acting simply with n orbits. The trivial group yields base_tree_series.
  PowerSeries solve(const PermGroup& group, std::size_t order);

  // exp(sum of terms) - (1 + 2 f_G), or exp(f) - (1 - x + 2 f) for the
  // trivial group; zero when `series` solves the equation.
  PowerSeries residual(const PermGroup& group, const PowerSeries& series);

  std::size_t memo_size() const;

 private:
  using Fingerprint = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
  struct Entry {
    PermGroup group;
    PowerSeries series;
  };

  PowerSeries subgroup_sum(const std::vector<PermGroup>& subgroups, std::size_t group_order,
                           std::size_t order);

  std::map<Fingerprint, std::vector<Entry>> memo_;
};

// EGF of t_n(G) for |G| > 1; throws DomainError for the trivial group (use
// base_tree_series).
PowerSeries fixed_tree_series(const PermGroup& group, std::size_t order);

// t_n(G); the trivial group gives the plain tree count.
BigInt t_n(const PermGroup& group, std::size_t n);

}  // namespace capsid
