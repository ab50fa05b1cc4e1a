#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "capsid/errors.hpp"
#include "capsid/lattice.hpp"
#include "capsid/permutation.hpp"

namespace capsid {
namespace {

TEST(Lattice, KleinMobius) {
  const SubgroupLattice lattice(klein4_group());
  ASSERT_EQ(lattice.size(), 5u);
  const std::size_t bottom = lattice.bottom();
  const std::size_t top = lattice.top();
  EXPECT_EQ(lattice.mobius(bottom, bottom), 1);
  for (std::size_t k = 1; k < top; ++k) {
    EXPECT_EQ(lattice.mobius(bottom, k), -1);
    EXPECT_EQ(lattice.mobius(k, top), -1);
    EXPECT_EQ(lattice.mobius(k, k), 1);
  }
  EXPECT_EQ(lattice.mobius(bottom, top), 2);
  EXPECT_EQ(lattice.mobius(1, 2), 0);
  EXPECT_FALSE(lattice.leq(1, 2));
  EXPECT_EQ(interval_above(lattice, bottom).size(), 5u);
  EXPECT_EQ(interval_above(lattice, 1), (std::vector<std::size_t>{1, top}));
}

TEST(Lattice, TrivialGroup) {
  const SubgroupLattice lattice(trivial_group(3));
  ASSERT_EQ(lattice.size(), 1u);
  EXPECT_EQ(lattice.mobius(0, 0), 1);
}

// Both recursions define the same function: summing mu over an interval from
// either end gives zero.
TEST(Lattice, IcosahedralMobiusBothRecursions) {
  const SubgroupLattice lattice(icosahedral_group());
  const std::size_t n = lattice.size();
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!lattice.leq(h, k)) {
        EXPECT_EQ(lattice.mobius(h, k), 0);
        continue;
      }
      long long from_top = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (lattice.leq(h, l) && lattice.leq(l, k)) from_top += lattice.mobius(l, k);
      }
      EXPECT_EQ(from_top, h == k ? 1 : 0) << h << " " << k;
    }
  }
}

TEST(Lattice, IcosahedralMobiusToTop) {
  const SubgroupLattice lattice(icosahedral_group());
  std::map<std::size_t, long long> to_top;
  for (const auto& cls : lattice.classes()) {
    const std::size_t rep = cls.front();
    for (std::size_t k : cls) EXPECT_EQ(lattice.mobius(k, lattice.top()), lattice.mobius(rep, lattice.top()));
    to_top[lattice.node(rep).order()] = lattice.mobius(rep, lattice.top());
  }
  EXPECT_EQ(to_top, (std::map<std::size_t, long long>{
                        {1, -60}, {2, 4}, {3, 2}, {4, 0}, {5, 0}, {6, -1}, {10, -1}, {12, -1}, {60, 1}}));
}

TEST(Lattice, IcosahedralHasseEdges) {
  const SubgroupLattice lattice(icosahedral_group());
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : hasse_edge_counts(lattice)) {
    edges[{e.lower_order, e.upper_order}] = {e.lower_per_upper, e.upper_per_lower};
  }
  const std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> expected{
      {{1, 2}, {1, 15}},  {{1, 3}, {1, 10}},  {{1, 5}, {1, 6}},   {{2, 4}, {3, 1}},
      {{2, 6}, {3, 2}},   {{2, 10}, {5, 2}},  {{3, 6}, {1, 1}},   {{3, 12}, {4, 2}},
      {{4, 12}, {1, 1}},  {{5, 10}, {1, 1}},  {{6, 60}, {10, 1}}, {{10, 60}, {6, 1}},
      {{12, 60}, {5, 1}},
  };
  EXPECT_EQ(edges, expected);

  // Cross-check every multiplicity by counting containments directly.
  for (const auto& e : hasse_edge_counts(lattice)) {
    const std::size_t lower = lattice.classes()[e.lower_class].front();
    const std::size_t upper = lattice.classes()[e.upper_class].front();
    std::size_t below = 0, above = 0;
    for (std::size_t k : lattice.classes()[e.lower_class]) below += lattice.leq(k, upper);
    for (std::size_t k : lattice.classes()[e.upper_class]) above += lattice.leq(lower, k);
    EXPECT_EQ(below, e.lower_per_upper);
    EXPECT_EQ(above, e.upper_per_lower);
  }
}

TEST(Lattice, IcosahedralIntervalAboveOrderFive) {
  const SubgroupLattice lattice(icosahedral_group());
  for (std::size_t h = 0; h < lattice.size(); ++h) {
    if (lattice.node(h).order() != 5) continue;
    const auto above = interval_above(lattice, h);
    ASSERT_EQ(above.size(), 3u);
    EXPECT_EQ(lattice.node(above[1]).order(), 10u);
    EXPECT_EQ(above.back(), lattice.top());
  }
  EXPECT_EQ(interval_above(lattice, lattice.top()), (std::vector<std::size_t>{lattice.top()}));
  EXPECT_TRUE(hasse_edge_counts(SubgroupLattice(trivial_group(1))).empty());
}

TEST(Lattice, MobiusInversionRoundTrip) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> value(-1000, 1000);
  const auto s4 = close_generators({parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)}, 4);
  for (const auto& g : {klein4_group(), s4, icosahedral_group()}) {
    const SubgroupLattice lattice(g);
    const std::size_t n = lattice.size();
    std::vector<long long> t(n);
    for (auto& x : t) x = value(rng);
    std::vector<long long> tbar(n, 0);
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k : interval_above(lattice, h)) tbar[h] += lattice.mobius(h, k) * t[k];
    }
    for (std::size_t h = 0; h < n; ++h) {
      long long back = 0;
      for (std::size_t k : interval_above(lattice, h)) back += tbar[k];
      EXPECT_EQ(back, t[h]);
    }
  }
}

TEST(Lattice, IndexOfRejectsNonMember) {
  const SubgroupLattice lattice(klein4_group());
  EXPECT_EQ(lattice.index_of(klein4_group()), lattice.top());
  const auto other = close_generators({parse_permutation("(1 2)", 4)}, 4);
  EXPECT_THROW(lattice.index_of(other), DomainError);
}

TEST(Lattice, MobiusCsv) {
  const SubgroupLattice lattice(klein4_group());
  const std::string csv = mobius_csv(lattice);
  EXPECT_EQ(csv,
            "H\\K,0:1,1:2,2:2,3:2,4:4\n"
            "0:1,1,-1,-1,-1,2\n"
            "1:2,,1,,,-1\n"
            "2:2,,,1,,-1\n"
            "3:2,,,,1,-1\n"
            "4:4,,,,,1\n");
}

}  // namespace
}  // namespace capsid
