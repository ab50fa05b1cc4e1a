#include <gtest/gtest.h>

#include <cstdlib>
#include <algorithm>
#include <map>
#include <set>

#include "capsid/errors.hpp"
#include "capsid/group_io.hpp"
#include "capsid/perm_group.hpp"
#include "capsid/permutation.hpp"

namespace capsid {
namespace {

PermGroup group_of(std::initializer_list<const char*> gens, std::size_t degree) {
  std::vector<Permutation> ps;
  for (const char* g : gens) ps.push_back(parse_permutation(g, degree));
  return close_generators(ps, degree);
}

TEST(Permutation, ParseAndPrint) {
  const auto p = parse_permutation("(1 2)(3 4)", 4);
  EXPECT_EQ(std::vector<Point>(p.images().begin(), p.images().end()), (std::vector<Point>{2, 1, 4, 3}));
  EXPECT_EQ(p.to_cycles(), "(1 2)(3 4)");
  EXPECT_EQ(parse_permutation("(1,3,2)", 3).to_cycles(), "(1 3 2)");
  EXPECT_EQ(parse_permutation("", 3).to_cycles(), "()");
  EXPECT_EQ(parse_permutation("(2)", 3).to_cycles(), "()");
  EXPECT_TRUE(parse_permutation("()", 5).is_identity());
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(parse_permutation("(1 2", 4), ParseError);
  EXPECT_THROW(parse_permutation("(1 5)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(1 2)(2 3)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(0 1)", 4), ParseError);
  EXPECT_THROW(parse_permutation("(a b)", 4), ParseError);
  EXPECT_THROW(Permutation(std::vector<Point>{1, 1}), DomainError);
}

TEST(Permutation, ComposeAppliesRightFirst) {
  const auto p = parse_permutation("(1 2)", 3);
  const auto q = parse_permutation("(2 3)", 3);
  // (p*q)(x) = p(q(x)): 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ((p * q)(2), 3);
  EXPECT_EQ((p * q)(3), 1);
  EXPECT_EQ((p * q).to_cycles(), "(1 2 3)");
  EXPECT_THROW(compose(p, parse_permutation("()", 4)), DomainError);
}

TEST(Permutation, InverseAndOrder) {
  const auto p = parse_permutation("(1 2 3)(4 5)", 5);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(Permutation::identity(3).order(), 1u);
}

TEST(Permutation, IdentityIsLeast) {
  const auto id = Permutation::identity(3);
  EXPECT_LT(id, parse_permutation("(2 3)", 3));
  EXPECT_LT(parse_permutation("(2 3)", 3), parse_permutation("(1 2)", 3));
}

TEST(Permutation, KleinProduct) {
  const auto p = parse_permutation("(1 2)(3 4)", 4);
  const auto q = parse_permutation("(1 3)(2 4)", 4);
  EXPECT_EQ((p * q).to_cycles(), "(1 4)(2 3)");
  EXPECT_EQ(p * Permutation::identity(4), p);
  const auto c = parse_permutation("(1 2 3 4)", 4);
  EXPECT_EQ(std::vector<Point>(c.images().begin(), c.images().end()), (std::vector<Point>{2, 3, 4, 1}));
}

TEST(PermGroup, ClosureOrders) {
  EXPECT_EQ(group_of({"(1 2 3 4 5)"}, 5).order(), 5u);
  EXPECT_EQ(group_of({"(1 2)(3 4)", "(1 3)(2 4)"}, 4).order(), 4u);
  EXPECT_EQ(group_of({"(1 2)", "(1 2 3 4)"}, 4).order(), 24u);
  EXPECT_EQ(group_of({"()"}, 3).order(), 1u);
  EXPECT_TRUE(group_of({"()"}, 3).generators().empty());
}

TEST(PermGroup, ElementsSortedIdentityFirst) {
  const auto g = klein4_group();
  ASSERT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.elements()[0].is_identity());
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  EXPECT_TRUE(g.contains(parse_permutation("(1 3)(2 4)", 4)));
  EXPECT_FALSE(g.contains(parse_permutation("(1 2)", 4)));
}

TEST(PermGroup, OrbitsAndSimplicity) {
  const auto k1 = group_of({"(1 2)(3 4)"}, 4);
  EXPECT_EQ(orbits(k1), (std::vector<std::vector<Point>>{{1, 2}, {3, 4}}));
  EXPECT_TRUE(is_simple_action(k1));
  EXPECT_TRUE(is_simple_action(klein4_group()));
  EXPECT_FALSE(is_simple_action(group_of({"(1 2)"}, 3)));
  EXPECT_TRUE(is_simple_action(trivial_group(3)));
}

TEST(PermGroup, KleinSubgroups) {
  const auto subs = all_subgroups(klein4_group());
  ASSERT_EQ(subs.size(), 5u);
  EXPECT_EQ(subs.front().order(), 1u);
  EXPECT_EQ(subs.back(), klein4_group());
  // Abelian: every subgroup is its own conjugacy class.
  EXPECT_EQ(conjugacy_classes(klein4_group(), subs).size(), 5u);
}

TEST(PermGroup, SymmetricGroupSubgroups) {
  const auto s4 = group_of({"(1 2)", "(1 2 3 4)"}, 4);
  const auto subs = all_subgroups(s4);
  EXPECT_EQ(subs.size(), 30u);
  EXPECT_EQ(conjugacy_classes(s4, subs).size(), 11u);
}

TEST(PermGroup, IcosahedralCensus) {
  const auto g = icosahedral_group();
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(g.degree(), 60u);
  EXPECT_TRUE(is_simple_action(g));
  const auto subs = all_subgroups(g);
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& s : subs) ++histogram[s.order()];
  EXPECT_EQ(subs.size(), 59u);
  EXPECT_EQ(histogram, (std::map<std::size_t, std::size_t>{
                           {1, 1}, {2, 15}, {3, 10}, {4, 5}, {5, 6}, {6, 10}, {10, 6}, {12, 5}, {60, 1}}));
  const auto classes = conjugacy_classes(g, subs);
  EXPECT_EQ(classes.size(), 9u);
  // In this group conjugacy classes of subgroups are exactly the order classes.
  for (const auto& cls : classes) EXPECT_EQ(cls.size(), histogram[subs[cls.front()].order()]);
}

TEST(PermGroup, IcosahedralElementOrders) {
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t k : element_order_profile(icosahedral_group())) ++histogram[k];
  EXPECT_EQ(histogram, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  EXPECT_EQ(orbits(icosahedral_group()).size(), 1u);
}

TEST(PermGroup, IcosahedralNormalizersAndCosets) {
  const auto g = icosahedral_group();
  for (const auto& h : all_subgroups(g)) {
    if (h.order() == 5) EXPECT_EQ(normalizer(g, h).order(), 10u);
    if (h.order() == 12) EXPECT_EQ(left_coset_representatives(g, h).size(), 5u);
  }
  EXPECT_EQ(normalizer(g, g), g);
  EXPECT_EQ(left_coset_representatives(g, g).size(), 1u);
}

// Closure idempotence, Lagrange, coset partition, orbit-stabilizer and
// conjugate-class invariants on a few groups.
TEST(PermGroup, StructuralInvariants) {
  const auto s4 = group_of({"(1 2)", "(1 2 3 4)"}, 4);
  for (const auto& g : {klein4_group(), s4, regular_action(s4), replicate_action(cyclic_group(3), 2)}) {
    std::vector<Permutation> all(g.elements().begin(), g.elements().end());
    EXPECT_EQ(close_generators(all, g.degree()), g);
    for (const auto& gen : g.generators()) EXPECT_TRUE(g.contains(gen));

    for (Point x = 1; static_cast<std::size_t>(x) <= g.degree(); ++x) {
      std::set<Point> orbit;
      std::size_t fixing = 0;
      for (const auto& p : g.elements()) {
        orbit.insert(p(x));
        fixing += p(x) == x;
      }
      EXPECT_EQ(orbit.size() * fixing, g.order());
    }
    const auto orbs = orbits(g);
    EXPECT_EQ(is_simple_action(g),
              std::all_of(orbs.begin(), orbs.end(), [&](const auto& o) { return o.size() == g.order(); }));

    const auto subs = all_subgroups(g);
    for (const auto& h : subs) {
      EXPECT_EQ(g.order() % h.order(), 0u);
      std::set<Permutation> covered;
      for (const auto& r : left_coset_representatives(g, h)) {
        for (const auto& x : h.elements()) EXPECT_TRUE(covered.insert(r * x).second);
      }
      EXPECT_EQ(covered.size(), g.order());
    }
    for (const auto& cls : conjugacy_classes(g, subs)) {
      for (std::size_t k : cls) {
        EXPECT_EQ(subs[k].order(), subs[cls.front()].order());
        EXPECT_EQ(all_subgroups(subs[k]).size(), all_subgroups(subs[cls.front()]).size());
      }
    }
  }
}

TEST(PermGroup, SmallCases) {
  EXPECT_EQ(all_subgroups(trivial_group(2)).size(), 1u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(trivial_group(2)).size(), 1u);
  EXPECT_EQ(conjugacy_classes_of_subgroups(icosahedral_group()).size(), 9u);
  EXPECT_EQ(regular_action(trivial_group(3)).degree(), 1u);
  EXPECT_EQ(orbits(trivial_group(3)), (std::vector<std::vector<Point>>{{1}, {2}, {3}}));
  EXPECT_EQ(orbits(replicate_action(cyclic_group(2), 3)), (std::vector<std::vector<Point>>{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(normalizer(klein4_group(), all_subgroups(klein4_group())[1]), klein4_group());
  EXPECT_EQ(left_coset_representatives(klein4_group(), all_subgroups(klein4_group())[1]).size(), 2u);
}

TEST(PermGroup, SubgroupBound) {
  EXPECT_THROW(all_subgroups(icosahedral_group(), 59), LimitError);
  ::setenv("CAPSID_MAX_GROUP_ORDER", "3", 1);
  EXPECT_EQ(default_max_group_order(), 3u);
  EXPECT_THROW(all_subgroups(klein4_group()), LimitError);
  ::unsetenv("CAPSID_MAX_GROUP_ORDER");
  EXPECT_EQ(default_max_group_order(), 120u);
}

TEST(PermGroup, NormalizerAndCosets) {
  const auto s3 = group_of({"(1 2)", "(1 2 3)"}, 3);
  const auto c2 = group_of({"(1 2)"}, 3);
  const auto c3 = group_of({"(1 2 3)"}, 3);
  EXPECT_EQ(normalizer(s3, c2), c2);
  EXPECT_EQ(normalizer(s3, c3), s3);
  const auto reps = left_coset_representatives(s3, c2);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_TRUE(reps.front().is_identity());
  // Distinct cosets.
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(c2.contains(reps[j].inverse() * reps[i]));
  }
  EXPECT_THROW(normalizer(c2, s3), DomainError);
}

TEST(PermGroup, Isomorphism) {
  EXPECT_TRUE(are_isomorphic(cyclic_group(4), regular_action(cyclic_group(4))));
  EXPECT_FALSE(are_isomorphic(cyclic_group(4), klein4_group()));
  EXPECT_TRUE(are_isomorphic(klein4_group(), regular_action(klein4_group())));
  const auto s3 = group_of({"(1 2)", "(1 2 3)"}, 3);
  EXPECT_TRUE(are_isomorphic(s3, regular_action(s3)));
  EXPECT_FALSE(are_isomorphic(s3, cyclic_group(6)));
  EXPECT_EQ(element_order_profile(klein4_group()), (std::vector<std::size_t>{1, 2, 2, 2}));
}

TEST(PermGroup, RegularAndReplicatedActions) {
  const auto r = regular_action(cyclic_group(3));
  EXPECT_EQ(r.degree(), 3u);
  EXPECT_TRUE(is_simple_action(r));
  const auto rep = replicate_action(cyclic_group(2), 3);
  EXPECT_EQ(rep.degree(), 6u);
  EXPECT_EQ(rep.order(), 2u);
  EXPECT_EQ(rep.elements()[1].to_cycles(), "(1 2)(3 4)(5 6)");
}

TEST(GroupIo, Builtins) {
  EXPECT_EQ(builtin_group("klein4"), klein4_group());
  EXPECT_EQ(builtin_group("cyclic:5").order(), 5u);
  EXPECT_EQ(builtin_group("trivial:7").degree(), 7u);
  EXPECT_EQ(builtin_group("icosahedral").order(), 60u);
  EXPECT_THROW(builtin_group("cyclic:x"), ParseError);
  EXPECT_THROW(builtin_group("dodecahedral"), ParseError);
}

TEST(GroupIo, TextFormat) {
  const auto g = parse_group_text("# Klein group\ndegree 4\n(1 2)(3 4)\n\n(1 3)(2 4)\n");
  EXPECT_EQ(g, klein4_group());
  EXPECT_THROW(parse_group_text("(1 2)\n"), ParseError);
  EXPECT_THROW(parse_group_text("degree four\n"), ParseError);
  EXPECT_THROW(parse_group_text("degree 3\n(1 4)\n"), ParseError);
}

}  // namespace
}  // namespace capsid
