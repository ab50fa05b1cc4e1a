#include "capsid/fixed_trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "capsid/errors.hpp"

namespace capsid {

namespace {

void require_simple(const PermGroup& group) {
  if (!is_simple_action(group)) {
    throw DomainError("the group does not act simply: some non-identity element fixes a point");
  }
}

// Set partitions of {0..n-1} as restricted growth strings: block_of[0] = 0 and
// each entry is at most one more than the largest before it.
void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  std::vector<std::size_t> block_of(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t parts) {
    if (i == n) {
      visit(block_of, parts);
      return;
    }
    for (std::size_t b = 0; b <= parts; ++b) {
      block_of[i] = b;
      rec(i + 1, std::max(parts, b + 1));
    }
  };
  if (n == 0) return;
  rec(1, 1);
}

std::vector<std::vector<std::size_t>> parts_of(const std::vector<std::size_t>& block_of, std::size_t parts) {
  std::vector<std::vector<std::size_t>> result(parts);
  for (std::size_t i = 0; i < block_of.size(); ++i) result[block_of[i]].push_back(i);
  return result;
}

std::vector<Point> image_of(const Permutation& g, std::span<const Point> set) {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point x : set) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Orbits of `sub` inside the point set `within` (which `sub` preserves).
std::vector<std::vector<Point>> orbits_inside(const PermGroup& sub, std::span<const Point> within) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(sub.degree() + 1, false);
  for (Point x : within) {
    if (seen[x]) continue;
    std::vector<Point> orbit;
    for (const auto& g : sub.elements()) {
      Point y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

// Calls visit(seed) for each union made of one `sub`-orbit inside every orbit
// of the part.
void for_each_seed(const PermGroup& sub, const std::vector<std::vector<Point>>& part_orbits,
                   const std::function<void(const std::vector<Point>&)>& visit) {
  std::vector<std::vector<std::vector<Point>>> choices;
  for (const auto& orbit : part_orbits) choices.push_back(orbits_inside(sub, orbit));
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Point> seed;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& c = choices[i][pick[i]];
      seed.insert(seed.end(), c.begin(), c.end());
    }
    std::sort(seed.begin(), seed.end());
    visit(seed);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) return;
  }
}

// Cartesian product over per-part option lists; each option is a list of
// children, and each combination is joined under a new root.
void join_products(const std::vector<std::vector<std::vector<AssemblyTree>>>& options,
                   const std::function<void(AssemblyTree)>& emit) {
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<AssemblyTree> children;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto& c = options[i][pick[i]];
      children.insert(children.end(), c.begin(), c.end());
    }
    emit(AssemblyTree::join(std::move(children)));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) return;
  }
}

class FixedTreeGenerator {
 public:
  explicit FixedTreeGenerator(std::size_t budget) : budget_(budget) {}

  // Trees on `points` fixed by `group`, which acts simply on `points`.
  std::vector<AssemblyTree> generate(const PermGroup& group, const std::vector<Point>& points) {
    if (points.size() == 1) return {AssemblyTree::leaf(points.front())};

    const Info& info = info_of(group);
    const auto group_orbits = orbits_inside(group, points);
    std::vector<AssemblyTree> result;

    for_each_set_partition(group_orbits.size(), [&](const std::vector<std::size_t>& block_of,
                                                    std::size_t part_count) {
      std::vector<std::vector<std::vector<AssemblyTree>>> options;
      for (const auto& part : parts_of(block_of, part_count)) {
        std::vector<std::vector<Point>> part_orbits;
        for (std::size_t o : part) part_orbits.push_back(group_orbits[o]);
        options.push_back(part_options(group, info, part_orbits, part_count == 1));
        if (options.back().empty()) return;
      }
      join_products(options, [&](AssemblyTree t) {
        result.push_back(std::move(t));
        if (++produced_ > budget_) {
          throw LimitError("fixed-tree generation exceeded its budget of " + std::to_string(budget_) +
                           " trees");
        }
      });
    });
    return result;
  }

 private:
  struct ClassData {
    PermGroup representative;
    std::vector<Permutation> normalizer;
    std::vector<Permutation> cosets;
  };
  struct Info {
    std::vector<ClassData> classes;
  };

  const Info& info_of(const PermGroup& group) {
    std::vector<Permutation> key(group.elements().begin(), group.elements().end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Info info;
    const auto subgroups = all_subgroups(group);
    for (const auto& cls : conjugacy_classes(group, subgroups)) {
      const PermGroup& rep = subgroups[cls.front()];
      const PermGroup n = normalizer(group, rep);
      info.classes.push_back({rep, std::vector<Permutation>(n.elements().begin(), n.elements().end()),
                              left_coset_representatives(group, rep)});
    }
    return cache_.emplace(std::move(key), std::move(info)).first->second;
  }

  std::vector<std::vector<AssemblyTree>> part_options(const PermGroup& group, const Info& info,
                                                      const std::vector<std::vector<Point>>& part_orbits,
                                                      bool single_part) {
    std::vector<std::vector<AssemblyTree>> options;
    for (const auto& cls : info.classes) {
      if (single_part && cls.representative.order() == group.order()) continue;
      for_each_seed(cls.representative, part_orbits, [&](const std::vector<Point>& seed) {
        // Seeds related by the normalizer give the same blocks; keep the least.
        for (const auto& n : cls.normalizer) {
          if (image_of(n, seed) < seed) return;
        }
        for (const auto& sub : generate(cls.representative, seed)) {
          std::vector<AssemblyTree> children;
          children.reserve(cls.cosets.size());
          for (const auto& r : cls.cosets) children.push_back(act(r, sub));
          options.push_back(std::move(children));
        }
      });
    }
    return options;
  }

  std::size_t budget_;
  std::size_t produced_ = 0;
  std::map<std::vector<Permutation>, Info> cache_;
};

std::vector<Point> all_points(const PermGroup& group) {
  std::vector<Point> points(group.degree());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Point>(i + 1);
  return points;
}

}  // namespace

bool is_compatible(const PermGroup& group, std::span<const std::vector<Point>> blocks) {
  const std::size_t degree = group.degree();
  std::vector<int> owner(degree + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) return false;
    for (Point x : blocks[b]) {
      if (x < 1 || static_cast<std::size_t>(x) > degree || owner[x] != -1) return false;
      owner[x] = static_cast<int>(b);
    }
  }
  for (std::size_t x = 1; x <= degree; ++x) {
    if (owner[x] == -1) return false;
  }
  for (const auto& g : group.generators()) {
    for (const auto& block : blocks) {
      const int target = owner[g(block.front())];
      if (blocks[target].size() != block.size()) return false;
      for (Point x : block) {
        if (owner[g(x)] != target) return false;
      }
    }
  }
  return true;
}

std::vector<BlockSystem> enumerate_block_systems(const PermGroup& group) {
  require_simple(group);
  const auto group_orbits = orbits(group);
  const auto subgroups = all_subgroups(group);
  std::vector<std::vector<Permutation>> cosets;
  for (const auto& s : subgroups) cosets.push_back(left_coset_representatives(group, s));

  std::map<std::vector<std::vector<Point>>, BlockSystem> found;
  for_each_set_partition(group_orbits.size(), [&](const std::vector<std::size_t>& block_of,
                                                  std::size_t part_count) {
    // Per part: every (subgroup, seed) choice, as its list of blocks.
    std::vector<std::vector<std::vector<std::pair<std::vector<Point>, BlockOrigin>>>> per_part;
    for (const auto& part : parts_of(block_of, part_count)) {
      std::vector<std::vector<Point>> part_orbits;
      for (std::size_t o : part) part_orbits.push_back(group_orbits[o]);
      auto& choices = per_part.emplace_back();
      for (std::size_t s = 0; s < subgroups.size(); ++s) {
        for_each_seed(subgroups[s], part_orbits, [&](const std::vector<Point>& seed) {
          auto& blocks = choices.emplace_back();
          for (const auto& r : cosets[s]) {
            blocks.emplace_back(image_of(r, seed), BlockOrigin{part, subgroups[s], seed, r});
          }
        });
      }
    }
    std::vector<std::size_t> pick(per_part.size(), 0);
    while (true) {
      std::vector<std::pair<std::vector<Point>, BlockOrigin>> all;
      for (std::size_t i = 0; i < per_part.size(); ++i) {
        const auto& c = per_part[i][pick[i]];
        all.insert(all.end(), c.begin(), c.end());
      }
      std::sort(all.begin(), all.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      BlockSystem system;
      for (auto& [block, origin] : all) {
        system.blocks.push_back(std::move(block));
        system.origins.push_back(std::move(origin));
      }
      if (!is_compatible(group, system.blocks)) {
        throw DomainError("internal error: constructed block system is not compatible");
      }
      found.try_emplace(system.blocks, std::move(system));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == per_part[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  });

  std::vector<BlockSystem> result;
  for (auto& [key, system] : found) result.push_back(std::move(system));
  return result;
}

std::set<std::vector<Point>> distinct_blocks(std::span<const BlockSystem> systems) {
  std::set<std::vector<Point>> blocks;
  for (const auto& s : systems) blocks.insert(s.blocks.begin(), s.blocks.end());
  return blocks;
}

BlockSystem children_block_system(const PermGroup& group, const AssemblyTree& tree) {
  for (const auto& g : group.generators()) {
    if (act(g, tree) != tree) {
      throw DomainError("tree " + tree.to_string() + " is not fixed by " + g.to_cycles());
    }
  }
  BlockSystem system;
  if (tree.vertex_count() == 1) {
    system.blocks.push_back(tree.label(0));
  } else {
    for (std::size_t c : tree.children(0)) system.blocks.push_back(tree.label(c));
  }
  if (!is_compatible(group, system.blocks)) {
    throw DomainError("root children of " + tree.to_string() + " do not form a compatible block system");
  }
  return system;
}

std::vector<AssemblyTree> generate_fixed_trees(const PermGroup& group, FixedTreeDiagnostics* diagnostics,
                                               std::size_t budget) {
  require_simple(group);
  FixedTreeGenerator generator(budget);
  std::vector<AssemblyTree> trees = generator.generate(group, all_points(group));
  const std::size_t generated = trees.size();
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  if (diagnostics) {
    diagnostics->generated = generated;
    diagnostics->distinct = trees.size();
  }
  return trees;
}

BigInt count_fixed_trees_direct(const PermGroup& group, std::size_t budget) {
  return BigInt(generate_fixed_trees(group, nullptr, budget).size());
}

}  // namespace capsid
