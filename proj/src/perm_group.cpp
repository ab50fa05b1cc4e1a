#include "capsid/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "capsid/errors.hpp"
#include "group_builder.hpp"

namespace capsid {

namespace {

using Mask = std::vector<bool>;

void require_subgroup(const PermGroup& group, const PermGroup& subgroup) {
  if (!subgroup.is_subgroup_of(group)) throw DomainError("H is not a subgroup of G");
}

std::vector<Permutation> drop_identities(std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  return gens;
}

}  // namespace

std::size_t default_max_group_order() {
  if (const char* env = std::getenv("CAPSID_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 120;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Permutation> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError("permutation is not a group element");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_ || other.order() % order() != 0) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

MultiplicationTable::MultiplicationTable(const PermGroup& group)
    : size_(group.order()), table_(size_ * size_), inverse_(size_) {
  const auto elements = group.elements();
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      table_[a * size_ + b] = group.index_of(elements[a] * elements[b]);
    }
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (table_[a * size_ + b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

std::size_t MultiplicationTable::element_order(std::size_t a) const {
  std::size_t order = 1;
  for (std::size_t x = a; x != 0; x = multiply(x, a)) ++order;
  return order;
}

PermGroup close_generators(std::vector<Permutation> generators, std::size_t degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DomainError("generator of degree " + std::to_string(g.degree()) +
                        " in a group of degree " + std::to_string(degree));
    }
  }
  generators = drop_identities(std::move(generators));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation y = x * s;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(generators), std::move(elements));
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<Point>> result;
  for (Point start = 1; static_cast<std::size_t>(start) <= n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : group.generators()) {
        const Point y = g(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_simple_action(const PermGroup& group) {
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    for (Point x = 1; static_cast<std::size_t>(x) <= group.degree(); ++x) {
      if (g(x) == x) return false;
    }
  }
  return true;
}

std::vector<PermGroup> all_subgroups(const PermGroup& group, std::size_t max_order) {
  if (group.order() > max_order) {
    throw LimitError("group order " + std::to_string(group.order()) +
                     " exceeds the subgroup enumeration bound " + std::to_string(max_order));
  }
  const MultiplicationTable table(group);
  const std::size_t n = table.size();

  auto closure = [&](const std::vector<std::size_t>& gens) {
    Mask mask(n, false);
    std::vector<std::size_t> members{0};
    mask[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t y = table.multiply(members[i], s);
        if (!mask[y]) {
          mask[y] = true;
          members.push_back(y);
        }
      }
    }
    return mask;
  };

  std::map<Mask, std::vector<std::size_t>> found;
  std::vector<Mask> discovered;
  auto record = [&](Mask mask, std::vector<std::size_t> gens) {
    if (found.emplace(mask, std::move(gens)).second) discovered.push_back(std::move(mask));
  };

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> gens;
    if (a != 0) gens.push_back(a);
    Mask mask = closure(gens);
    record(std::move(mask), std::move(gens));
  }
  // Every subgroup is a join of cyclic subgroups; close under pairwise joins.
  for (std::size_t i = 0; i < discovered.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Mask& a = discovered[i];
      const Mask& b = discovered[j];
      std::vector<std::size_t> gens = found.at(a);
      bool b_inside_a = true;
      for (std::size_t s : found.at(b)) {
        if (!a[s]) {
          gens.push_back(s);
          b_inside_a = false;
        }
      }
      if (b_inside_a) continue;
      Mask joined = closure(gens);
      if (joined == b) continue;
      record(std::move(joined), std::move(gens));
    }
  }

  struct Entry {
    std::vector<std::size_t> members;
    std::vector<std::size_t> gens;
  };
  std::vector<Entry> entries;
  entries.reserve(found.size());
  for (const auto& [mask, gens] : found) {
    Entry e;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask[k]) e.members.push_back(k);
    }
    e.gens = gens;
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });

  const auto elements = group.elements();
  std::vector<PermGroup> result;
  result.reserve(entries.size());
  for (const auto& e : entries) {
    std::vector<Permutation> members;
    members.reserve(e.members.size());
    for (std::size_t k : e.members) members.push_back(elements[k]);
    std::vector<Permutation> gens;
    for (std::size_t k : e.gens) gens.push_back(elements[k]);
    result.push_back(GroupBuilder::from_closed(group.degree(), std::move(gens), std::move(members)));
  }
  return result;
}

std::vector<std::size_t> element_order_profile(const PermGroup& group) {
  std::vector<std::size_t> profile;
  profile.reserve(group.order());
  for (const auto& g : group.elements()) profile.push_back(g.order());
  std::sort(profile.begin(), profile.end());
  return profile;
}

bool are_isomorphic(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  if (element_order_profile(a) != element_order_profile(b)) return false;
  const MultiplicationTable ta(a);
  const MultiplicationTable tb(b);
  const std::size_t n = ta.size();

  // Greedy generating set of a, preferring elements of large order.
  std::vector<std::size_t> by_order(n);
  std::iota(by_order.begin(), by_order.end(), std::size_t{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t x, std::size_t y) {
    return ta.element_order(x) > ta.element_order(y);
  });
  std::vector<std::size_t> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::size_t reached_count = 1;
  for (std::size_t candidate : by_order) {
    if (reached[candidate]) continue;
    gens.push_back(candidate);
    std::vector<std::size_t> members{0};
    std::fill(reached.begin(), reached.end(), false);
    reached[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t y = ta.multiply(members[i], s);
        if (!reached[y]) {
          reached[y] = true;
          members.push_back(y);
        }
      }
    }
    reached_count = members.size();
    if (reached_count == n) break;
  }

  std::vector<std::size_t> images(gens.size());
  auto extends = [&] {
    std::vector<std::size_t> phi(n, n);
    std::vector<bool> hit(n, false);
    phi[0] = 0;
    hit[0] = true;
    std::vector<std::size_t> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t y = ta.multiply(x, gens[j]);
        const std::size_t image = tb.multiply(phi[x], images[j]);
        if (phi[y] == n) {
          if (hit[image]) return false;
          phi[y] = image;
          hit[image] = true;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    return queue.size() == n;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return extends();
    const std::size_t wanted = ta.element_order(gens[depth]);
    for (std::size_t c = 0; c < n; ++c) {
      if (tb.element_order(c) != wanted) continue;
      images[depth] = c;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

PermGroup conjugate(const PermGroup& subgroup, const Permutation& g) {
  const Permutation g_inv = g.inverse();
  std::vector<Permutation> elements;
  elements.reserve(subgroup.order());
  for (const auto& h : subgroup.elements()) elements.push_back(g * h * g_inv);
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  for (const auto& h : subgroup.generators()) gens.push_back(g * h * g_inv);
  return GroupBuilder::from_closed(subgroup.degree(), std::move(gens), std::move(elements));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& group,
                                                        std::span<const PermGroup> subgroups) {
  std::map<std::vector<Permutation>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const auto els = subgroups[i].elements();
    position.emplace(std::vector<Permutation>(els.begin(), els.end()), i);
  }
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> members;
    for (const auto& g : group.elements()) {
      const PermGroup c = conjugate(subgroups[i], g);
      const auto els = c.elements();
      auto it = position.find(std::vector<Permutation>(els.begin(), els.end()));
      if (it == position.end()) throw DomainError("subgroup list is not closed under conjugation");
      if (!assigned[it->second]) {
        assigned[it->second] = true;
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<std::vector<PermGroup>> conjugacy_classes_of_subgroups(const PermGroup& group) {
  const auto subgroups = all_subgroups(group);
  std::vector<std::vector<PermGroup>> result;
  for (const auto& cls : conjugacy_classes(group, subgroups)) {
    std::vector<PermGroup> members;
    for (std::size_t i : cls) members.push_back(subgroups[i]);
    result.push_back(std::move(members));
  }
  return result;
}

PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup) {
  require_subgroup(group, subgroup);
  std::vector<Permutation> members;
  for (const auto& g : group.elements()) {
    const Permutation g_inv = g.inverse();
    const bool normalizes = std::all_of(
        subgroup.generators().begin(), subgroup.generators().end(),
        [&](const Permutation& h) { return subgroup.contains(g * h * g_inv); });
    if (normalizes) members.push_back(g);
  }
  // members is sorted because group.elements() is.
  std::vector<Permutation> gens = drop_identities(members);
  return GroupBuilder::from_closed(group.degree(), std::move(gens), std::move(members));
}

std::vector<Permutation> left_coset_representatives(const PermGroup& group,
                                                    const PermGroup& subgroup) {
  require_subgroup(group, subgroup);
  std::vector<bool> covered(group.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (covered[i]) continue;
    const Permutation& g = group.elements()[i];
    reps.push_back(g);
    for (const auto& h : subgroup.elements()) covered[group.index_of(g * h)] = true;
  }
  return reps;
}

PermGroup regular_action(const PermGroup& group) {
  const std::size_t n = group.order();
  auto translate = [&](const Permutation& g) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<Point>(group.index_of(g * group.elements()[i]) + 1);
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> elements;
  elements.reserve(n);
  for (const auto& g : group.elements()) elements.push_back(translate(g));
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(translate(g));
  return GroupBuilder::from_closed(n, std::move(gens), std::move(elements));
}

PermGroup replicate_action(const PermGroup& group, std::size_t copies) {
  if (copies == 0) throw DomainError("at least one copy is required");
  const std::size_t d = group.degree();
  auto spread = [&](const Permutation& g) {
    std::vector<Point> images(d * copies);
    for (std::size_t c = 0; c < copies; ++c) {
      for (std::size_t x = 1; x <= d; ++x) {
        images[c * d + x - 1] = static_cast<Point>(c * d) + g(static_cast<Point>(x));
      }
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> elements;
  for (const auto& g : group.elements()) elements.push_back(spread(g));
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(spread(g));
  return GroupBuilder::from_closed(d * copies, std::move(gens), std::move(elements));
}

PermGroup trivial_group(std::size_t degree) {
  if (degree == 0) throw DomainError("degree must be positive");
  return close_generators({}, degree);
}

PermGroup cyclic_group(std::size_t k) {
  if (k == 0) throw DomainError("cyclic group order must be positive");
  std::vector<Point> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Point>((i + 1) % k + 1);
  return close_generators({Permutation(std::move(images))}, k);
}

PermGroup klein4_group() {
  return close_generators({parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)},
                          4);
}

PermGroup icosahedral_group() {
  const PermGroup a5 = close_generators(
      {parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2 3)", 5)}, 5);
  return regular_action(a5);
}

}  // namespace capsid
