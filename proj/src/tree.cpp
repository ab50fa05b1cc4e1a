#include "capsid/tree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <climits>
#include <numeric>

#include "capsid/errors.hpp"
#include "capsid/series.hpp"

namespace capsid {

AssemblyTree AssemblyTree::leaf(Point label) {
  if (label < 1) throw DomainError("leaf labels must be positive");
  AssemblyTree t;
  t.nodes_.push_back({0, 1, 1, -1});
  t.leaves_.push_back(label);
  return t;
}

AssemblyTree AssemblyTree::join(std::vector<AssemblyTree> children) {
  if (children.size() < 2) throw DomainError("an internal vertex needs at least two children");
  std::sort(children.begin(), children.end(), [](const AssemblyTree& a, const AssemblyTree& b) {
    return a.min_label(0) < b.min_label(0);
  });
  AssemblyTree t;
  std::size_t total_nodes = 1;
  std::size_t total_leaves = 0;
  for (const auto& c : children) {
    total_nodes += c.nodes_.size();
    total_leaves += c.leaves_.size();
  }
  t.nodes_.reserve(total_nodes);
  t.leaves_.reserve(total_leaves);
  t.nodes_.push_back({0, static_cast<std::uint32_t>(total_leaves),
                      static_cast<std::uint32_t>(total_nodes), -1});
  for (const auto& c : children) {
    const auto node_offset = static_cast<std::int32_t>(t.nodes_.size());
    const auto leaf_offset = static_cast<std::uint32_t>(t.leaves_.size());
    for (const Node& n : c.nodes_) {
      Node copy = n;
      copy.first_leaf += leaf_offset;
      copy.parent = n.parent < 0 ? 0 : n.parent + node_offset;
      t.nodes_.push_back(copy);
    }
    t.leaves_.insert(t.leaves_.end(), c.leaves_.begin(), c.leaves_.end());
  }
  std::vector<Point> sorted = t.leaves_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("children of a vertex must have disjoint leaf sets");
  }
  return t;
}

std::vector<std::size_t> AssemblyTree::children(std::size_t v) const {
  std::vector<std::size_t> result;
  const std::size_t end = v + nodes_[v].subtree_size;
  for (std::size_t c = v + 1; c < end; c += nodes_[c].subtree_size) result.push_back(c);
  return result;
}

std::vector<Point> AssemblyTree::label(std::size_t v) const {
  const auto span = leaves_of(v);
  std::vector<Point> result(span.begin(), span.end());
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Point> AssemblyTree::leaf_set() const { return label(0); }

AssemblyTree AssemblyTree::subtree(std::size_t v) const {
  AssemblyTree t;
  const Node& root = nodes_[v];
  t.nodes_.reserve(root.subtree_size);
  for (std::size_t u = v; u < v + root.subtree_size; ++u) {
    Node copy = nodes_[u];
    copy.first_leaf -= root.first_leaf;
    copy.parent = u == v ? -1 : copy.parent - static_cast<std::int32_t>(v);
    t.nodes_.push_back(copy);
  }
  const auto span = leaves_of(v);
  t.leaves_.assign(span.begin(), span.end());
  return t;
}

std::string AssemblyTree::to_string() const {
  std::string out;
  // Iterative preorder walk; closing parentheses are emitted once a
  // subtree's last vertex has been written.
  std::vector<std::size_t> open_ends;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (!open_ends.empty() && out.back() != '(') out += ',';
    if (is_leaf(v)) {
      out += std::to_string(leaves_[nodes_[v].first_leaf]);
    } else {
      out += '(';
      open_ends.push_back(v + nodes_[v].subtree_size);
      continue;
    }
    while (!open_ends.empty() && open_ends.back() == v + 1) {
      out += ')';
      open_ends.pop_back();
    }
  }
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  AssemblyTree parse() {
    AssemblyTree t = parse_vertex();
    skip_space();
    if (pos_ != text_.size()) throw error("trailing characters");
    return t;
  }

 private:
  ParseError error(const std::string& why) const {
    return ParseError("bad tree \"" + std::string(text_) + "\": " + why + " at offset " +
                      std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  AssemblyTree parse_vertex() {
    skip_space();
    if (pos_ >= text_.size()) throw error("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      std::vector<AssemblyTree> children;
      for (;;) {
        children.push_back(parse_vertex());
        skip_space();
        if (pos_ >= text_.size()) throw error("unterminated vertex");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw error("expected ',' or ')'");
      }
      if (children.size() < 2) throw error("internal vertex with a single child");
      return AssemblyTree::join(std::move(children));
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) throw error("expected a leaf label");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > INT_MAX / 10) throw error("leaf label too large");
      ++pos_;
    }
    if (value < 1) throw error("leaf labels must be positive");
    if (!seen_.insert(static_cast<Point>(value)).second) {
      throw error("duplicate leaf " + std::to_string(value));
    }
    return AssemblyTree::leaf(static_cast<Point>(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<Point> seen_;
};

}  // namespace

AssemblyTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

AssemblyTree act(const Permutation& g, const AssemblyTree& tree) {
  const std::size_t n = tree.vertex_count();
  for (Point x : tree.leaves()) {
    if (static_cast<std::size_t>(x) > g.degree()) {
      throw DomainError("permutation of degree " + std::to_string(g.degree()) +
                        " does not act on leaf " + std::to_string(x));
    }
  }
  // Least image label of every subtree, gathered bottom-up.
  std::vector<Point> new_min(n, INT_MAX);
  for (std::size_t v = n; v-- > 0;) {
    if (tree.is_leaf(v)) new_min[v] = g(tree.leaves()[tree.node(v).first_leaf]);
    const auto parent = tree.node(v).parent;
    if (parent >= 0) new_min[parent] = std::min(new_min[parent], new_min[v]);
  }
  std::vector<AssemblyTree::Node> nodes;
  std::vector<Point> leaves;
  nodes.reserve(n);
  leaves.reserve(tree.leaf_count());
  auto emit = [&](auto&& self, std::size_t v, std::int32_t parent) -> void {
    const auto index = static_cast<std::int32_t>(nodes.size());
    nodes.push_back({static_cast<std::uint32_t>(leaves.size()), tree.node(v).leaf_count,
                     tree.node(v).subtree_size, parent});
    if (tree.is_leaf(v)) {
      leaves.push_back(new_min[v]);
      return;
    }
    auto kids = tree.children(v);
    std::sort(kids.begin(), kids.end(),
              [&](std::size_t a, std::size_t b) { return new_min[a] < new_min[b]; });
    for (std::size_t c : kids) self(self, c, index);
  };
  emit(emit, 0, -1);

  AssemblyTree result;
  result.nodes_ = std::move(nodes);
  result.leaves_ = std::move(leaves);
  return result;
}

class TreeEnumerator {
 public:
  TreeEnumerator(std::vector<Point> labels, const std::function<void(const AssemblyTree&)>& visit)
      : labels_(std::move(labels)), visit_(visit) {}

  void run() {
    const std::uint32_t all = labels_.size() == 32 ? ~0u : (1u << labels_.size()) - 1u;
    stack_.push_back({all, -1});
    expand();
  }

 private:
  struct Work {
    std::uint32_t mask;  // bits index into labels_
    std::int32_t parent;
  };

  void expand() {
    if (stack_.empty()) {
      emit();
      return;
    }
    const Work w = stack_.back();
    stack_.pop_back();
    const auto index = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({static_cast<std::uint32_t>(leaves_.size()), 0, 1, w.parent});
    if (std::popcount(w.mask) == 1) {
      nodes_.back().leaf_count = 1;
      leaves_.push_back(labels_[std::countr_zero(w.mask)]);
      expand();
      leaves_.pop_back();
    } else {
      partition(w.mask, index, blocks_.size(), w.mask);
    }
    nodes_.pop_back();
    stack_.push_back(w);
  }

  // Splits `remaining` into blocks, each holding the least remaining label,
  // then schedules the blocks (first block on top of the stack) as children.
  void partition(std::uint32_t remaining, std::int32_t parent, std::size_t base,
                 std::uint32_t whole) {
    if (remaining == 0) {
      if (blocks_.size() - base < 2) return;
      for (std::size_t i = blocks_.size(); i-- > base;) stack_.push_back({blocks_[i], parent});
      expand();
      stack_.resize(stack_.size() - (blocks_.size() - base));
      return;
    }
    const std::uint32_t low = remaining & (~remaining + 1u);
    const std::uint32_t rest = remaining ^ low;
    // Subsets of `rest` in increasing numeric order.
    std::uint32_t extra = 0;
    for (;;) {
      const std::uint32_t block = low | extra;
      if (block != whole) {
        blocks_.push_back(block);
        partition(remaining & ~block, parent, base, whole);
        blocks_.pop_back();
      }
      if (extra == rest) break;
      extra = (extra - rest) & rest;
    }
  }

  void emit() {
    out_.nodes_ = nodes_;
    out_.leaves_ = leaves_;
    auto& nodes = out_.nodes_;
    for (std::size_t v = nodes.size(); v-- > 1;) {
      auto& parent = nodes[nodes[v].parent];
      parent.leaf_count += nodes[v].leaf_count;
      parent.subtree_size += nodes[v].subtree_size;
    }
    visit_(out_);
  }

  std::vector<Point> labels_;
  const std::function<void(const AssemblyTree&)>& visit_;
  std::vector<Work> stack_;
  std::vector<AssemblyTree::Node> nodes_;
  std::vector<Point> leaves_;
  std::vector<std::uint32_t> blocks_;
  AssemblyTree out_;
};

void for_each_tree(std::span<const Point> labels,
                   const std::function<void(const AssemblyTree&)>& visit) {
  if (labels.empty()) throw DomainError("an assembly tree needs at least one leaf");
  if (labels.size() > kMaxEnumerationLeaves) {
    throw LimitError("exhaustive enumeration is limited to " +
                     std::to_string(kMaxEnumerationLeaves) + " leaves, got " +
                     std::to_string(labels.size()));
  }
  std::vector<Point> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("leaf labels must be distinct");
  }
  if (sorted.front() < 1) throw DomainError("leaf labels must be positive");
  TreeEnumerator(std::move(sorted), visit).run();
}

std::vector<AssemblyTree> enumerate_all_trees(std::span<const Point> labels) {
  std::vector<AssemblyTree> trees;
  for_each_tree(labels, [&](const AssemblyTree& t) { trees.push_back(t); });
  return trees;
}

BigInt count_trees(std::size_t n) {
  if (n == 0) throw DomainError("tree counts start at n = 1");
  return base_tree_series(n).count(n);
}

std::set<AssemblyTree> orbit_of_tree(const PermGroup& group, const AssemblyTree& tree) {
  std::set<AssemblyTree> orbit;
  for (const auto& g : group.elements()) orbit.insert(act(g, tree));
  return orbit;
}

}  // namespace capsid
