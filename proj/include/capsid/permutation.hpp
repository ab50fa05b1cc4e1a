#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capsid {

// Points are 1-based throughout the library.
using Point = int;

// A bijection on {1..degree}.
//
// Composition convention, used everywhere: compose(p, q) applies q first,
// then p, i.e. (p * q)(x) == p(q(x)).
//
// Permutations are totally ordered lexicographically by their image
// sequences; the identity is the least permutation of a given degree.
class Permutation {
 public:
  Permutation() = default;

  // Throws DomainError unless `images` is a bijection of {1..images.size()}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }

  Point operator()(Point x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  // Cycle notation with fixed points omitted, e.g. "(1 2)(3 4)".
  // The identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Parses a product of disjoint cycles such as "(1 2)(3 4)" or "(1,2,3)".
// Whitespace and commas both separate points. Omitted points are fixed and
// 1-cycles are allowed. Throws ParseError on malformed text, out-of-range
// points or a point repeated across cycles.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace capsid
