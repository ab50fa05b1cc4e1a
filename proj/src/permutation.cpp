#include "capsid/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "capsid/errors.hpp"

namespace capsid {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y < 1 || static_cast<std::size_t>(y) > images_.size() || seen[y - 1]) {
      throw DomainError("image sequence is not a bijection of 1.." + std::to_string(images_.size()));
    }
    seen[y - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Point>(i + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<Point>(i + 1);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<Point>(i + 1)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                      " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<Point>(i + 1)));
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad permutation \"" + std::string(text) + "\": " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail("unexpected character '" + std::string(1, text[pos]) + "'");
      }
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000'000) throw fail("point too large");
        ++pos;
      }
      if (value < 1 || static_cast<std::size_t>(value) > degree) {
        throw fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      if (used[value - 1]) throw fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (Point x : p.images()) h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}

}  // namespace capsid
