#include "capsid/series.hpp"

#include <algorithm>

#include "capsid/errors.hpp"

namespace capsid {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw DomainError("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("a power series needs at least one coefficient");
}

bool PowerSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

BigInt PowerSeries::count(std::size_t n) const {
  if (n > order()) {
    throw DomainError("coefficient " + std::to_string(n) + " beyond truncation order " +
                      std::to_string(order()));
  }
  const Rational scaled = coefficients_[n] * Rational(factorial(n));
  if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0) {
    throw DomainError("coefficient " + std::to_string(n) + " does not give a count: n! c_n = " +
                      to_string(scaled));
  }
  return boost::multiprecision::numerator(scaled);
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] += b[n];
  return r;
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] -= b[n];
  return r;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  PowerSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& a) {
  if (a[0] != 0) throw DomainError("exp needs a series with zero constant term");
  // E' = a' E, so n e_n = sum_{k=1..n} k a_k e_{n-k}.
  PowerSeries e(a.order());
  e[0] = 1;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += Rational(k) * a[k] * e[n - k];
    }
    e[n] = acc / Rational(n);
  }
  return e;
}

PowerSeries scale_argument(const PowerSeries& a, std::size_t k) {
  PowerSeries r = a;
  Rational power = 1;
  for (std::size_t n = 0; n <= r.order(); ++n) {
    r[n] *= power;
    power *= Rational(k);
  }
  return r;
}

PowerSeries scalar_mul(const PowerSeries& a, const Rational& q) {
  PowerSeries r = a;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] *= q;
  return r;
}

PowerSeries truncate(const PowerSeries& a, std::size_t order) {
  std::vector<Rational> c(a.coefficients().begin(),
                          a.coefficients().begin() + static_cast<std::ptrdiff_t>(std::min(order, a.order()) + 1));
  c.resize(order + 1);
  return PowerSeries(std::move(c));
}

PowerSeries base_tree_series(std::size_t order) {
  // With E = exp(f) = 1 - x + 2f: e_0 = 1, e_1 = 2c_1 - 1, e_n = 2c_n, and
  // n e_n = sum_{k=1..n} k c_k e_{n-k}. This gives c_1 = 1 and, for n >= 2,
  // c_n = (1/n) sum_{k=1..n-1} k c_k e_{n-k}.
  PowerSeries f(order);
  if (order == 0) return f;
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  f[1] = 1;
  e[1] = 2 * f[1] - 1;
  for (std::size_t n = 2; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += Rational(k) * f[k] * e[n - k];
    f[n] = acc / Rational(n);
    e[n] = 2 * f[n];
  }
  return f;
}

std::vector<SeriesTerm> functional_equation_terms(const PermGroup& group) {
  std::vector<SeriesTerm> terms;
  for (const auto& h : all_subgroups(group)) terms.push_back({group.order() / h.order(), h.order()});
  return terms;
}

PowerSeries FixedTreeSeriesSolver::subgroup_sum(const std::vector<PermGroup>& subgroups,
                                                std::size_t group_order, std::size_t order) {
  PowerSeries sum(order);
  for (const auto& h : subgroups) {
    const std::size_t index = group_order / h.order();
    const PowerSeries f_h = solve(h, order);
    sum = series_add(sum, scalar_mul(scale_argument(f_h, index), Rational(1, index)));
  }
  return sum;
}

PowerSeries FixedTreeSeriesSolver::solve(const PermGroup& group, std::size_t order) {
  if (group.is_trivial()) return base_tree_series(order);

  const std::vector<PermGroup> subgroups = all_subgroups(group);
  std::vector<std::size_t> subgroup_orders;
  for (const auto& h : subgroups) subgroup_orders.push_back(h.order());
  Fingerprint key{group.order(), element_order_profile(group), subgroup_orders};

  auto& bucket = memo_[key];
  Entry* entry = nullptr;
  for (auto& candidate : bucket) {
    if (are_isomorphic(candidate.group, group)) {
      entry = &candidate;
      break;
    }
  }
  if (entry && entry->series.order() >= order) return truncate(entry->series, order);

  // Proper subgroups contribute known terms P; the H = G term is the unknown
  // f itself. With E = exp(P + f) = 1 + 2f: e_0 = 1, e_n = 2c_n, and
  // n e_n = sum_{k=1..n} k s_k e_{n-k} where s = P + f, which gives
  // c_n = P_n + (1/n) sum_{k=1..n-1} k s_k e_{n-k}.
  const std::vector<PermGroup> proper(subgroups.begin(), subgroups.end() - 1);
  const PowerSeries known = subgroup_sum(proper, group.order(), order);
  PowerSeries f(order);
  std::vector<Rational> s(order + 1);
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += Rational(k) * s[k] * e[n - k];
    f[n] = known[n] + acc / Rational(n);
    s[n] = known[n] + f[n];
    e[n] = 2 * f[n];
  }

  // `bucket` may have been invalidated by recursive inserts; look it up again.
  auto& fresh = memo_[key];
  bool stored = false;
  for (auto& candidate : fresh) {
    if (are_isomorphic(candidate.group, group)) {
      if (candidate.series.order() < order) candidate.series = f;
      stored = true;
      break;
    }
  }
  if (!stored) fresh.push_back({group, f});
  return f;
}

PowerSeries FixedTreeSeriesSolver::residual(const PermGroup& group, const PowerSeries& series) {
  const std::size_t order = series.order();
  if (group.is_trivial()) {
    PowerSeries rhs = scalar_mul(series, 2);
    rhs[0] += 1;
    if (order >= 1) rhs[1] -= 1;
    return series_sub(series_exp(series), rhs);
  }
  const std::vector<PermGroup> subgroups = all_subgroups(group);
  const std::vector<PermGroup> proper(subgroups.begin(), subgroups.end() - 1);
  const PowerSeries exponent = series_add(subgroup_sum(proper, group.order(), order), series);
  PowerSeries rhs = scalar_mul(series, 2);
  rhs[0] += 1;
  return series_sub(series_exp(exponent), rhs);
}

std::size_t FixedTreeSeriesSolver::memo_size() const {
  std::size_t n = 0;
  for (const auto& [key, bucket] : memo_) n += bucket.size();
  return n;
}

PowerSeries fixed_tree_series(const PermGroup& group, std::size_t order) {
  if (group.is_trivial()) {
    throw DomainError("fixed_tree_series needs |G| > 1; use base_tree_series for the trivial group");
  }
  FixedTreeSeriesSolver solver;
  return solver.solve(group, order);
}

BigInt t_n(const PermGroup& group, std::size_t n) {
  if (n == 0) throw DomainError("t_n is defined for n >= 1");
  FixedTreeSeriesSolver solver;
  return solver.solve(group, n).count(n);
}

}  // namespace capsid
