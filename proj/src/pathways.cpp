#include "capsid/pathways.hpp"

#include <algorithm>
#include <sstream>

#include "capsid/errors.hpp"
#include "capsid/series.hpp"

namespace capsid {

namespace {

std::size_t digits(const BigInt& x) { return to_string(x).size(); }

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

BigInt PathwayDistribution::total_pathways() const {
  BigInt total = 0;
  for (const auto& [m, n] : per_divisor) total += n;
  return total;
}

BigInt tbar(const SubgroupLattice& lattice, std::size_t h, const std::vector<BigInt>& t) {
  if (t.size() != lattice.size()) throw DomainError("t must have one value per subgroup");
  BigInt sum = 0;
  for (std::size_t k : interval_above(lattice, h)) sum += BigInt(lattice.mobius(h, k)) * t[k];
  if (sum < 0) {
    throw DomainError("negative t-bar " + to_string(sum) + " for subgroup " + std::to_string(h) +
                      "; the t values are inconsistent");
  }
  return sum;
}

std::vector<BigInt> fixed_counts(const SubgroupLattice& lattice) {
  const PermGroup& group = lattice.group();
  if (!is_simple_action(group)) throw DomainError("the group does not act simply");
  const std::size_t leaves = group.degree();
  FixedTreeSeriesSolver solver;
  std::vector<BigInt> t(lattice.size());
  for (const auto& cls : lattice.classes()) {
    const PermGroup& rep = lattice.node(cls.front());
    const std::size_t n = leaves / rep.order();
    const BigInt value = solver.solve(rep, n).count(n);
    for (std::size_t k : cls) t[k] = value;
  }
  return t;
}

PathwayDistribution pathway_size_distribution(const PermGroup& group) {
  return pathway_size_distribution(SubgroupLattice(group));
}

PathwayDistribution pathway_size_distribution(const SubgroupLattice& lattice) {
  const PermGroup& group = lattice.group();
  const std::vector<BigInt> t = fixed_counts(lattice);

  PathwayDistribution d;
  d.leaf_count = group.degree();
  d.total_trees = t[lattice.bottom()];
  for (std::size_t m = 1; m <= group.order(); ++m) {
    if (group.order() % m == 0) d.per_divisor[m] = 0;
  }

  std::map<std::size_t, BigInt> weighted;  // m -> sum of t-bar over subgroups of index m
  for (const auto& cls : lattice.classes()) {
    const std::size_t rep = cls.front();
    const std::size_t order = lattice.node(rep).order();
    const BigInt value = tbar(lattice, rep, t);
    d.classes.push_back({rep, order, cls.size(), group.degree() / order, t[rep], value});
    weighted[group.order() / order] += value * cls.size();
  }
  for (const auto& [m, sum] : weighted) {
    if (sum % m != 0) {
      throw DomainError("N(" + std::to_string(m) + ") is not an integer: " + to_string(sum) + " / " +
                        std::to_string(m));
    }
    d.per_divisor[m] = sum / m;
  }

  BigInt covered = 0;
  for (const auto& [m, n] : d.per_divisor) covered += n * m;
  if (covered != d.total_trees) {
    throw DomainError("pathway sizes do not add up to the number of trees");
  }
  return d;
}

std::vector<PathwayProbability> pathway_probabilities(const PathwayDistribution& d) {
  std::vector<PathwayProbability> rows;
  for (const auto& [m, n] : d.per_divisor) {
    if (n == 0) continue;
    rows.push_back({m, n, Rational(BigInt(m), d.total_trees)});
  }
  return rows;
}

BigInt burnside_pathway_count(const PermGroup& group) {
  if (!is_simple_action(group)) throw DomainError("the group does not act simply");
  const std::size_t leaves = group.degree();
  FixedTreeSeriesSolver solver;
  std::map<std::size_t, BigInt> by_order;  // cyclic groups of equal order are isomorphic
  BigInt sum = 0;
  for (const auto& g : group.elements()) {
    const std::size_t k = g.order();
    auto it = by_order.find(k);
    if (it == by_order.end()) {
      const PermGroup cyclic = close_generators({g}, leaves);
      const std::size_t n = leaves / k;
      it = by_order.emplace(k, solver.solve(cyclic, n).count(n)).first;
    }
    sum += it->second;
  }
  if (sum % group.order() != 0) throw DomainError("Burnside sum is not divisible by |G|");
  return sum / group.order();
}

std::string format_pathway_table(const PathwayDistribution& d, bool csv) {
  const auto rows = pathway_probabilities(d);
  std::ostringstream out;
  if (csv) {
    out << "m,N(m),probability\n";
    for (const auto& r : rows) out << r.size << ',' << to_string(r.count) << ',' << to_string(r.probability) << '\n';
    return out.str();
  }
  std::size_t wm = 1, wn = 4;
  for (const auto& r : rows) {
    wm = std::max(wm, std::to_string(r.size).size());
    wn = std::max(wn, digits(r.count));
  }
  out << pad_left("m", wm) << "  " << pad_left("N(m)", wn) << "  probability\n";
  for (const auto& r : rows) {
    out << pad_left(std::to_string(r.size), wm) << "  " << pad_left(to_string(r.count), wn) << "  "
        << to_string(r.probability) << '\n';
  }
  return out.str();
}

IcosahedralReport icosahedral_report(std::size_t t_number) {
  if (t_number == 0) throw DomainError("T must be positive");
  const PermGroup base = icosahedral_group();
  const PermGroup group = t_number == 1 ? base : replicate_action(base, t_number);
  const SubgroupLattice lattice(group);

  IcosahedralReport report;
  report.distribution = pathway_size_distribution(lattice);
  const auto& d = report.distribution;

  std::ostringstream out;
  if (t_number != 1) out << "warning: no published reference values for T = " << t_number << "\n";
  out << "icosahedral group, T = " << t_number << ", |X| = " << d.leaf_count << "\n";
  out << "trees: " << to_string(d.total_trees) << "\n\n";

  // Largest orbit count first, i.e. smallest subgroup first.
  for (const auto& c : d.classes) {
    out << "tbar_" << c.orbit_count << "(G" << c.order << ") = " << to_string(c.tbar) << "  [class size "
        << c.class_size << "]\n";
  }
  out << "\n" << format_pathway_table(d, false) << "\n";

  const BigInt& n_max = d.per_divisor.at(base.order());
  const BigInt& n_min = d.per_divisor.at(1);
  if (n_min > 0 && n_max > 0) {
    const Rational prob_ratio = Rational(BigInt(base.order()), d.total_trees) / Rational(BigInt(1), d.total_trees);
    const BigInt count_ratio = n_max / n_min;
    out << "pathways of size " << base.order() << " are " << to_string(prob_ratio)
        << " times more probable than pathways of size 1\n";
    out << "pathways of size " << base.order() << " outnumber pathways of size 1 by about 10^"
        << digits(count_ratio) - 1 << "\n";
  }
  out << "\nmobius\n" << mobius_csv(lattice);
  report.text = out.str();
  return report;
}

}  // namespace capsid
