#include "capsid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "capsid/errors.hpp"
#include "capsid/fixed_trees.hpp"
#include "capsid/group_io.hpp"
#include "capsid/lattice.hpp"
#include "capsid/pathways.hpp"
#include "capsid/series.hpp"
#include "capsid/stabilizer.hpp"
#include "capsid/tree.hpp"

namespace capsid::cli {

namespace {

enum class Format { plain, csv };

struct Options {
  std::string group;
  std::string perm;
  std::string tree;
  std::size_t order = 10;
  std::size_t n = 4;
  std::size_t t_number = 1;
  bool egf = false;
  bool count_only = false;
  Format format = Format::plain;
};

std::string join_points(std::span<const Point> points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(points[i]);
  }
  return s + "}";
}

// Right-aligned columns separated by two spaces, or plain CSV.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, Format format) {
  if (format == Format::csv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << '\n';
  }
}

std::size_t max_label(const AssemblyTree& tree) {
  const auto leaves = tree.leaves();
  return static_cast<std::size_t>(*std::max_element(leaves.begin(), leaves.end()));
}

void cmd_fixes(const Options& o, std::ostream& out) {
  const AssemblyTree tree = parse_tree(o.tree);
  std::size_t degree = max_label(tree);
  std::optional<PermGroup> group;
  if (!o.group.empty()) {
    group = load_group(o.group);
    degree = group->degree();
  }
  const Permutation g = parse_permutation(o.perm, degree);
  if (group && !group->contains(g)) throw DomainError("permutation " + g.to_cycles() + " is not in the group");
  out << (fixes(g, tree) ? "true" : "false") << '\n';
}

void cmd_stabilizer(const Options& o, std::ostream& out) {
  const PermGroup group = load_group(o.group);
  const AssemblyTree tree = parse_tree(o.tree);
  const StabilizerResult result = stabilizer(group, tree);
  out << "order " << result.group.order() << '\n';
  out << "orbit " << group.order() / result.group.order() << '\n';
  for (const auto& g : result.group.elements()) out << g.to_cycles() << '\n';
}

void cmd_fixed_trees(const Options& o, std::ostream& out) {
  const PermGroup group = load_group(o.group);
  FixedTreeDiagnostics diagnostics;
  const auto trees = generate_fixed_trees(group, &diagnostics);
  if (o.count_only) {
    out << trees.size() << '\n';
    return;
  }
  for (const auto& t : trees) out << t.to_string() << '\n';
}

void cmd_series(const Options& o, std::ostream& out) {
  const PermGroup group = load_group(o.group);
  if (o.order == 0) throw DomainError("--order must be at least 1");
  FixedTreeSeriesSolver solver;
  const PowerSeries f = solver.solve(group, o.order);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "t_n"});
  if (o.egf) rows.back().push_back("c_n");
  for (std::size_t n = 1; n <= o.order; ++n) {
    rows.push_back({std::to_string(n), to_string(f.count(n))});
    if (o.egf) rows.back().push_back(to_string(f[n]));
  }
  print_table(out, rows, o.format);
}

void cmd_pathways(const Options& o, std::ostream& out) {
  const PathwayDistribution d = pathway_size_distribution(load_group(o.group));
  out << format_pathway_table(d, o.format == Format::csv);
}

void cmd_icosa_report(const Options& o, std::ostream& out) {
  out << icosahedral_report(o.t_number).text;
}

void cmd_blocks(const Options& o, std::ostream& out) {
  const PermGroup group = load_group(o.group);
  const auto systems = enumerate_block_systems(group);
  for (const auto& s : systems) {
    std::string line;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      if (b) line += o.format == Format::csv ? ";" : " | ";
      line += join_points(s.blocks[b]);
    }
    out << line << '\n';
  }
  if (o.format == Format::plain) {
    out << "systems " << systems.size() << '\n';
    out << "distinct blocks " << distinct_blocks(systems).size() << '\n';
  }
}

void cmd_mobius(const Options& o, std::ostream& out) {
  const SubgroupLattice lattice(load_group(o.group));
  const std::string csv = mobius_csv(lattice);
  if (o.format == Format::csv) {
    out << csv;
    return;
  }
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    auto& row = rows.emplace_back();
    std::string cell;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
  }
  print_table(out, rows, Format::plain);
}

void cmd_enumerate_trees(const Options& o, std::ostream& out) {
  if (o.n == 0) throw DomainError("--n must be at least 1");
  if (o.count_only) {
    out << to_string(count_trees(o.n)) << '\n';
    return;
  }
  std::vector<Point> labels(o.n);
  for (std::size_t i = 0; i < o.n; ++i) labels[i] = static_cast<Point>(i + 1);
  for_each_tree(labels, [&](const AssemblyTree& t) { out << t.to_string() << '\n'; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Assembly trees and pathways under permutation group actions", "capsid"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"plain", Format::plain}, {"csv", Format::csv}};
  const std::string group_help = "builtin (klein4, icosahedral, cyclic:k, trivial:n) or group file";

  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", o.group, group_help)->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "plain or csv")->transform(CLI::CheckedTransformer(formats));
  };

  auto* fixes_cmd = app.add_subcommand("fixes", "does the permutation fix the tree");
  fixes_cmd->add_option("--group", o.group, group_help);
  fixes_cmd->add_option("--perm", o.perm, "cycle notation, e.g. \"(1 2)(3 4)\"")->required();
  fixes_cmd->add_option("--tree", o.tree, "nested tree text, e.g. \"((1,2),3,4)\"")->required();

  auto* stab_cmd = app.add_subcommand("stabilizer", "stabilizer of a tree in the group");
  add_group(stab_cmd);
  stab_cmd->add_option("--tree", o.tree, "nested tree text")->required();

  auto* fixed_cmd = app.add_subcommand("fixed-trees", "all trees fixed by a simply acting group");
  add_group(fixed_cmd);
  fixed_cmd->add_flag("--count-only", o.count_only, "print only the number of trees");

  auto* series_cmd = app.add_subcommand("series", "t_n(G) from the generating function");
  add_group(series_cmd);
  series_cmd->add_option("--order", o.order, "largest n")->check(CLI::PositiveNumber);
  series_cmd->add_flag("--egf", o.egf, "also print the exact EGF coefficients");
  add_format(series_cmd);

  auto* pathways_cmd = app.add_subcommand("pathways", "pathway sizes and probabilities");
  add_group(pathways_cmd);
  add_format(pathways_cmd);

  auto* icosa_cmd = app.add_subcommand("icosa-report", "icosahedral capsid pathway report");
  icosa_cmd->add_option("--t-number", o.t_number, "T-number (orbit count)")->check(CLI::PositiveNumber);

  auto* blocks_cmd = app.add_subcommand("blocks", "compatible block systems");
  add_group(blocks_cmd);
  add_format(blocks_cmd);

  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius function of the subgroup lattice");
  add_group(mobius_cmd);
  add_format(mobius_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate-trees", "assembly trees on {1..n}");
  enum_cmd->add_option("--n", o.n, "number of leaves")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count-only", o.count_only, "print only the number of trees");

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "unknown subcommand: " << args.front() << '\n';
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "usage error: " << message << '\n';
    return 2;
  }

  try {
    std::ostringstream buffer;
    if (fixes_cmd->parsed()) cmd_fixes(o, buffer);
    else if (stab_cmd->parsed()) cmd_stabilizer(o, buffer);
    else if (fixed_cmd->parsed()) cmd_fixed_trees(o, buffer);
    else if (series_cmd->parsed()) cmd_series(o, buffer);
    else if (pathways_cmd->parsed()) cmd_pathways(o, buffer);
    else if (icosa_cmd->parsed()) cmd_icosa_report(o, buffer);
    else if (blocks_cmd->parsed()) cmd_blocks(o, buffer);
    else if (mobius_cmd->parsed()) cmd_mobius(o, buffer);
    else if (enum_cmd->parsed()) cmd_enumerate_trees(o, buffer);
    out << buffer.str();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace capsid::cli
