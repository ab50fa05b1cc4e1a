#include "capsid/group_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "capsid/errors.hpp"

namespace capsid {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw ParseError("bad " + std::string(what) + " \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

PermGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (degree == 0) {
      if (line.substr(0, 6) != "degree") {
        throw ParseError("group text line " + std::to_string(line_no) +
                         ": expected \"degree N\"");
      }
      degree = parse_count(trim(line.substr(6)), "degree");
      continue;
    }
    gens.push_back(parse_permutation(line, degree));
  }
  if (degree == 0) throw ParseError("group text has no \"degree N\" line");
  return close_generators(std::move(gens), degree);
}

PermGroup builtin_group(std::string_view name) {
  if (name == "klein4") return klein4_group();
  if (name == "icosahedral") return icosahedral_group();
  if (name.starts_with("cyclic:")) return cyclic_group(parse_count(name.substr(7), "cyclic order"));
  if (name.starts_with("trivial:")) return trivial_group(parse_count(name.substr(8), "degree"));
  throw ParseError("unknown group \"" + std::string(name) + "\"");
}

PermGroup load_group(std::string_view name_or_path) {
  const bool builtin = name_or_path == "klein4" || name_or_path == "icosahedral" ||
                       name_or_path.starts_with("cyclic:") || name_or_path.starts_with("trivial:");
  if (builtin) return builtin_group(name_or_path);
  const std::filesystem::path path{std::string(name_or_path)};
  std::ifstream file(path);
  if (!file) {
    throw ParseError("group \"" + std::string(name_or_path) +
                     "\" is neither a built-in name nor a readable file");
  }
  std::ostringstream contents;
  contents << file.rdbuf();
  return parse_group_text(contents.str());
}

}  // namespace capsid
