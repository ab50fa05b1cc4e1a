#pragma once

#include <string_view>

#include "capsid/perm_group.hpp"

namespace capsid {

// Group text format:
//
//   degree N
//   (1 2)(3 4)
//   (1 3)(2 4)
//
// One generator per line in cycle notation. Blank lines and lines starting
// with '#' are ignored. Throws ParseError on malformed input.
PermGroup parse_group_text(std::string_view text);

// Built-in groups: "klein4", "icosahedral", "cyclic:k", "trivial:n".
// Throws ParseError for unknown names.
PermGroup builtin_group(std::string_view name);

// A built-in name, or else a path to a file in the group text format.
PermGroup load_group(std::string_view name_or_path);

}  // namespace capsid
