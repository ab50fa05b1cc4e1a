#pragma once

#include <vector>

#include "capsid/perm_group.hpp"

namespace capsid {

// Internal constructor access for element sets already known to be closed.
struct GroupBuilder {
  static PermGroup from_closed(std::size_t degree, std::vector<Permutation> generators,
                               std::vector<Permutation> sorted_elements) {
    return PermGroup(degree, std::move(generators), std::move(sorted_elements));
  }
};

}  // namespace capsid
