#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

#include "hamsq/search.hpp"

namespace hamsq {

struct ExploreOptions {
  int max_block = 7;
  int legs = 4;
  std::size_t limit = 100000;
  std::uint64_t budget = SearchOptions::kDefaultBudget;
};

/// Every 2-connected center block up to max_block vertices, every set of at
/// most `legs` attachment vertices, every choice of an edge or a triangle as
/// the leg at each. Prints counts and each instance whose square has no
/// hamiltonian cycle. Returns an exit code.
int explore_conjecture(const ExploreOptions& options, std::ostream& out);

}  // namespace hamsq
