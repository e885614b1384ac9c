#pragma once

#include <cstdint>

namespace chromagraph {

// Resource ceilings shared by the enumeration routines. Exceeding any of them
// raises ErrorKind::BudgetExceeded; results are never silently truncated.
struct Budget {
  std::uint64_t max_colourings = 100'000'000;
  std::uint64_t max_partitions = 10'000'000;
  // Connected vertex sets visited while counting induced copies.
  std::uint64_t max_subsets = 500'000'000;
  // Worker-pool size hint; 0 means "use hardware concurrency".
  unsigned threads = 0;
};

unsigned resolve_threads(unsigned hint);

}  // namespace chromagraph
