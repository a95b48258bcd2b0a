#pragma once

#include <cstdint>
#include <ostream>

namespace veronese {

/// Seeded sanity suite over the whole kernel: ring and bracket axioms,
/// grading, fraction laws, lift round trips, parser round trips.
/// Prints one line per suite and returns the number of failing suites.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace veronese
