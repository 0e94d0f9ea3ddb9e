#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace sqm {

// Runs body(i) for i in [0, n) on up to `threads` workers. Work is claimed
// dynamically, so callers must write results by index to stay deterministic.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

// Stateless per-index seed derivation (splitmix64 finalizer), so a trial's
// randomness never depends on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sqm
