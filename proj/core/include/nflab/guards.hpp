#ifndef NFLAB_GUARDS_HPP
#define NFLAB_GUARDS_HPP

#include <cstdint>

namespace nflab {

// Enumeration limits. Operations that scale with |Y|^|X|, with an orbit
// size, or with |X|! refuse inputs beyond these bounds instead of running
// away; callers opt in to bigger sweeps by raising them.
struct Guards {
  // Cap on |Y|^|X| for whole-space sweeps, and on the exponent bit count
  // for exact powers of two in subset counting.
  std::uint64_t max_exact = std::uint64_t(1) << 20;
  // Cap on the size of any permutation orbit that gets enumerated.
  std::uint64_t max_orbit = 1'000'000;
  // Cap on |X| for operations that walk all |X|! permutations.
  int max_space = 10;
};

}  // namespace nflab

#endif
