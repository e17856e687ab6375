#ifndef NFLAB_HITTING_TIME_HPP
#define NFLAB_HITTING_TIME_HPP

#include <string>
#include <vector>

#include "nflab/search.hpp"

namespace nflab {

// Desirability is a two-valued cost: desirable points map to 0, all others
// to 1, under the minimization convention.
ObjectiveFunction make_indicator_function(int space_size,
                                          const std::vector<int>& desirable);

// 1-based step at which the algorithm first evaluates a desirable point.
int first_hit_time(SearchAlgorithm& a, const ObjectiveFunction& indicator);

struct HittingReport {
  std::string algorithm;
  int x = 0;
  int n = 0;
  Rational mean;              // exact average over all C(x, n) placements
  Rational formula;           // (x+1)/(n+1)
  bool match = false;
  std::vector<int> per_member;  // filled only when requested
};

// Averages first_hit_time over every placement of n desirable points in a
// space of size x. C(x, n) must stay within the enumeration guard.
HittingReport mean_first_hit(SearchAlgorithm& a, int x, int n,
                             const Guards& guards = {},
                             bool keep_members = false);

}  // namespace nflab

#endif
