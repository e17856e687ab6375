#include "nflab/hitting_time.hpp"

#include <algorithm>

namespace nflab {

ObjectiveFunction make_indicator_function(int space_size,
                                          const std::vector<int>& desirable) {
  if (space_size < 1) throw InputError("space size must be >= 1");
  if (desirable.empty()) throw InputError("at least one desirable point needed");
  ObjectiveFunction f;
  f.codomain_size = 2;
  f.table.assign(space_size, 1);
  for (int p : desirable) {
    if (p < 0 || p >= space_size) throw InputError("desirable point out of range");
    f.table[p] = 0;
  }
  return f;
}

int first_hit_time(SearchAlgorithm& a, const ObjectiveFunction& indicator) {
  indicator.validate();
  if (std::find(indicator.table.begin(), indicator.table.end(), 0) ==
      indicator.table.end())
    throw InputError("indicator has no desirable point");
  a.reset();
  Trace trace;
  const int n = indicator.space_size();
  for (int step = 1; step <= n; ++step) {
    const int p = a.next_point(trace, n);
    if (p < 0 || p >= n || trace.visited(p))
      throw ContractViolation("algorithm " + a.name() + " broke non-repetition");
    trace.pairs.push_back(PointCost{p, indicator.table[p]});
    if (indicator.table[p] == 0) return step;
  }
  throw Error("internal: non-repeating run missed every desirable point");
}

HittingReport mean_first_hit(SearchAlgorithm& a, int x, int n,
                             const Guards& guards, bool keep_members) {
  if (x < 1 || n < 1 || n > x) throw InputError("need 1 <= n <= x");
  BigInt members = binomial(static_cast<unsigned>(x), static_cast<unsigned>(n));
  if (members > guards.max_exact)
    throw GuardExceeded("ensemble of size " + members.str() +
                        " exceeds enumeration guard");

  HittingReport report;
  report.algorithm = a.name();
  report.x = x;
  report.n = n;
  report.formula = Rational(x + 1, n + 1);

  // combination odometer over the n desirable positions
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  BigInt sum = 0;
  while (true) {
    ObjectiveFunction f = make_indicator_function(x, comb);
    const int hit = first_hit_time(a, f);
    sum += hit;
    if (keep_members) report.per_member.push_back(hit);

    int i = n - 1;
    while (i >= 0 && comb[i] == x - n + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  }
  report.mean = Rational(sum, members);
  report.match = report.mean == report.formula;
  return report;
}

}  // namespace nflab
