#include "nflab/nfl_verify.hpp"

#include <algorithm>

namespace nflab {

Rational PerformanceDistribution::total_mass() const {
  Rational t = 0;
  for (const auto& [k, mass] : masses) t += mass;
  return t;
}

void FunctionDistribution::validate() const {
  set.validate();
  if (weights.size() != set.tables.size())
    throw InputError("weight count does not match function count");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw InputError("weights must be non-negative");
    total += w;
  }
  if (total != 1) throw InputError("weights must sum to 1, got " +
                                   rational_compact(total));
}

Rational FunctionDistribution::weight_of(const std::vector<int>& table) const {
  auto it = std::lower_bound(set.tables.begin(), set.tables.end(), table);
  if (it == set.tables.end() || *it != table) return 0;
  return weights[static_cast<std::size_t>(it - set.tables.begin())];
}

FunctionDistribution make_uniform_distribution(FunctionSet set) {
  const std::size_t n = set.tables.size();
  if (n == 0) throw InputError("cannot distribute over an empty set");
  FunctionDistribution d{std::move(set), std::vector<Rational>(n, Rational(1, n))};
  d.validate();
  return d;
}

namespace {

PerformanceDistribution weighted_distribution(const FunctionSet& set,
                                              const std::vector<Rational>* weights,
                                              SearchAlgorithm& a, int m,
                                              const PerformanceMeasure& c) {
  PerformanceDistribution dist;
  dist.algorithm = a.name();
  dist.m = m;
  dist.measure = c.name();
  for (std::size_t i = 0; i < set.tables.size(); ++i) {
    if (weights && (*weights)[i] == 0) continue;
    Trace trace = run(a, set.function(i), m);
    Rational k = c.evaluate(set.domain, trace.cost_indices());
    dist.masses[k] += weights ? (*weights)[i] : Rational(1);
  }
  for (auto it = dist.masses.begin(); it != dist.masses.end();)
    it = it->second == 0 ? dist.masses.erase(it) : std::next(it);
  return dist;
}

}  // namespace

PerformanceDistribution performance_distribution(const FunctionSet& set,
                                                 SearchAlgorithm& a, int m,
                                                 const PerformanceMeasure& c) {
  if (set.tables.empty()) throw InputError("distribution over an empty set");
  return weighted_distribution(set, nullptr, a, m, c);
}

PerformanceDistribution performance_distribution(const FunctionDistribution& d,
                                                 SearchAlgorithm& a, int m,
                                                 const PerformanceMeasure& c) {
  d.validate();
  return weighted_distribution(d.set, &d.weights, a, m, c);
}

namespace {

std::optional<DistributionWitness> first_difference(
    const PerformanceDistribution& left, const PerformanceDistribution& right) {
  auto li = left.masses.begin();
  auto ri = right.masses.begin();
  while (li != left.masses.end() || ri != right.masses.end()) {
    if (ri == right.masses.end() ||
        (li != left.masses.end() && li->first < ri->first)) {
      return DistributionWitness{li->first, left.algorithm, right.algorithm,
                                 left.m, left.measure, li->second, 0};
    }
    if (li == left.masses.end() || ri->first < li->first) {
      return DistributionWitness{ri->first, left.algorithm, right.algorithm,
                                 left.m, left.measure, 0, ri->second};
    }
    if (li->second != ri->second) {
      return DistributionWitness{li->first, left.algorithm, right.algorithm,
                                 left.m, left.measure, li->second, ri->second};
    }
    ++li;
    ++ri;
  }
  return std::nullopt;
}

template <typename DistFn>
Verdict verify_family(Family& family, const std::vector<int>& ms,
                      const MeasureSet& measures, DistFn&& dist_of) {
  if (family.empty()) throw InputError("family must be non-empty");
  for (int m : ms) {
    for (const auto& measure : measures) {
      std::vector<PerformanceDistribution> dists;
      dists.reserve(family.size());
      for (auto& algo : family) dists.push_back(dist_of(*algo, m, *measure));
      for (std::size_t i = 0; i < dists.size(); ++i)
        for (std::size_t j = i + 1; j < dists.size(); ++j)
          if (auto w = first_difference(dists[i], dists[j])) {
            w->algo_a = dists[i].algorithm;
            w->algo_b = dists[j].algorithm;
            return Verdict{false, std::move(w)};
          }
    }
  }
  return Verdict{true, std::nullopt};
}

Counterexample build_counterexample(const FunctionSet& set,
                                    const std::vector<Rational>* weights,
                                    const std::vector<int>& f_table,
                                    const Permutation& pi,
                                    const std::vector<int>& g_table) {
  const int n = static_cast<int>(f_table.size());
  Counterexample ce;
  ce.witness_function = f_table;
  ce.pi = pi;
  ce.missing_function = g_table;
  ce.target = f_table;  // <f(0), ..., f(n-1)> as cost indices
  ce.m = n;
  ce.k = 1;

  auto a = make_order_driven(Permutation::identity(n));
  auto b = make_order_driven(pi.inverse());
  ce.algo_a = a->name();
  ce.algo_b = b->name();
  auto indicator = make_measure_sequence_indicator(ce.target);

  auto mass_under = [&](SearchAlgorithm& algo) {
    Rational mass = 0;
    for (std::size_t i = 0; i < set.tables.size(); ++i) {
      Rational w = weights ? (*weights)[i] : Rational(1);
      if (w == 0) continue;
      Trace trace = run(algo, set.function(i), n);
      if (indicator->evaluate(set.domain, trace.cost_indices()) == ce.k)
        mass += w;
    }
    return mass;
  };
  ce.left_mass = mass_under(*a);
  ce.right_mass = mass_under(*b);
  return ce;
}

}  // namespace

Verdict verify_uniform_nfl(const FunctionSet& set, Family& family,
                           const std::vector<int>& ms,
                           const MeasureSet& measures) {
  return verify_family(family, ms, measures,
                       [&](SearchAlgorithm& a, int m, const PerformanceMeasure& c) {
                         return performance_distribution(set, a, m, c);
                       });
}

Verdict verify_nonuniform_nfl(const FunctionDistribution& dist, Family& family,
                              const std::vector<int>& ms,
                              const MeasureSet& measures) {
  dist.validate();
  return verify_family(family, ms, measures,
                       [&](SearchAlgorithm& a, int m, const PerformanceMeasure& c) {
                         return performance_distribution(dist, a, m, c);
                       });
}

Counterexample construct_counterexample(const FunctionSet& set,
                                        const Guards& guards) {
  CupCheck check = is_cup(set, guards);
  if (check.cup)
    throw CalledOnClosedSet("counterexample construction needs a non-c.u.p. set");
  const CupWitness& w = *check.witness;
  return build_counterexample(set, nullptr, w.function_table, w.pi,
                              w.missing_table);
}

ConditionCheck check_nonuniform_condition(const FunctionDistribution& dist,
                                          const Guards& guards) {
  dist.validate();
  const int x = dist.set.space.size;
  const int y = dist.set.domain.size();
  BigInt full = function_space_size(x, y);
  if (full > guards.max_exact)
    throw GuardExceeded("full function space exceeds enumeration guard");

  HistogramEnumerator histograms(x, y);
  Histogram h;
  while (histograms.next(h)) {
    std::vector<int> first = representative_table(h);
    Rational p_first = dist.weight_of(first);
    std::vector<int> t = first;
    while (std::next_permutation(t.begin(), t.end())) {
      Rational p = dist.weight_of(t);
      if (p != p_first)
        return ConditionCheck{false,
                              ConditionWitness{h, first, t, p_first, p}};
    }
  }
  return ConditionCheck{true, std::nullopt};
}

Counterexample construct_nonuniform_counterexample(
    const FunctionDistribution& dist, const Guards& guards) {
  ConditionCheck check = check_nonuniform_condition(dist, guards);
  if (check.holds)
    throw CalledOnCompliantDistribution(
        "distribution is constant on every basis class");
  const ConditionWitness& w = *check.witness;

  // Weighted sums must range over the full space: absent functions carry
  // weight zero and cannot change either mass.
  FunctionSet full = all_functions(dist.set.space, dist.set.domain, guards);
  std::vector<Rational> weights;
  weights.reserve(full.tables.size());
  for (const auto& t : full.tables) weights.push_back(dist.weight_of(t));

  Permutation pi = mapping_permutation(w.f, w.g);
  return build_counterexample(full, &weights, w.f, pi, w.g);
}

Rational marginal_pxy(const FunctionDistribution& dist, int point,
                      int cost_index) {
  dist.validate();
  if (point < 0 || point >= dist.set.space.size)
    throw InputError("point index out of range");
  if (cost_index < 0 || cost_index >= dist.set.domain.size())
    throw InputError("cost index out of range");
  Rational total = 0;
  for (std::size_t i = 0; i < dist.set.tables.size(); ++i)
    if (dist.set.tables[i][point] == cost_index) total += dist.weights[i];
  return total;
}

}  // namespace nflab
