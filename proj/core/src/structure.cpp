#include "nflab/structure.hpp"

#include <algorithm>

namespace nflab {

CostMetric CostMetric::absolute_difference() {
  return CostMetric{"abs-diff", [](const Rational& a, const Rational& b) {
                      return rational_abs(a - b);
                    }};
}

Rational steepness(const ObjectiveFunction& f, const CostDomain& domain,
                   const NeighborhoodRelation& n, const CostMetric& metric) {
  if (f.space_size() != n.size)
    throw InputError("neighborhood size does not match function domain");
  bool any = false;
  Rational best = 0;
  for (int i = 0; i < n.size; ++i)
    for (int j : n.adjacency[i]) {
      if (j < i) continue;
      any = true;
      Rational d = metric.distance(domain.values[f.table[i]],
                                   domain.values[f.table[j]]);
      if (d > best) best = d;
    }
  if (!any) throw InputError("steepness is undefined on an empty edge set");
  return best;
}

Rational diameter(const ObjectiveFunction& f, const CostDomain& domain,
                  const CostMetric& metric) {
  // max over cost values actually attained, pairs included once
  std::vector<char> used(domain.values.size(), 0);
  for (int v : f.table) used[v] = 1;
  Rational best = 0;
  for (std::size_t a = 0; a < used.size(); ++a) {
    if (!used[a]) continue;
    for (std::size_t b = a + 1; b < used.size(); ++b) {
      if (!used[b]) continue;
      Rational d = metric.distance(domain.values[a], domain.values[b]);
      if (d > best) best = d;
    }
  }
  return best;
}

long long local_minima_count(const ObjectiveFunction& f,
                             const NeighborhoodRelation& n) {
  if (f.space_size() != n.size)
    throw InputError("neighborhood size does not match function domain");
  long long count = 0;
  for (int i = 0; i < n.size; ++i) {
    bool strict_min = true;
    for (int j : n.adjacency[i])
      if (f.table[i] >= f.table[j]) {
        strict_min = false;
        break;
      }
    if (strict_min) ++count;
  }
  return count;
}

long long l_max(const ObjectiveFunction& f, const NeighborhoodRelation& n,
                const Guards& guards) {
  Histogram h = histogram_of(f);
  if (orbit_size(h) > guards.max_orbit)
    throw GuardExceeded("orbit scan for l_max exceeds guard");
  long long best = 0;
  std::vector<int> t = representative_table(h);
  do {
    best = std::max(
        best, local_minima_count(ObjectiveFunction{t, f.codomain_size}, n));
  } while (std::next_permutation(t.begin(), t.end()));
  return best;
}

StructureAnalyzer::StructureAnalyzer(CostDomain domain, NeighborhoodRelation n,
                                     CostMetric metric, Guards guards)
    : domain_(std::move(domain)),
      n_(std::move(n)),
      metric_(std::move(metric)),
      guards_(guards) {}

StructureReport StructureAnalyzer::report(const ObjectiveFunction& f) {
  StructureReport r;
  r.s_max = steepness(f, domain_, n_, metric_);
  r.d_max = diameter(f, domain_, metric_);
  r.local_minima = local_minima_count(f, n_);
  Histogram h = histogram_of(f);
  auto it = lmax_cache_.find(h);
  if (it == lmax_cache_.end())
    it = lmax_cache_.emplace(h, l_max(f, n_, guards_)).first;
  r.l_max = it->second;
  return r;
}

ConstrainedClassResult constrained_class(const SearchSpace& space,
                                         const CostDomain& domain,
                                         ConstraintKind kind,
                                         const Rational& bound,
                                         const NeighborhoodRelation& n,
                                         const CostMetric& metric,
                                         const Guards& guards) {
  if (n.size != space.size)
    throw InputError("neighborhood size does not match search space");
  ConstrainedClassResult result;
  result.kind = kind;
  result.bound = bound;

  FunctionEnumerator en(space.size, domain.size(), guards);
  std::vector<std::vector<int>> members;
  std::vector<int> t;
  while (en.next(t)) {
    ObjectiveFunction f{t, domain.size()};
    if (kind == ConstraintKind::SteepnessBound) {
      if (steepness(f, domain, n, metric) <= bound) members.push_back(t);
    } else {
      if (Rational(local_minima_count(f, n)) <= bound) members.push_back(t);
    }
  }
  if (members.empty()) throw EmptyClass("no function satisfies the bound");
  result.members = make_function_set(space, domain, std::move(members));

  // Corollary hypothesis: the bound must sit strictly below the maximal
  // possible value over the class.
  if (kind == ConstraintKind::SteepnessBound) {
    Rational max_d = 0;
    for (const auto& table : result.members.tables)
      max_d = std::max(
          max_d, diameter(ObjectiveFunction{table, domain.size()}, domain, metric));
    result.max_diameter = max_d;
    if (!(bound < max_d))
      throw InputError("steepness bound is not strictly below the maximal diameter");
  } else {
    std::map<Histogram, long long> cache;
    long long max_l = 0;
    for (const auto& table : result.members.tables) {
      ObjectiveFunction f{table, domain.size()};
      Histogram h = histogram_of(f);
      auto it = cache.find(h);
      if (it == cache.end()) it = cache.emplace(h, l_max(f, n, guards)).first;
      max_l = std::max(max_l, it->second);
    }
    result.max_l_max = max_l;
    if (!(bound < Rational(max_l)))
      throw InputError("minima bound is not strictly below the maximal l_max");
  }

  result.cup = is_cup(result.members, guards);
  if (result.cup.cup)
    throw Error("internal: constrained class is c.u.p., contradicting the corollary");
  return result;
}

}  // namespace nflab
