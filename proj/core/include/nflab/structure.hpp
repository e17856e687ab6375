#ifndef NFLAB_STRUCTURE_HPP
#define NFLAB_STRUCTURE_HPP

#include <functional>
#include <map>
#include <string>

#include "nflab/function_space.hpp"
#include "nflab/neighborhood.hpp"

namespace nflab {

// Exact metric on cost values. The default is |a - b|, the usual choice
// for rational codomains.
struct CostMetric {
  std::string name;
  std::function<Rational(const Rational&, const Rational&)> distance;

  static CostMetric absolute_difference();
};

struct StructureReport {
  Rational s_max;          // largest gap across a neighbored pair
  Rational d_max;          // largest gap across any pair
  long long local_minima;  // strict local minima of f
  long long l_max;         // maximum minima count within f's basis class
};

Rational steepness(const ObjectiveFunction& f, const CostDomain& domain,
                   const NeighborhoodRelation& n, const CostMetric& metric);

Rational diameter(const ObjectiveFunction& f, const CostDomain& domain,
                  const CostMetric& metric);

// Points strictly below every neighbor; isolated points count (the
// condition is vacuous for them).
long long local_minima_count(const ObjectiveFunction& f,
                             const NeighborhoodRelation& n);

// Maximum of local_minima_count over the whole basis class, by exhaustive
// orbit scan.
long long l_max(const ObjectiveFunction& f, const NeighborhoodRelation& n,
                const Guards& guards = {});

// Computes all four functionals; caches l_max per histogram so scanning a
// whole function set costs one orbit walk per class.
class StructureAnalyzer {
 public:
  StructureAnalyzer(CostDomain domain, NeighborhoodRelation n, CostMetric metric,
                    Guards guards = {});
  StructureReport report(const ObjectiveFunction& f);

 private:
  CostDomain domain_;
  NeighborhoodRelation n_;
  CostMetric metric_;
  Guards guards_;
  std::map<Histogram, long long> lmax_cache_;
};

enum class ConstraintKind { SteepnessBound, MinimaBound };

struct ConstrainedClassResult {
  ConstraintKind kind;
  FunctionSet members;
  Rational bound;          // the <=-bound applied (integral for minima)
  Rational max_diameter;   // max over members of d_max (steepness kind)
  long long max_l_max = 0;  // max over members of l_max (minima kind)
  CupCheck cup;            // the corollaries guarantee cup == false
};

// Enumerates every function with steepness (respectively minima count)
// <= bound and certifies that the class is not c.u.p. Throws EmptyClass
// when nothing satisfies the bound, and InputError when the bound is not
// strictly below the maximal possible value over the class, which the
// corollaries require.
ConstrainedClassResult constrained_class(const SearchSpace& space,
                                         const CostDomain& domain,
                                         ConstraintKind kind,
                                         const Rational& bound,
                                         const NeighborhoodRelation& n,
                                         const CostMetric& metric,
                                         const Guards& guards = {});

}  // namespace nflab

#endif
