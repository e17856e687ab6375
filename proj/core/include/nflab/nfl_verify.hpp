#ifndef NFLAB_NFL_VERIFY_HPP
#define NFLAB_NFL_VERIFY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nflab/function_space.hpp"
#include "nflab/search.hpp"

namespace nflab {

// k -> mass, for one (algorithm, m, measure). Uniform weighting stores
// integer counts; probability weighting stores the weighted sums. Only
// realized k appear; everything else has mass zero by omission.
struct PerformanceDistribution {
  std::map<Rational, Rational> masses;
  std::string algorithm;
  int m = 0;
  std::string measure;

  Rational total_mass() const;
  bool same_masses(const PerformanceDistribution& other) const {
    return masses == other.masses;
  }
};

// p(f) over a function set; zero weights are kept because the non-uniform
// condition quantifies over them too.
struct FunctionDistribution {
  FunctionSet set;
  std::vector<Rational> weights;  // aligned with set.tables

  void validate() const;
  Rational weight_of(const std::vector<int>& table) const;  // 0 if absent
};

FunctionDistribution make_uniform_distribution(FunctionSet set);

PerformanceDistribution performance_distribution(const FunctionSet& set,
                                                 SearchAlgorithm& a, int m,
                                                 const PerformanceMeasure& c);

PerformanceDistribution performance_distribution(const FunctionDistribution& dist,
                                                 SearchAlgorithm& a, int m,
                                                 const PerformanceMeasure& c);

struct DistributionWitness {
  Rational k;
  std::string algo_a, algo_b;
  int m = 0;
  std::string measure;
  Rational left, right;
};

struct Verdict {
  bool equal = false;
  std::optional<DistributionWitness> witness;
};

using MeasureSet = std::vector<std::unique_ptr<PerformanceMeasure>>;

// Compares every pair from the family for every m and measure.
Verdict verify_uniform_nfl(const FunctionSet& set, Family& family,
                           const std::vector<int>& ms, const MeasureSet& measures);

Verdict verify_nonuniform_nfl(const FunctionDistribution& dist, Family& family,
                              const std::vector<int>& ms,
                              const MeasureSet& measures);

// The explicit construction certifying a failed NFL equality: enumerator a
// in identity order, enumerator b in pi-inverse order, and the indicator
// measure of f's own cost sequence. Uniform weighting yields masses (1, 0);
// probability weighting yields (p(f), p(g)).
struct Counterexample {
  std::vector<int> witness_function;  // f
  Permutation pi;
  std::vector<int> missing_function;  // g = f∘pi
  std::string algo_a, algo_b;
  std::vector<int> target;  // cost-index sequence <f(0..n-1)>
  int m = 0;
  Rational k;
  Rational left_mass, right_mass;
};

// Throws CalledOnClosedSet when the set is c.u.p.
Counterexample construct_counterexample(const FunctionSet& set,
                                        const Guards& guards = {});

struct ConditionWitness {
  Histogram histogram;
  std::vector<int> f, g;
  Rational pf, pg;
};

struct ConditionCheck {
  bool holds = false;
  std::optional<ConditionWitness> witness;
};

// Theorem-6 condition: within every basis class of the FULL function
// space, all weights are equal. Functions absent from the distribution
// carry weight zero and still participate.
ConditionCheck check_nonuniform_condition(const FunctionDistribution& dist,
                                          const Guards& guards = {});

// Throws CalledOnCompliantDistribution when the condition holds.
Counterexample construct_nonuniform_counterexample(
    const FunctionDistribution& dist, const Guards& guards = {});

// p_x(y): probability that point x maps to cost index y.
Rational marginal_pxy(const FunctionDistribution& dist, int point,
                      int cost_index);

}  // namespace nflab

#endif
