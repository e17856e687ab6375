#ifndef NFLAB_SEARCH_HPP
#define NFLAB_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nflab/function_space.hpp"
#include "nflab/neighborhood.hpp"

namespace nflab {

struct PointCost {
  int point;
  int cost;  // index into the cost domain
  bool operator==(const PointCost&) const = default;
};

// Ordered record of visited points; points never repeat.
struct Trace {
  std::vector<PointCost> pairs;

  int length() const { return static_cast<int>(pairs.size()); }
  bool visited(int point) const;
  std::vector<int> cost_indices() const;
};

// Non-repeating black-box strategy: maps the trace seen so far to a fresh
// point. Instances hold per-run mutable state and must not be shared
// between concurrent runs; run() calls reset() before the first step.
class SearchAlgorithm {
 public:
  virtual ~SearchAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual void reset() {}
  virtual int next_point(const Trace& trace, int space_size) = 0;
};

// Executes m steps of a on f, recording (point, cost) pairs. Throws
// ContractViolation if the algorithm revisits a point.
Trace run(SearchAlgorithm& a, const ObjectiveFunction& f, int m);

// Maps a cost-value sequence to an exact rational score. Depends only on
// the sequence, never on which points produced it.
class PerformanceMeasure {
 public:
  virtual ~PerformanceMeasure() = default;
  virtual std::string name() const = 0;
  virtual Rational evaluate(const CostDomain& domain,
                            const std::vector<int>& cost_indices) const = 0;
};

std::unique_ptr<PerformanceMeasure> make_measure_min_so_far();
std::unique_ptr<PerformanceMeasure> make_measure_value_at_end();
// 1 iff the whole sequence equals `target` element-wise (same length), 0
// otherwise.
std::unique_ptr<PerformanceMeasure> make_measure_sequence_indicator(
    std::vector<int> target);

std::unique_ptr<SearchAlgorithm> make_lexicographic();
// visits pi(0), pi(1), ...
std::unique_ptr<SearchAlgorithm> make_order_driven(Permutation pi);
// visits a seed-determined uniform random permutation (splitmix64)
std::unique_ptr<SearchAlgorithm> make_seeded_random(std::uint64_t seed);
// sits at the minimum-cost visited point (tie: earliest visit), proposes
// its lowest-index unvisited neighbor, restarts at the lowest-index
// unvisited point when stuck; the seed picks the start point.
std::unique_ptr<SearchAlgorithm> make_hill_climber(NeighborhoodRelation n,
                                                   std::uint64_t seed);

// A heuristic that may propose already-visited points. `evaluated` is the
// real trace; `lookups` are the proposals that were answered from the
// database without consuming an evaluation.
class RepeatingHeuristic {
 public:
  virtual ~RepeatingHeuristic() = default;
  virtual std::string name() const = 0;
  virtual void reset() {}
  virtual int propose(const Trace& evaluated,
                      const std::vector<PointCost>& lookups, int space_size) = 0;
};

std::unique_ptr<RepeatingHeuristic> make_repeat_random(std::uint64_t seed);
std::unique_ptr<RepeatingHeuristic> make_repeat_const(int point);
std::unique_ptr<RepeatingHeuristic> as_repeating(
    std::unique_ptr<SearchAlgorithm> inner);

// Couples a repeating heuristic with a search-point database: repeated
// proposals are served from the record without consuming an evaluation,
// and after space_size*64 repeats in one step the wrapper falls back to
// the lowest-index unvisited point.
std::unique_ptr<SearchAlgorithm> memoize(std::unique_ptr<RepeatingHeuristic> h);

using Family = std::vector<std::unique_ptr<SearchAlgorithm>>;

// Cyclic pool of default seeds for family entries written without one.
struct SeedPool {
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::size_t next = 0;
  std::uint64_t take();
};

// Family specification string: comma-separated entries
//   lex
//   order:<images>        digits ("3210"), dashed ("3-2-1-0"),
//                         or the keywords identity / reverse / swap01
//   rand[:<seed>]
//   hill[:<nbhd>[:<seed>]]   nbhd in {auto, hypercube, ring}
//   memo:<inner>          inner algorithm entry, or randrep[:<seed>] /
//                         const:<point>
Family parse_family(const std::string& spec, int space_size, SeedPool& seeds);

// lex, order:reverse, order:swap01, rand x2, hill:auto, memo:randrep.
Family default_family(int space_size, SeedPool& seeds);

}  // namespace nflab

#endif
