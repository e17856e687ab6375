#include "nflab/search.hpp"

#include <algorithm>
#include <sstream>

#include "nflab/prng.hpp"

namespace nflab {

bool Trace::visited(int point) const {
  for (const auto& pc : pairs)
    if (pc.point == point) return true;
  return false;
}

std::vector<int> Trace::cost_indices() const {
  std::vector<int> out;
  out.reserve(pairs.size());
  for (const auto& pc : pairs) out.push_back(pc.cost);
  return out;
}

Trace run(SearchAlgorithm& a, const ObjectiveFunction& f, int m) {
  f.validate();
  if (m < 1 || m > f.space_size())
    throw InputError("m must lie in 1..|X|");
  a.reset();
  Trace trace;
  trace.pairs.reserve(m);
  for (int step = 0; step < m; ++step) {
    const int p = a.next_point(trace, f.space_size());
    if (p < 0 || p >= f.space_size())
      throw ContractViolation("algorithm " + a.name() +
                              " proposed an out-of-range point");
    if (trace.visited(p))
      throw ContractViolation("algorithm " + a.name() +
                              " revisited point " + std::to_string(p));
    trace.pairs.push_back(PointCost{p, f.table[p]});
  }
  return trace;
}

namespace {

int lowest_unvisited(const Trace& trace, int space_size) {
  for (int p = 0; p < space_size; ++p)
    if (!trace.visited(p)) return p;
  throw ContractViolation("no unvisited point remains");
}

class Lexicographic final : public SearchAlgorithm {
 public:
  std::string name() const override { return "lex"; }
  int next_point(const Trace& trace, int space_size) override {
    return lowest_unvisited(trace, space_size);
  }
};

class OrderDriven final : public SearchAlgorithm {
 public:
  explicit OrderDriven(Permutation pi) : pi_(std::move(pi)) {
    pi_.validate();
    std::ostringstream os;
    os << "order:";
    for (int i = 0; i < pi_.size(); ++i) os << (i ? "-" : "") << pi_(i);
    name_ = os.str();
  }
  std::string name() const override { return name_; }
  int next_point(const Trace& trace, int space_size) override {
    if (space_size != pi_.size())
      throw ContractViolation(name_ + " built for a different space size");
    for (int i = 0; i < pi_.size(); ++i)
      if (!trace.visited(pi_(i))) return pi_(i);
    throw ContractViolation("no unvisited point remains");
  }

 private:
  Permutation pi_;
  std::string name_;
};

class SeededRandom final : public SearchAlgorithm {
 public:
  explicit SeededRandom(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "rand:" + std::to_string(seed_); }
  void reset() override { order_.clear(); }
  int next_point(const Trace& trace, int space_size) override {
    if (static_cast<int>(order_.size()) != space_size)
      order_ = seeded_permutation(space_size, seed_);
    for (int p : order_)
      if (!trace.visited(p)) return p;
    throw ContractViolation("no unvisited point remains");
  }

 private:
  std::uint64_t seed_;
  std::vector<int> order_;
};

class HillClimber final : public SearchAlgorithm {
 public:
  HillClimber(NeighborhoodRelation n, std::uint64_t seed)
      : n_(std::move(n)), seed_(seed) {
    n_.validate();
  }
  std::string name() const override {
    return "hill:" + n_.name + ":" + std::to_string(seed_);
  }
  int next_point(const Trace& trace, int space_size) override {
    if (space_size != n_.size)
      throw ContractViolation(name() + " built for a different space size");
    if (trace.pairs.empty())
      return static_cast<int>(SplitMix64(seed_).below(space_size));
    // anchor: minimum-cost visited point, earliest visit on ties
    int anchor = trace.pairs.front().point;
    int best_cost = trace.pairs.front().cost;
    for (const auto& pc : trace.pairs)
      if (pc.cost < best_cost) {
        best_cost = pc.cost;
        anchor = pc.point;
      }
    for (int j : n_.adjacency[anchor])
      if (!trace.visited(j)) return j;
    return lowest_unvisited(trace, space_size);
  }

 private:
  NeighborhoodRelation n_;
  std::uint64_t seed_;
};

class MinSoFar final : public PerformanceMeasure {
 public:
  std::string name() const override { return "min-so-far"; }
  Rational evaluate(const CostDomain& domain,
                    const std::vector<int>& costs) const override {
    if (costs.empty()) throw ContractViolation("measure applied to empty sequence");
    return domain.values[*std::min_element(costs.begin(), costs.end())];
  }
};

class ValueAtEnd final : public PerformanceMeasure {
 public:
  std::string name() const override { return "value-at-end"; }
  Rational evaluate(const CostDomain& domain,
                    const std::vector<int>& costs) const override {
    if (costs.empty()) throw ContractViolation("measure applied to empty sequence");
    return domain.values[costs.back()];
  }
};

class SequenceIndicator final : public PerformanceMeasure {
 public:
  explicit SequenceIndicator(std::vector<int> target) : target_(std::move(target)) {}
  std::string name() const override {
    std::ostringstream os;
    os << "indicator:";
    for (std::size_t i = 0; i < target_.size(); ++i) os << (i ? "-" : "") << target_[i];
    return os.str();
  }
  Rational evaluate(const CostDomain&,
                    const std::vector<int>& costs) const override {
    if (costs.empty()) throw ContractViolation("measure applied to empty sequence");
    return costs == target_ ? 1 : 0;
  }

 private:
  std::vector<int> target_;
};

class RepeatRandom final : public RepeatingHeuristic {
 public:
  explicit RepeatRandom(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "randrep:" + std::to_string(seed_); }
  void reset() override { rng_ = SplitMix64(seed_); }
  int propose(const Trace&, const std::vector<PointCost>&, int space_size) override {
    return static_cast<int>(rng_.below(space_size));
  }

 private:
  std::uint64_t seed_;
  SplitMix64 rng_;
};

class RepeatConst final : public RepeatingHeuristic {
 public:
  explicit RepeatConst(int point) : point_(point) {}
  std::string name() const override { return "const:" + std::to_string(point_); }
  int propose(const Trace&, const std::vector<PointCost>&, int) override {
    return point_;
  }

 private:
  int point_;
};

class AlgorithmAsHeuristic final : public RepeatingHeuristic {
 public:
  explicit AlgorithmAsHeuristic(std::unique_ptr<SearchAlgorithm> inner)
      : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name(); }
  void reset() override { inner_->reset(); }
  int propose(const Trace& evaluated, const std::vector<PointCost>&,
              int space_size) override {
    return inner_->next_point(evaluated, space_size);
  }

 private:
  std::unique_ptr<SearchAlgorithm> inner_;
};

class Memoized final : public SearchAlgorithm {
 public:
  explicit Memoized(std::unique_ptr<RepeatingHeuristic> h) : h_(std::move(h)) {}
  std::string name() const override { return "memo:" + h_->name(); }
  void reset() override {
    h_->reset();
    lookups_.clear();
  }
  int next_point(const Trace& trace, int space_size) override {
    const long long budget = static_cast<long long>(space_size) * 64;
    for (long long attempt = 0; attempt < budget; ++attempt) {
      const int p = h_->propose(trace, lookups_, space_size);
      if (p < 0 || p >= space_size)
        throw ContractViolation("heuristic " + h_->name() +
                                " proposed an out-of-range point");
      int recorded = -1;
      for (const auto& pc : trace.pairs)
        if (pc.point == p) {
          recorded = pc.cost;
          break;
        }
      if (recorded < 0) return p;
      lookups_.push_back(PointCost{p, recorded});  // served from the database
    }
    return lowest_unvisited(trace, space_size);
  }

 private:
  std::unique_ptr<RepeatingHeuristic> h_;
  std::vector<PointCost> lookups_;
};

}  // namespace

std::unique_ptr<PerformanceMeasure> make_measure_min_so_far() {
  return std::make_unique<MinSoFar>();
}

std::unique_ptr<PerformanceMeasure> make_measure_value_at_end() {
  return std::make_unique<ValueAtEnd>();
}

std::unique_ptr<PerformanceMeasure> make_measure_sequence_indicator(
    std::vector<int> target) {
  return std::make_unique<SequenceIndicator>(std::move(target));
}

std::unique_ptr<SearchAlgorithm> make_lexicographic() {
  return std::make_unique<Lexicographic>();
}

std::unique_ptr<SearchAlgorithm> make_order_driven(Permutation pi) {
  return std::make_unique<OrderDriven>(std::move(pi));
}

std::unique_ptr<SearchAlgorithm> make_seeded_random(std::uint64_t seed) {
  return std::make_unique<SeededRandom>(seed);
}

std::unique_ptr<SearchAlgorithm> make_hill_climber(NeighborhoodRelation n,
                                                   std::uint64_t seed) {
  return std::make_unique<HillClimber>(std::move(n), seed);
}

std::unique_ptr<RepeatingHeuristic> make_repeat_random(std::uint64_t seed) {
  return std::make_unique<RepeatRandom>(seed);
}

std::unique_ptr<RepeatingHeuristic> make_repeat_const(int point) {
  return std::make_unique<RepeatConst>(point);
}

std::unique_ptr<RepeatingHeuristic> as_repeating(
    std::unique_ptr<SearchAlgorithm> inner) {
  return std::make_unique<AlgorithmAsHeuristic>(std::move(inner));
}

std::unique_ptr<SearchAlgorithm> memoize(std::unique_ptr<RepeatingHeuristic> h) {
  return std::make_unique<Memoized>(std::move(h));
}

std::uint64_t SeedPool::take() {
  if (seeds.empty()) seeds = {1, 2, 3, 4, 5};
  std::uint64_t s = seeds[next % seeds.size()];
  ++next;
  return s;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw InputError("malformed integer: " + text);
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed integer: " + text);
  }
}

Permutation parse_order_images(const std::string& payload, int space_size) {
  if (payload == "identity") return Permutation::identity(space_size);
  if (payload == "reverse") return Permutation::reversal(space_size);
  if (payload == "swap01") {
    if (space_size < 2) throw InputError("swap01 needs |X| >= 2");
    return Permutation::transposition(space_size, 0, 1);
  }
  std::vector<int> image;
  if (payload.find('-') != std::string::npos) {
    for (const auto& part : split(payload, '-')) {
      if (part.empty()) throw InputError("malformed order image list: " + payload);
      image.push_back(parse_int(part));
    }
  } else {
    for (char c : payload) {
      if (c < '0' || c > '9')
        throw InputError("malformed order image list: " + payload);
      image.push_back(c - '0');
    }
  }
  if (static_cast<int>(image.size()) != space_size)
    throw InputError("order image list does not match space size " +
                     std::to_string(space_size));
  return Permutation::from_image(std::move(image));
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(text, &used);
    if (used != text.size()) throw InputError("malformed seed: " + text);
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed seed: " + text);
  }
}

NeighborhoodRelation named_neighborhood(const std::string& name, int space_size) {
  if (name == "auto") return make_auto(space_size);
  if (name == "hypercube") {
    if (space_size < 2 || (space_size & (space_size - 1)) != 0)
      throw InputError("hypercube neighborhood needs a power-of-two space");
    int ell = 0;
    while ((1 << ell) < space_size) ++ell;
    return make_hypercube(ell);
  }
  if (name == "ring") return make_ring(space_size);
  throw InputError("unknown neighborhood name: " + name);
}

std::unique_ptr<SearchAlgorithm> parse_entry(const std::string& entry,
                                             int space_size, SeedPool& seeds) {
  const auto colon = entry.find(':');
  const std::string kind = entry.substr(0, colon);
  const std::string payload =
      colon == std::string::npos ? "" : entry.substr(colon + 1);

  if (kind == "lex") {
    if (!payload.empty()) throw InputError("lex takes no arguments");
    return make_lexicographic();
  }
  if (kind == "order") {
    if (payload.empty()) throw InputError("order needs an image list");
    return make_order_driven(parse_order_images(payload, space_size));
  }
  if (kind == "rand") {
    return make_seeded_random(payload.empty() ? seeds.take() : parse_seed(payload));
  }
  if (kind == "hill") {
    auto parts = payload.empty() ? std::vector<std::string>{}
                                 : split(payload, ':');
    std::string nbhd = parts.empty() || parts[0].empty() ? "auto" : parts[0];
    std::uint64_t seed = parts.size() > 1 ? parse_seed(parts[1]) : seeds.take();
    if (parts.size() > 2) throw InputError("malformed hill entry: " + entry);
    return make_hill_climber(named_neighborhood(nbhd, space_size), seed);
  }
  if (kind == "memo") {
    if (payload.empty()) throw InputError("memo needs an inner entry");
    const auto inner_colon = payload.find(':');
    const std::string inner_kind = payload.substr(0, inner_colon);
    const std::string inner_payload =
        inner_colon == std::string::npos ? "" : payload.substr(inner_colon + 1);
    if (inner_kind == "randrep") {
      std::uint64_t seed =
          inner_payload.empty() ? seeds.take() : parse_seed(inner_payload);
      return memoize(make_repeat_random(seed));
    }
    if (inner_kind == "const") {
      if (inner_payload.empty()) throw InputError("const needs a point index");
      return memoize(make_repeat_const(parse_int(inner_payload)));
    }
    return memoize(as_repeating(parse_entry(payload, space_size, seeds)));
  }
  throw InputError("unknown algorithm entry: " + entry);
}

}  // namespace

Family parse_family(const std::string& spec, int space_size, SeedPool& seeds) {
  if (spec == "default" || spec.empty()) return default_family(space_size, seeds);
  Family family;
  for (const auto& entry : split(spec, ',')) {
    if (entry.empty()) throw InputError("empty family entry");
    family.push_back(parse_entry(entry, space_size, seeds));
  }
  if (family.empty()) throw InputError("family must contain at least one algorithm");
  return family;
}

Family default_family(int space_size, SeedPool& seeds) {
  Family family;
  family.push_back(make_lexicographic());
  family.push_back(make_order_driven(Permutation::reversal(space_size)));
  if (space_size >= 2)
    family.push_back(
        make_order_driven(Permutation::transposition(space_size, 0, 1)));
  family.push_back(make_seeded_random(seeds.take()));
  family.push_back(make_seeded_random(seeds.take()));
  family.push_back(make_hill_climber(make_auto(space_size), seeds.take()));
  family.push_back(memoize(make_repeat_random(seeds.take())));
  return family;
}

}  // namespace nflab
