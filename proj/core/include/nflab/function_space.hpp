#ifndef NFLAB_FUNCTION_SPACE_HPP
#define NFLAB_FUNCTION_SPACE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nflab/errors.hpp"
#include "nflab/guards.hpp"
#include "nflab/rational.hpp"

namespace nflab {

// Points are canonical indices 0..size-1. Labels are display-only; a
// bit-string space of length ell gets labels in standard binary order
// (most significant bit first).
struct SearchSpace {
  int size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` unique strings

  static SearchSpace indexed(int n);
  static SearchSpace bitstrings(int ell);
  void validate() const;
};

// Strictly ascending exact cost values; functions reference them by index.
struct CostDomain {
  std::vector<Rational> values;

  static CostDomain boolean();        // {0, 1}
  static CostDomain integer_range(int k);  // {0, 1, ..., k-1}
  int size() const { return static_cast<int>(values.size()); }
  void validate() const;
};

// Total value table: table[i] is the cost index of point i.
struct ObjectiveFunction {
  std::vector<int> table;
  int codomain_size = 0;

  int space_size() const { return static_cast<int>(table.size()); }
  void validate() const;
  bool operator==(const ObjectiveFunction&) const = default;
};

// Multiplicity of each cost value; counts sum to |X|.
struct Histogram {
  std::vector<long long> counts;

  long long total() const;
  auto operator<=>(const Histogram&) const = default;
};

struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  static Permutation reversal(int n);
  static Permutation transposition(int n, int i, int j);
  static Permutation cycle_left(int n);  // image (1, 2, ..., n-1, 0)
  static Permutation from_image(std::vector<int> image);

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[i]; }
  Permutation inverse() const;
  void validate() const;
  bool operator==(const Permutation&) const = default;
};

// Deduplicated set of value tables over one space/domain, kept in
// lexicographic table order so equality and reports are deterministic.
struct FunctionSet {
  SearchSpace space;
  CostDomain domain;
  std::vector<std::vector<int>> tables;

  std::size_t size() const { return tables.size(); }
  bool contains(const std::vector<int>& table) const;
  ObjectiveFunction function(std::size_t i) const;
  void validate() const;
  bool operator==(const FunctionSet& o) const {
    return space.size == o.space.size && domain.values == o.domain.values &&
           tables == o.tables;
  }
};

FunctionSet make_function_set(SearchSpace space, CostDomain domain,
                              std::vector<std::vector<int>> tables);

// witness for a failed closure check: f is in the set, f∘pi is not.
struct CupWitness {
  std::vector<int> function_table;   // f
  Permutation pi;
  std::vector<int> missing_table;    // f∘pi
};

struct CupCheck {
  bool cup = false;
  std::optional<CupWitness> witness;
};

struct NotClosed : Error {
  NotClosed(const std::string& msg, CupWitness w)
      : Error(msg), witness(std::move(w)) {}
  CupWitness witness;
};

struct BasisClass {
  Histogram histogram;
  FunctionSet members;
};

Histogram histogram_of(const ObjectiveFunction& f);

// (f∘pi)(x) = f(pi(x)); histogram is preserved.
ObjectiveFunction compose(const ObjectiveFunction& f, const Permutation& pi);

// |X|! / prod_y h(y)!  -- the exact size of the basis class B_h.
BigInt orbit_size(const Histogram& h);

// All distinct rearrangements of `table`, ascending lexicographic.
// Cost is proportional to the orbit size, not |X|!.
std::vector<std::vector<int>> orbit_tables(const std::vector<int>& table,
                                           const Guards& guards = {});

FunctionSet orbit_of(const ObjectiveFunction& f, const SearchSpace& space,
                     const CostDomain& domain, const Guards& guards = {});

CupCheck is_cup(const FunctionSet& set, const Guards& guards = {});

// Smallest c.u.p. superset: the union of the orbits of all members.
FunctionSet closure(const FunctionSet& set, const Guards& guards = {});

// Partition of a c.u.p. set into whole basis classes, keyed by histogram.
// Throws NotClosed (with witness) if the set is not c.u.p.
std::vector<BasisClass> decompose_basis_classes(const FunctionSet& set,
                                                const Guards& guards = {});

// Position of a table in the canonical lexicographic enumeration of the
// full function space (table[0] is the most significant digit).
std::uint64_t canonical_index(const std::vector<int>& table, int codomain_size);
std::vector<int> table_at(std::uint64_t index, int space_size, int codomain_size);

// y^x as a big integer (used by guard checks and counting).
BigInt function_space_size(int space_size, int codomain_size);

// Restartable stream over all |Y|^|X| tables in lexicographic order.
class FunctionEnumerator {
 public:
  FunctionEnumerator(int space_size, int codomain_size, const Guards& guards = {});
  bool next(std::vector<int>& table);
  void reset();
  std::uint64_t total() const { return total_; }

 private:
  int space_size_;
  int codomain_size_;
  std::uint64_t total_;
  std::vector<int> current_;
  bool done_ = false;
  bool started_ = false;
};

// Restartable stream over all histograms (C(|X|+|Y|-1, |X|) of them),
// ascending lexicographic on the counts vector.
class HistogramEnumerator {
 public:
  HistogramEnumerator(int space_size, int codomain_size);
  bool next(Histogram& h);
  void reset();

 private:
  int space_size_;
  int codomain_size_;
  std::vector<long long> current_;
  bool done_ = false;
  bool started_ = false;
};

FunctionSet all_functions(const SearchSpace& space, const CostDomain& domain,
                          const Guards& guards = {});

// First table (ascending values) with the given histogram.
std::vector<int> representative_table(const Histogram& h);

// The permutation mapping f onto g (f∘pi = g); both tables must share a
// histogram. Deterministic: positions are matched in index order.
Permutation mapping_permutation(const std::vector<int>& f,
                                const std::vector<int>& g);

}  // namespace nflab

#endif
