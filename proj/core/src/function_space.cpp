#include "nflab/function_space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nflab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

SearchSpace SearchSpace::indexed(int n) {
  require(n >= 1, "search space size must be >= 1");
  SearchSpace s;
  s.size = n;
  return s;
}

SearchSpace SearchSpace::bitstrings(int ell) {
  require(ell >= 1 && ell < 20, "bit-string length out of range");
  SearchSpace s;
  s.size = 1 << ell;
  s.labels.reserve(s.size);
  for (int v = 0; v < s.size; ++v) {
    std::string bits(ell, '0');
    for (int b = 0; b < ell; ++b)
      if (v & (1 << (ell - 1 - b))) bits[b] = '1';
    s.labels.push_back(bits);
  }
  return s;
}

void SearchSpace::validate() const {
  require(size >= 1, "search space size must be >= 1");
  if (!labels.empty()) {
    require(static_cast<int>(labels.size()) == size,
            "label count does not match space size");
    std::set<std::string> seen(labels.begin(), labels.end());
    require(static_cast<int>(seen.size()) == size, "labels are not unique");
  }
}

CostDomain CostDomain::boolean() { return integer_range(2); }

CostDomain CostDomain::integer_range(int k) {
  require(k >= 1, "cost domain size must be >= 1");
  CostDomain d;
  d.values.reserve(k);
  for (int i = 0; i < k; ++i) d.values.emplace_back(i);
  return d;
}

void CostDomain::validate() const {
  require(!values.empty(), "cost domain must be non-empty");
  for (std::size_t i = 1; i < values.size(); ++i)
    require(values[i - 1] < values[i], "cost values must be strictly ascending");
}

void ObjectiveFunction::validate() const {
  require(!table.empty(), "objective function table must be non-empty");
  require(codomain_size >= 1, "codomain size must be >= 1");
  for (int v : table)
    require(v >= 0 && v < codomain_size, "table entry out of codomain range");
}

long long Histogram::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = n - 1 - i;
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  require(i >= 0 && i < n && j >= 0 && j < n, "transposition index out of range");
  std::swap(p.image[i], p.image[j]);
  return p;
}

Permutation Permutation::cycle_left(int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = (i + 1) % n;
  return p;
}

Permutation Permutation::from_image(std::vector<int> image) {
  Permutation p;
  p.image = std::move(image);
  p.validate();
  return p;
}

void Permutation::validate() const {
  const int n = size();
  require(n >= 1, "permutation must be non-empty");
  std::vector<char> seen(n, 0);
  for (int v : image) {
    require(v >= 0 && v < n, "permutation image out of range");
    require(!seen[v], "permutation image repeats a value");
    seen[v] = 1;
  }
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(size());
  for (int i = 0; i < size(); ++i) inv.image[image[i]] = i;
  return inv;
}

bool FunctionSet::contains(const std::vector<int>& table) const {
  return std::binary_search(tables.begin(), tables.end(), table);
}

ObjectiveFunction FunctionSet::function(std::size_t i) const {
  return ObjectiveFunction{tables[i], domain.size()};
}

void FunctionSet::validate() const {
  space.validate();
  domain.validate();
  for (const auto& t : tables) {
    require(static_cast<int>(t.size()) == space.size,
            "function table length does not match space size");
    for (int v : t)
      require(v >= 0 && v < domain.size(), "table entry out of codomain range");
  }
  require(std::is_sorted(tables.begin(), tables.end()),
          "function set tables must be sorted");
  require(std::adjacent_find(tables.begin(), tables.end()) == tables.end(),
          "function set contains duplicates");
}

FunctionSet make_function_set(SearchSpace space, CostDomain domain,
                              std::vector<std::vector<int>> tables) {
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  FunctionSet set{std::move(space), std::move(domain), std::move(tables)};
  set.validate();
  return set;
}

Histogram histogram_of(const ObjectiveFunction& f) {
  f.validate();
  Histogram h;
  h.counts.assign(f.codomain_size, 0);
  for (int v : f.table) ++h.counts[v];
  return h;
}

ObjectiveFunction compose(const ObjectiveFunction& f, const Permutation& pi) {
  if (pi.size() != f.space_size())
    throw InputError("permutation size does not match function domain");
  ObjectiveFunction g;
  g.codomain_size = f.codomain_size;
  g.table.resize(f.table.size());
  for (int i = 0; i < f.space_size(); ++i) g.table[i] = f.table[pi(i)];
  return g;
}

BigInt orbit_size(const Histogram& h) {
  BigInt size = factorial(static_cast<unsigned>(h.total()));
  for (long long c : h.counts)
    if (c > 1) size /= factorial(static_cast<unsigned>(c));
  return size;
}

std::vector<std::vector<int>> orbit_tables(const std::vector<int>& table,
                                           const Guards& guards) {
  std::vector<int> sorted = table;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  std::uint64_t produced = 0;
  do {
    if (++produced > guards.max_orbit)
      throw GuardExceeded("orbit size exceeds guard of " +
                          std::to_string(guards.max_orbit));
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

FunctionSet orbit_of(const ObjectiveFunction& f, const SearchSpace& space,
                     const CostDomain& domain, const Guards& guards) {
  if (f.space_size() > guards.max_space)
    throw GuardExceeded("space size " + std::to_string(f.space_size()) +
                        " exceeds orbit guard of " +
                        std::to_string(guards.max_space));
  FunctionSet set{space, domain, orbit_tables(f.table, guards)};
  set.validate();
  return set;
}

namespace {

// Groups a set's tables by histogram; map order is deterministic.
std::map<Histogram, std::vector<const std::vector<int>*>> group_by_histogram(
    const FunctionSet& set) {
  std::map<Histogram, std::vector<const std::vector<int>*>> groups;
  for (const auto& t : set.tables) {
    Histogram h = histogram_of(ObjectiveFunction{t, set.domain.size()});
    groups[h].push_back(&t);
  }
  return groups;
}

// First table with histogram h (ascending) that is missing from `set`.
std::vector<int> first_missing_table(const Histogram& h, const FunctionSet& set,
                                     const Guards& guards) {
  std::vector<int> t = representative_table(h);
  std::uint64_t scanned = 0;
  do {
    if (++scanned > guards.max_orbit)
      throw GuardExceeded("witness search exceeds orbit guard");
    if (!set.contains(t)) return t;
  } while (std::next_permutation(t.begin(), t.end()));
  throw Error("internal: no missing table in a deficient basis class");
}

}  // namespace

std::vector<int> representative_table(const Histogram& h) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(h.total()));
  for (std::size_t y = 0; y < h.counts.size(); ++y)
    t.insert(t.end(), static_cast<std::size_t>(h.counts[y]), static_cast<int>(y));
  return t;
}

Permutation mapping_permutation(const std::vector<int>& f,
                                const std::vector<int>& g) {
  const int n = static_cast<int>(f.size());
  if (g.size() != f.size())
    throw InputError("tables of different length cannot be mapped");
  // pos[y] = unconsumed positions of value y in f, ascending.
  std::map<int, std::vector<int>> pos;
  for (int i = n - 1; i >= 0; --i) pos[f[i]].push_back(i);
  Permutation pi;
  pi.image.resize(n);
  for (int i = 0; i < n; ++i) {
    auto it = pos.find(g[i]);
    if (it == pos.end() || it->second.empty())
      throw InputError("tables do not share a histogram");
    pi.image[i] = it->second.back();
    it->second.pop_back();
  }
  pi.validate();
  return pi;
}

CupCheck is_cup(const FunctionSet& set, const Guards& guards) {
  if (set.tables.empty()) throw InputError("c.u.p. check requires a non-empty set");
  auto groups = group_by_histogram(set);
  for (const auto& [h, members] : groups) {
    if (BigInt(members.size()) == orbit_size(h)) continue;
    // Deficient class: produce a witness (f, pi) with f∘pi outside the set.
    const std::vector<int>& f = *members.front();
    std::vector<int> g = first_missing_table(h, set, guards);
    Permutation pi = mapping_permutation(f, g);
    ObjectiveFunction composed =
        compose(ObjectiveFunction{f, set.domain.size()}, pi);
    if (composed.table != g) throw Error("internal: witness construction failed");
    return CupCheck{false, CupWitness{f, std::move(pi), std::move(g)}};
  }
  return CupCheck{true, std::nullopt};
}

FunctionSet closure(const FunctionSet& set, const Guards& guards) {
  if (set.tables.empty()) throw InputError("closure requires a non-empty set");
  if (set.space.size > guards.max_space)
    throw GuardExceeded("space size exceeds orbit guard");
  std::set<Histogram> seen;
  std::vector<std::vector<int>> closed;
  for (const auto& t : set.tables) {
    Histogram h = histogram_of(ObjectiveFunction{t, set.domain.size()});
    if (!seen.insert(h).second) continue;
    auto orbit = orbit_tables(t, guards);
    closed.insert(closed.end(), orbit.begin(), orbit.end());
  }
  return make_function_set(set.space, set.domain, std::move(closed));
}

std::vector<BasisClass> decompose_basis_classes(const FunctionSet& set,
                                                const Guards& guards) {
  CupCheck check = is_cup(set, guards);
  if (!check.cup)
    throw NotClosed("set is not closed under permutation", *check.witness);
  std::vector<BasisClass> classes;
  auto groups = group_by_histogram(set);
  for (auto& [h, members] : groups) {
    std::vector<std::vector<int>> tables;
    tables.reserve(members.size());
    for (const auto* t : members) tables.push_back(*t);
    classes.push_back(
        BasisClass{h, make_function_set(set.space, set.domain, std::move(tables))});
  }
  return classes;
}

std::uint64_t canonical_index(const std::vector<int>& table, int codomain_size) {
  std::uint64_t idx = 0;
  for (int v : table) idx = idx * static_cast<std::uint64_t>(codomain_size) +
                            static_cast<std::uint64_t>(v);
  return idx;
}

std::vector<int> table_at(std::uint64_t index, int space_size, int codomain_size) {
  std::vector<int> t(space_size, 0);
  for (int i = space_size - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % static_cast<std::uint64_t>(codomain_size));
    index /= static_cast<std::uint64_t>(codomain_size);
  }
  return t;
}

BigInt function_space_size(int space_size, int codomain_size) {
  BigInt n = 1;
  for (int i = 0; i < space_size; ++i) n *= codomain_size;
  return n;
}

FunctionEnumerator::FunctionEnumerator(int space_size, int codomain_size,
                                       const Guards& guards)
    : space_size_(space_size), codomain_size_(codomain_size) {
  BigInt count = function_space_size(space_size, codomain_size);
  if (count > guards.max_exact)
    throw GuardExceeded("function space of size " + count.str() +
                        " exceeds enumeration guard of " +
                        std::to_string(guards.max_exact));
  total_ = static_cast<std::uint64_t>(count);
  reset();
}

void FunctionEnumerator::reset() {
  current_.assign(space_size_, 0);
  started_ = false;
  done_ = false;
}

bool FunctionEnumerator::next(std::vector<int>& table) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    table = current_;
    return true;
  }
  // odometer increment, last position fastest
  for (int i = space_size_ - 1; i >= 0; --i) {
    if (++current_[i] < codomain_size_) {
      table = current_;
      return true;
    }
    current_[i] = 0;
  }
  done_ = true;
  return false;
}

HistogramEnumerator::HistogramEnumerator(int space_size, int codomain_size)
    : space_size_(space_size), codomain_size_(codomain_size) {
  reset();
}

void HistogramEnumerator::reset() {
  current_.assign(codomain_size_, 0);
  current_.back() = space_size_;
  started_ = false;
  done_ = false;
}

bool HistogramEnumerator::next(Histogram& h) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    h.counts = current_;
    return true;
  }
  // lexicographic successor: bump the rightmost position that still has
  // mass to its right, then push the remainder all the way right.
  const int y = codomain_size_;
  long long suffix = 0;
  for (int i = y - 1; i >= 1; --i) {
    suffix += current_[i];
    if (suffix > 0 && i - 1 >= 0) {
      // try to increment position i-1
      ++current_[i - 1];
      for (int j = i; j < y; ++j) current_[j] = 0;
      current_[y - 1] = suffix - 1;
      h.counts = current_;
      return true;
    }
  }
  done_ = true;
  return false;
}

FunctionSet all_functions(const SearchSpace& space, const CostDomain& domain,
                          const Guards& guards) {
  FunctionEnumerator en(space.size, domain.size(), guards);
  std::vector<std::vector<int>> tables;
  tables.reserve(en.total());
  std::vector<int> t;
  while (en.next(t)) tables.push_back(t);
  return FunctionSet{space, domain, std::move(tables)};
}

}  // namespace nflab
