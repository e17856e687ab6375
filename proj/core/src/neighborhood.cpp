#include "nflab/neighborhood.hpp"

#include <algorithm>
#include <set>

namespace nflab {

bool NeighborhoodRelation::neighbors(int i, int j) const {
  if (i == j) return false;
  const auto& adj = adjacency[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<std::pair<int, int>> NeighborhoodRelation::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size; ++i)
    for (int j : adjacency[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

void NeighborhoodRelation::validate() const {
  if (size < 1) throw InputError("neighborhood size must be >= 1");
  if (static_cast<int>(adjacency.size()) != size)
    throw InputError("adjacency list count does not match size");
  for (int i = 0; i < size; ++i) {
    for (int j : adjacency[i]) {
      if (j < 0 || j >= size) throw InputError("neighbor index out of range");
      if (j == i) throw InputError("neighborhood relation must be irreflexive");
      if (!std::binary_search(adjacency[j].begin(), adjacency[j].end(), i))
        throw InputError("neighborhood relation must be symmetric");
    }
    if (!std::is_sorted(adjacency[i].begin(), adjacency[i].end()))
      throw InputError("adjacency lists must be sorted");
  }
}

NeighborhoodRelation make_hypercube(int ell) {
  if (ell < 1 || ell >= 20) throw InputError("hypercube dimension out of range");
  const int n = 1 << ell;
  NeighborhoodRelation rel;
  rel.size = n;
  rel.name = "hypercube" + std::to_string(ell);
  rel.adjacency.resize(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < ell; ++b) rel.adjacency[v].push_back(v ^ (1 << b));
  for (auto& adj : rel.adjacency) std::sort(adj.begin(), adj.end());
  rel.validate();
  return rel;
}

NeighborhoodRelation make_ring(int size) {
  if (size < 3) throw InputError("ring needs at least 3 points");
  NeighborhoodRelation rel;
  rel.size = size;
  rel.name = "ring" + std::to_string(size);
  rel.adjacency.resize(size);
  for (int i = 0; i < size; ++i) {
    rel.adjacency[i].push_back((i + 1) % size);
    rel.adjacency[i].push_back((i + size - 1) % size);
    std::sort(rel.adjacency[i].begin(), rel.adjacency[i].end());
    rel.adjacency[i].erase(
        std::unique(rel.adjacency[i].begin(), rel.adjacency[i].end()),
        rel.adjacency[i].end());
  }
  rel.validate();
  return rel;
}

NeighborhoodRelation make_custom(int size, std::vector<std::pair<int, int>> edges,
                                 std::string name) {
  if (size < 1) throw InputError("neighborhood size must be >= 1");
  NeighborhoodRelation rel;
  rel.size = size;
  rel.name = std::move(name);
  rel.adjacency.resize(size);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("self-edges are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) continue;
    rel.adjacency[a].push_back(b);
    rel.adjacency[b].push_back(a);
  }
  for (auto& adj : rel.adjacency) std::sort(adj.begin(), adj.end());
  rel.validate();
  return rel;
}

NeighborhoodRelation make_auto(int size) {
  if (size < 1) throw InputError("neighborhood size must be >= 1");
  if (size == 1) return make_custom(1, {}, "empty1");
  if ((size & (size - 1)) == 0) {
    int ell = 0;
    while ((1 << ell) < size) ++ell;
    return make_hypercube(ell);
  }
  return make_ring(size);
}

bool is_nontrivial(const NeighborhoodRelation& n) {
  bool some_edge = false;
  bool some_non_edge = false;
  for (int i = 0; i < n.size && !(some_edge && some_non_edge); ++i)
    for (int j = i + 1; j < n.size; ++j)
      (n.neighbors(i, j) ? some_edge : some_non_edge) = true;
  return some_edge && some_non_edge;
}

bool breaks_edge_set(const NeighborhoodRelation& n, const Permutation& pi) {
  for (int i = 0; i < n.size; ++i)
    for (int j = i + 1; j < n.size; ++j)
      if (n.neighbors(i, j) != n.neighbors(pi(i), pi(j))) return true;
  return false;
}

Permutation find_noninvariant_permutation(const NeighborhoodRelation& n,
                                          const Guards& guards) {
  if (!is_nontrivial(n))
    throw NoWitness("trivial neighborhood relations are permutation-invariant");
  for (int i = 0; i < n.size; ++i)
    for (int j = i + 1; j < n.size; ++j) {
      Permutation pi = Permutation::transposition(n.size, i, j);
      if (breaks_edge_set(n, pi)) return pi;
    }
  // A non-trivial relation always breaks under some transposition (the
  // transpositions generate the full symmetric group), so this fallback is
  // for guard-sized completeness only.
  if (n.size > guards.max_space)
    throw GuardExceeded("permutation scan exceeds space guard");
  std::vector<int> image(n.size);
  for (int i = 0; i < n.size; ++i) image[i] = i;
  while (std::next_permutation(image.begin(), image.end())) {
    Permutation pi = Permutation::from_image(image);
    if (breaks_edge_set(n, pi)) return pi;
  }
  throw NoWitness("no permutation breaks the edge set");
}

}  // namespace nflab
