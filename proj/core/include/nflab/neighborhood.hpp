#ifndef NFLAB_NEIGHBORHOOD_HPP
#define NFLAB_NEIGHBORHOOD_HPP

#include <string>
#include <utility>
#include <vector>

#include "nflab/function_space.hpp"
#include "nflab/guards.hpp"

namespace nflab {

// Symmetric, irreflexive adjacency on canonical point indices.
struct NeighborhoodRelation {
  int size = 0;
  std::string name;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

  bool neighbors(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;  // i < j, sorted
  void validate() const;
};

// Bit-strings of length ell, adjacent at Hamming distance 1.
NeighborhoodRelation make_hypercube(int ell);

// i adjacent to (i±1) mod size; needs size >= 3.
NeighborhoodRelation make_ring(int size);

// Symmetrizes and deduplicates the edge list; self-edges are rejected.
NeighborhoodRelation make_custom(int size, std::vector<std::pair<int, int>> edges,
                                 std::string name = "custom");

// hypercube for power-of-two sizes, ring otherwise; size 1 has no edges.
NeighborhoodRelation make_auto(int size);

// Some distinct pair adjacent and some distinct pair not.
bool is_nontrivial(const NeighborhoodRelation& n);

// A permutation that does not preserve the edge set. Tries transpositions
// in lexicographic order first, then all permutations. Throws NoWitness
// for trivial relations (which are invariant under everything).
Permutation find_noninvariant_permutation(const NeighborhoodRelation& n,
                                          const Guards& guards = {});

// Direct check that pi maps some edge to a non-edge or vice versa.
bool breaks_edge_set(const NeighborhoodRelation& n, const Permutation& pi);

}  // namespace nflab

#endif
