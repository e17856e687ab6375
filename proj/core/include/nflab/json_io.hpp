#ifndef NFLAB_JSON_IO_HPP
#define NFLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include "nflab/function_space.hpp"
#include "nflab/neighborhood.hpp"

namespace nflab {

// Function-set document:
//   { "domain_size": int, "codomain": ["p/q", ...],
//     "functions": [[cost-index, ...], ...], "labels": [string, ...]? }
// Malformed JSON raises InputError with a line-anchored message.
FunctionSet parse_function_set_json(const std::string& text);
std::string function_set_to_json(const FunctionSet& set);

// Probability vector { "weights": ["p/q", ...] } aligned with the
// canonical lexicographic enumeration of the full function space.
std::vector<Rational> parse_weights_json(const std::string& text);

// Neighborhood document:
//   { "type": "hypercube"|"ring"|"custom", "param": int }
//   { "type": "custom", "size": int?, "edges": [[i, j], ...] }
NeighborhoodRelation parse_neighborhood_json(const std::string& text);
std::string neighborhood_to_json(const NeighborhoodRelation& n);

}  // namespace nflab

#endif
