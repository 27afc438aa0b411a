#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rotset/construction.hpp"

namespace rotset {

// The interlacing graph for degree d and denominator q: vertices are all rep
// sequences in lexicographic order, edges join pairs whose orbits interlace,
// and k-cliques (k <= d-1) are exactly the rotational sets of k orbits.
struct InterlacingGraph {
  int degree = 2;
  RotationNumber rotation;
  std::vector<RepSequence> vertices;            // lexicographic order
  std::vector<std::pair<int, int>> edges;       // u < v, sorted
  std::map<int, std::vector<std::vector<int>>>
      cliques_by_size;                          // k -> cliques as ascending index lists

  bool adjacent(int u, int v) const { return adjacency[u][v]; }
  int max_clique_size() const;

  std::vector<std::vector<bool>> adjacency;
};

// Builds the graph and enumerates all cliques up to size d-1 by ordered
// extension. Every recorded clique is re-verified jointly with can_interlace,
// and the absence of any d-clique is asserted.
InterlacingGraph build_graph(int d, const RotationNumber& rot);

// All rotational sets of exactly k orbits, one per k-clique, in lexicographic
// order of the sorted rep-sequence lists. Requires 1 <= k <= d-1.
std::vector<RotationalSet> enumerate_sets(int d, const RotationNumber& rot, int k);

}  // namespace rotset
