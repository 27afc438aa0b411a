#include "rotset/interlacing_graph.hpp"

#include <algorithm>

namespace rotset {

int InterlacingGraph::max_clique_size() const {
  int best = 0;
  for (const auto& [size, cliques] : cliques_by_size) {
    if (!cliques.empty()) best = std::max(best, size);
  }
  return best;
}

InterlacingGraph build_graph(int d, const RotationNumber& rot) {
  InterlacingGraph graph;
  graph.degree = d;
  graph.rotation = rot;
  graph.vertices = enumerate_rep_sequences(d, rot.q);
  int count = static_cast<int>(graph.vertices.size());

  graph.adjacency.assign(count, std::vector<bool>(count, false));
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (can_interlace({graph.vertices[u], graph.vertices[v]})) {
        graph.adjacency[u][v] = graph.adjacency[v][u] = true;
        graph.edges.emplace_back(u, v);
      }
    }
  }

  // Cliques by ordered extension; processing order keeps each size list in
  // lexicographic order of index tuples.
  auto& cliques = graph.cliques_by_size;
  cliques[1] = {};
  for (int v = 0; v < count; ++v) cliques[1].push_back({v});
  for (int k = 2; k <= d; ++k) {
    std::vector<std::vector<int>> extended;
    for (const auto& clique : cliques[k - 1]) {
      for (int u = clique.back() + 1; u < count; ++u) {
        bool joined = true;
        for (int w : clique) {
          if (!graph.adjacency[w][u]) {
            joined = false;
            break;
          }
        }
        if (joined) {
          auto next = clique;
          next.push_back(u);
          extended.push_back(std::move(next));
        }
      }
    }
    if (k == d) {
      // Probe one size past the ceiling: no d mutually interlaceable orbits exist.
      if (!extended.empty()) {
        fail(ErrorKind::InternalError, "found a clique of size d, exceeding the d-1 bound");
      }
      break;
    }
    cliques[k] = std::move(extended);
  }

  // Never trust pairwise checks alone: re-verify every clique jointly.
  for (const auto& [size, list] : cliques) {
    if (size < 2) continue;
    for (const auto& clique : list) {
      std::vector<RepSequence> reps;
      reps.reserve(clique.size());
      for (int v : clique) reps.push_back(graph.vertices[v]);
      if (!can_interlace(reps)) {
        fail(ErrorKind::InternalError, "recorded clique is not jointly interlaceable");
      }
    }
  }
  return graph;
}

std::vector<RotationalSet> enumerate_sets(int d, const RotationNumber& rot, int k) {
  if (k < 1 || k > d - 1) {
    fail(ErrorKind::InvalidArgument,
         "orbit count k must satisfy 1 <= k <= d-1, got " + std::to_string(k));
  }
  InterlacingGraph graph = build_graph(d, rot);
  std::vector<RotationalSet> sets;
  const auto& cliques = graph.cliques_by_size.at(k);
  sets.reserve(cliques.size());
  for (const auto& clique : cliques) {
    std::vector<RepSequence> reps;
    reps.reserve(clique.size());
    for (int v : clique) reps.push_back(graph.vertices[v]);
    sets.push_back(set_from_reps(reps, rot));
  }
  return sets;
}

}  // namespace rotset
