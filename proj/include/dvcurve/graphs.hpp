#ifndef DVCURVE_GRAPHS_HPP
#define DVCURVE_GRAPHS_HPP

#include <string>
#include <vector>

#include "dvcurve/errors.hpp"

namespace dvcurve {

// Bipartite reduction multigraph: P-vertices are the marked closed points,
// U-vertices the components of their complement, edges the branches.
struct ReductionGraph {
  struct Edge {
    int p;  // index into p_labels
    int u;  // index into u_labels
    std::string branch;
  };

  std::vector<std::string> p_labels;
  std::vector<std::string> u_labels;
  std::vector<Edge> edges;

  int vertex_count() const {
    return static_cast<int>(p_labels.size() + u_labels.size());
  }
  // Global vertex ids: P-vertices first, then U-vertices.
  int p_vertex(int i) const { return i; }
  int u_vertex(int i) const { return static_cast<int>(p_labels.size()) + i; }

  bool is_connected() const;
};

// Spanning-tree data: tree built breadth-first from the lowest-index
// P-vertex with edges scanned in input order, chords in input order.
struct CycleBasisData {
  std::vector<int> tree_edges;   // edge indices
  std::vector<int> chords;       // edge indices, basis of H_1
  int rank = 0;                  // |E| - |V| + 1
};

CycleBasisData cycle_rank(const ReductionGraph& g);

inline bool is_tree(const ReductionGraph& g) { return cycle_rank(g).rank == 0; }

// H_1 coordinate vectors of the two-vertex loops (unordered pairs of
// parallel edges): +1 on a chord traversed P->U, -1 traversed U->P, 0 on
// tree edges.  Every returned vector is nonzero.
struct TwoCycle {
  int edge_a;
  int edge_b;
  std::vector<long long> image;  // in Z^rank
};
std::vector<TwoCycle> two_cycle_images(const ReductionGraph& g,
                                       const CycleBasisData& basis);

// Smallest n >= 2 such that no image lies in n*Z^r, i.e. n divides no
// gcd of coordinates.  Errors: EmptyInput, RankZero.
int choose_n(const std::vector<std::vector<long long>>& images);

// Finite abelian cover built from voltages in (Z/n)^r: tree edges carry 0,
// chord i carries the i-th unit vector; vertices are (base vertex, group
// element) pairs.  rank 0 or n <= 1 yields the trivial cover.
struct GraphCover {
  struct Vertex {
    int base_vertex;             // global vertex id in the base
    std::vector<int> group_elem; // element of (Z/n)^r
  };
  struct Edge {
    int base_edge;  // index into base.edges
    int from;       // cover vertex index (the P-side copy)
    int to;         // cover vertex index (the U-side copy)
  };

  ReductionGraph base;
  int n = 1;
  int rank = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int degree() const;  // n^rank
};

GraphCover build_abelian_cover(const ReductionGraph& g, const CycleBasisData& basis,
                               int n);

struct CoverReport {
  bool star_bijection = false;
  bool bipartite = false;
  bool connected = false;
  bool no_parallel_edges = false;
  bool all_pass() const {
    return star_bijection && bipartite && connected && no_parallel_edges;
  }
};

CoverReport validate_cover(const GraphCover& c);

// Two vertices joined by two parallel edges: the reduction graph of a model
// whose special fiber is a rational nodal curve, marked at the node.
ReductionGraph tate_graph();

std::string to_dot(const ReductionGraph& g);
std::string to_dot(const GraphCover& c);

}  // namespace dvcurve

#endif
