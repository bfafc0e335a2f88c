#include "dvcurve/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dvcurve {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const ReductionGraph& g) {
  // vertex -> list of (neighbor, edge index), in edge input order
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<size_t>(g.vertex_count()));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int pv = g.p_vertex(g.edges[static_cast<size_t>(e)].p);
    int uv = g.u_vertex(g.edges[static_cast<size_t>(e)].u);
    adj[static_cast<size_t>(pv)].push_back({uv, e});
    adj[static_cast<size_t>(uv)].push_back({pv, e});
  }
  return adj;
}

}  // namespace

bool ReductionGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  auto adj = adjacency(*this);
  std::vector<bool> seen(static_cast<size_t>(vertex_count()), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : adj[static_cast<size_t>(v)]) {
      (void)e;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == vertex_count();
}

CycleBasisData cycle_rank(const ReductionGraph& g) {
  if (g.p_labels.empty())
    fail(ErrorCode::ParseError, "reduction graph needs at least one P-vertex");
  if (!g.is_connected())
    fail(ErrorCode::Disconnected, "reduction graph is not connected");

  auto adj = adjacency(g);
  std::vector<bool> visited(static_cast<size_t>(g.vertex_count()), false);
  std::vector<bool> in_tree(g.edges.size(), false);
  std::queue<int> q;
  q.push(g.p_vertex(0));
  visited[static_cast<size_t>(g.p_vertex(0))] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : adj[static_cast<size_t>(v)]) {
      if (visited[static_cast<size_t>(w)]) continue;
      visited[static_cast<size_t>(w)] = true;
      in_tree[static_cast<size_t>(e)] = true;
      q.push(w);
    }
  }
  CycleBasisData basis;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    (in_tree[static_cast<size_t>(e)] ? basis.tree_edges : basis.chords).push_back(e);
  basis.rank = static_cast<int>(basis.chords.size());
  // Euler identity check for connected graphs
  if (basis.rank != static_cast<int>(g.edges.size()) - g.vertex_count() + 1)
    fail(ErrorCode::Internal, "cycle rank disagrees with Euler identity");
  return basis;
}

std::vector<TwoCycle> two_cycle_images(const ReductionGraph& g,
                                       const CycleBasisData& basis) {
  std::vector<int> chord_pos(g.edges.size(), -1);
  for (int i = 0; i < static_cast<int>(basis.chords.size()); ++i)
    chord_pos[static_cast<size_t>(basis.chords[static_cast<size_t>(i)])] = i;

  std::vector<TwoCycle> out;
  for (int e1 = 0; e1 < static_cast<int>(g.edges.size()); ++e1)
    for (int e2 = e1 + 1; e2 < static_cast<int>(g.edges.size()); ++e2) {
      if (g.edges[static_cast<size_t>(e1)].p != g.edges[static_cast<size_t>(e2)].p ||
          g.edges[static_cast<size_t>(e1)].u != g.edges[static_cast<size_t>(e2)].u)
        continue;
      // loop: P -> U via e1, U -> P via e2
      std::vector<long long> img(static_cast<size_t>(basis.rank), 0);
      if (chord_pos[static_cast<size_t>(e1)] >= 0)
        img[static_cast<size_t>(chord_pos[static_cast<size_t>(e1)])] += 1;
      if (chord_pos[static_cast<size_t>(e2)] >= 0)
        img[static_cast<size_t>(chord_pos[static_cast<size_t>(e2)])] -= 1;
      bool nonzero = false;
      for (long long v : img) nonzero = nonzero || v != 0;
      if (!nonzero)
        fail(ErrorCode::Internal, "parallel-edge loop with trivial homology class");
      out.push_back({e1, e2, img});
    }
  return out;
}

int choose_n(const std::vector<std::vector<long long>>& images) {
  if (images.empty())
    fail(ErrorCode::EmptyInput, "no two-vertex loops; use the trivial cover");
  size_t r = images[0].size();
  if (r == 0) fail(ErrorCode::RankZero, "images live in Z^0");
  long long bound = 2;
  std::vector<long long> gcds;
  for (const auto& v : images) {
    if (v.size() != r) fail(ErrorCode::ParseError, "ragged image vectors");
    long long gc = 0;
    for (long long x : v) gc = std::gcd(gc, x < 0 ? -x : x);
    if (gc == 0) fail(ErrorCode::ParseError, "zero image vector");
    gcds.push_back(gc);
    bound = std::max(bound, gc + 1);
  }
  for (int n = 2; n <= bound; ++n) {
    bool ok = true;
    for (long long gc : gcds) ok = ok && (gc % n != 0);
    if (ok) return n;
  }
  fail(ErrorCode::Internal, "no admissible n below the gcd bound");
}

namespace {

int group_index(const std::vector<int>& elem, int n) {
  int idx = 0;
  for (int v : elem) idx = idx * n + v;
  return idx;
}

}  // namespace

GraphCover build_abelian_cover(const ReductionGraph& g, const CycleBasisData& basis,
                               int n) {
  GraphCover cover;
  cover.base = g;
  int r = basis.rank;
  if (r == 0 || n <= 1) {
    // trivial cover: one copy of the base
    cover.n = 1;
    cover.rank = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      cover.vertices.push_back({v, {}});
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      cover.edges.push_back({e, g.p_vertex(g.edges[static_cast<size_t>(e)].p),
                             g.u_vertex(g.edges[static_cast<size_t>(e)].u)});
    return cover;
  }
  cover.n = n;
  cover.rank = r;

  std::vector<int> chord_pos(g.edges.size(), -1);
  for (int i = 0; i < r; ++i)
    chord_pos[static_cast<size_t>(basis.chords[static_cast<size_t>(i)])] = i;

  // group elements of (Z/n)^r in lexicographic order
  long long order = 1;
  for (int i = 0; i < r; ++i) order *= n;
  std::vector<std::vector<int>> elems;
  elems.reserve(static_cast<size_t>(order));
  std::vector<int> cur(static_cast<size_t>(r), 0);
  while (true) {
    elems.push_back(cur);
    int pos = r - 1;
    while (pos >= 0 && ++cur[static_cast<size_t>(pos)] == n) {
      cur[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  int v_count = g.vertex_count();
  for (int v = 0; v < v_count; ++v)
    for (const auto& e : elems) cover.vertices.push_back({v, e});
  auto cover_vertex = [&](int base_v, const std::vector<int>& elem) {
    return base_v * static_cast<int>(order) + group_index(elem, n);
  };

  // voltage on edge e: 0 on tree edges, unit vector on chord i; positive
  // direction P -> U
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int pv = g.p_vertex(g.edges[static_cast<size_t>(e)].p);
    int uv = g.u_vertex(g.edges[static_cast<size_t>(e)].u);
    for (const auto& elem : elems) {
      std::vector<int> target = elem;
      if (chord_pos[static_cast<size_t>(e)] >= 0) {
        int i = chord_pos[static_cast<size_t>(e)];
        target[static_cast<size_t>(i)] = (target[static_cast<size_t>(i)] + 1) % n;
      }
      cover.edges.push_back({e, cover_vertex(pv, elem), cover_vertex(uv, target)});
    }
  }
  return cover;
}

int GraphCover::degree() const {
  if (rank == 0) return 1;
  int d = 1;
  for (int i = 0; i < rank; ++i) d *= n;
  return d;
}

CoverReport validate_cover(const GraphCover& c) {
  CoverReport rep;
  const ReductionGraph& g = c.base;
  int nv = static_cast<int>(c.vertices.size());

  // (i) star bijection: per cover vertex, each incident base edge lifts
  // exactly once
  rep.star_bijection = true;
  std::vector<std::map<int, int>> star(static_cast<size_t>(nv));
  for (const auto& e : c.edges) {
    star[static_cast<size_t>(e.from)][e.base_edge]++;
    star[static_cast<size_t>(e.to)][e.base_edge]++;
  }
  for (int v = 0; v < nv && rep.star_bijection; ++v) {
    int base_v = c.vertices[static_cast<size_t>(v)].base_vertex;
    std::map<int, int> expect;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (g.p_vertex(g.edges[static_cast<size_t>(e)].p) == base_v ||
          g.u_vertex(g.edges[static_cast<size_t>(e)].u) == base_v)
        expect[e] = 1;
    }
    rep.star_bijection = star[static_cast<size_t>(v)] == expect;
  }

  // (ii) bipartite: every cover edge joins a P-copy to a U-copy
  rep.bipartite = true;
  int p_count = static_cast<int>(g.p_labels.size());
  for (const auto& e : c.edges) {
    bool from_p = c.vertices[static_cast<size_t>(e.from)].base_vertex < p_count;
    bool to_u = c.vertices[static_cast<size_t>(e.to)].base_vertex >= p_count;
    rep.bipartite = rep.bipartite && from_p && to_u;
  }

  // (iii) connectivity
  std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
  for (const auto& e : c.edges) {
    adj[static_cast<size_t>(e.from)].push_back(e.to);
    adj[static_cast<size_t>(e.to)].push_back(e.from);
  }
  std::vector<bool> seen(static_cast<size_t>(nv), false);
  std::queue<int> q;
  if (nv > 0) {
    q.push(0);
    seen[0] = true;
  }
  int count = nv > 0 ? 1 : 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++count;
        q.push(w);
      }
  }
  rep.connected = count == nv && nv > 0;

  // (iv) no parallel edges
  std::set<std::pair<int, int>> pairs;
  rep.no_parallel_edges = true;
  for (const auto& e : c.edges) {
    auto key = std::minmax(e.from, e.to);
    if (!pairs.insert({key.first, key.second}).second) rep.no_parallel_edges = false;
  }
  return rep;
}

ReductionGraph tate_graph() {
  ReductionGraph g;
  g.p_labels = {"node"};
  g.u_labels = {"component"};
  g.edges = {{0, 0, "branch0"}, {0, 0, "branch1"}};
  return g;
}

std::string to_dot(const ReductionGraph& g) {
  std::string s = "graph reduction {\n";
  for (size_t i = 0; i < g.p_labels.size(); ++i)
    s += "  p" + std::to_string(i) + " [label=\"" + g.p_labels[i] + "\", shape=circle];\n";
  for (size_t i = 0; i < g.u_labels.size(); ++i)
    s += "  u" + std::to_string(i) + " [label=\"" + g.u_labels[i] + "\", shape=box];\n";
  for (const auto& e : g.edges)
    s += "  p" + std::to_string(e.p) + " -- u" + std::to_string(e.u) +
         " [label=\"" + e.branch + "\"];\n";
  return s + "}\n";
}

std::string to_dot(const GraphCover& c) {
  std::string s = "graph cover {\n";
  for (size_t v = 0; v < c.vertices.size(); ++v) {
    std::string label = std::to_string(c.vertices[v].base_vertex);
    for (int gcoord : c.vertices[v].group_elem)
      label += "." + std::to_string(gcoord);
    s += "  v" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& e : c.edges)
    s += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) + ";\n";
  return s + "}\n";
}

}  // namespace dvcurve
