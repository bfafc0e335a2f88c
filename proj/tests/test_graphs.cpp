#include <doctest.h>

#include <random>

#include "dvcurve/graphs.hpp"
#include "test_util.hpp"

using namespace dvcurve;

namespace {

ReductionGraph theta_graph() {
  // two vertices joined by three parallel edges
  ReductionGraph g;
  g.p_labels = {"p0"};
  g.u_labels = {"u0"};
  g.edges = {{0, 0, "a"}, {0, 0, "b"}, {0, 0, "c"}};
  return g;
}

using testutil::random_tree;

}  // namespace

TEST_CASE("tate graph: two vertices, two edges, rank one") {
  ReductionGraph g = tate_graph();
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges.size() == 2);
  CycleBasisData basis = cycle_rank(g);
  CHECK(basis.rank == 1);
  CHECK(!is_tree(g));
  auto cycles = two_cycle_images(g, basis);
  REQUIRE(cycles.size() == 1);
  long long coord = cycles[0].image[0];
  CHECK((coord == 1 || coord == -1));
}

TEST_CASE("trees have rank zero and no two-cycles") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    ReductionGraph g = random_tree(rng, 1 + static_cast<int>(rng() % 10));
    CycleBasisData basis = cycle_rank(g);
    CHECK(basis.rank == 0);
    CHECK(is_tree(g));
    CHECK(two_cycle_images(g, basis).empty());
    GraphCover cover = build_abelian_cover(g, basis, 5);
    CHECK(cover.degree() == 1);
    CHECK(cover.vertices.size() == static_cast<size_t>(g.vertex_count()));
    CHECK(validate_cover(cover).all_pass());
  }
}

TEST_CASE("theta graph: rank two, three two-cycles") {
  ReductionGraph g = theta_graph();
  CycleBasisData basis = cycle_rank(g);
  CHECK(basis.rank == 2);  // |E| - |V| + 1 = 3 - 2 + 1
  auto cycles = two_cycle_images(g, basis);
  CHECK(cycles.size() == 3);  // unordered pairs of three parallel edges
  for (const auto& c : cycles) {
    bool nonzero = false;
    for (long long v : c.image) nonzero = nonzero || v != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("choose_n: pinned examples and brute-force agreement") {
  CHECK(choose_n({{1}}) == 2);
  CHECK(choose_n({{2}}) == 3);
  CHECK(choose_n({{6}, {4}}) == 5);
  CHECK(choose_n({{1}}) == testutil::brute_choose_n({{1}}));
  CHECK(choose_n({{2}}) == testutil::brute_choose_n({{2}}));
  CHECK(choose_n({{6}, {4}}) == testutil::brute_choose_n({{6}, {4}}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long long>> images;
    size_t r = 1 + rng() % 3;
    size_t count = 1 + rng() % 4;
    for (size_t i = 0; i < count; ++i) {
      std::vector<long long> v(r, 0);
      while (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
        for (auto& x : v) x = static_cast<long long>(rng() % 13) - 6;
      images.push_back(v);
    }
    CHECK(choose_n(images) == testutil::brute_choose_n(images));
  }

  CHECK_THROWS_AS(choose_n({}), Error);
  try {
    choose_n({});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
}

TEST_CASE("tate covers of exponent n are 2n-cycles") {
  ReductionGraph g = tate_graph();
  CycleBasisData basis = cycle_rank(g);
  auto cycles = two_cycle_images(g, basis);
  std::vector<std::vector<long long>> images;
  for (const auto& c : cycles) images.push_back(c.image);
  CHECK(choose_n(images) == 2);

  for (int n = 2; n <= 7; ++n) {
    GraphCover cover = build_abelian_cover(g, basis, n);
    CHECK(cover.degree() == n);
    CHECK(cover.vertices.size() == static_cast<size_t>(2 * n));
    CHECK(cover.edges.size() == static_cast<size_t>(2 * n));
    CoverReport rep = validate_cover(cover);
    CHECK(rep.star_bijection);
    CHECK(rep.bipartite);
    CHECK(rep.connected);
    CHECK(rep.no_parallel_edges);
    // every vertex has degree exactly two: a single cycle of length 2n
    std::vector<int> deg(cover.vertices.size(), 0);
    for (const auto& e : cover.edges) {
      deg[static_cast<size_t>(e.from)]++;
      deg[static_cast<size_t>(e.to)]++;
    }
    for (int d : deg) CHECK(d == 2);
  }
}

TEST_CASE("covers of the theta graph at the chosen exponent are simple") {
  ReductionGraph g = theta_graph();
  CycleBasisData basis = cycle_rank(g);
  auto cycles = two_cycle_images(g, basis);
  std::vector<std::vector<long long>> images;
  for (const auto& c : cycles) images.push_back(c.image);
  int n = choose_n(images);
  GraphCover cover = build_abelian_cover(g, basis, n);
  CHECK(cover.degree() == n * n);
  CHECK(validate_cover(cover).all_pass());
}

TEST_CASE("cover degree law |V'| = |V| n^r for small graphs") {
  ReductionGraph g = theta_graph();
  CycleBasisData basis = cycle_rank(g);
  for (int n = 2; n <= 5; ++n) {
    GraphCover cover = build_abelian_cover(g, basis, n);
    CHECK(cover.vertices.size() ==
          static_cast<size_t>(g.vertex_count()) * static_cast<size_t>(cover.degree()));
    CHECK(validate_cover(cover).all_pass());
  }
}

TEST_CASE("spanning trees and covers are deterministic") {
  ReductionGraph g = theta_graph();
  CycleBasisData b1 = cycle_rank(g), b2 = cycle_rank(g);
  CHECK(b1.tree_edges == b2.tree_edges);
  CHECK(b1.chords == b2.chords);
  GraphCover c1 = build_abelian_cover(g, b1, 3);
  GraphCover c2 = build_abelian_cover(g, b2, 3);
  REQUIRE(c1.edges.size() == c2.edges.size());
  for (size_t i = 0; i < c1.edges.size(); ++i) {
    CHECK(c1.edges[i].from == c2.edges[i].from);
    CHECK(c1.edges[i].to == c2.edges[i].to);
  }
}

TEST_CASE("corrupted covers fail the right checks") {
  ReductionGraph g = tate_graph();
  CycleBasisData basis = cycle_rank(g);
  GraphCover cover = build_abelian_cover(g, basis, 3);
  REQUIRE(validate_cover(cover).all_pass());

  GraphCover corrupted = cover;
  corrupted.edges.push_back(corrupted.edges[0]);  // duplicated lifted edge
  CoverReport rep = validate_cover(corrupted);
  CHECK(!rep.no_parallel_edges);
  CHECK(!rep.star_bijection);

  // identity cover of a simple (parallel-edge-free) graph passes trivially
  std::mt19937 rng(5);
  ReductionGraph tree = random_tree(rng, 4);
  GraphCover ident = build_abelian_cover(tree, cycle_rank(tree), 1);
  CHECK(validate_cover(ident).all_pass());
}

TEST_CASE("disconnected graphs are rejected") {
  ReductionGraph g;
  g.p_labels = {"p0", "p1"};
  g.u_labels = {"u0", "u1"};
  g.edges = {{0, 0, "a"}, {1, 1, "b"}};
  try {
    cycle_rank(g);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("dot emission mentions every vertex") {
  ReductionGraph g = tate_graph();
  std::string dot = to_dot(g);
  CHECK(dot.find("p0") != std::string::npos);
  CHECK(dot.find("u0") != std::string::npos);
  GraphCover cover = build_abelian_cover(g, cycle_rank(g), 2);
  std::string cdot = to_dot(cover);
  CHECK(cdot.find("v3") != std::string::npos);
}
