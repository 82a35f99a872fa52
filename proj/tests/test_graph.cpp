#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pathinv/graph.hpp"
#include "pathinv/quiver.hpp"

using pathinv::classify_graph;
using pathinv::GraphVerdict;
using pathinv::Multigraph;
using pathinv::Quiver;
using pathinv::RepType;
using pathinv::underlying_graph;

namespace {

Multigraph graph(std::size_t n) {
  Multigraph g;
  g.n = n;
  g.loops.assign(n, 0);
  return g;
}

Multigraph path_graph(std::size_t n) {
  Multigraph g = graph(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  Multigraph g = path_graph(n);
  g.add_edge(static_cast<int>(n - 1), 0);
  return g;
}

// Star with given arm lengths hanging off vertex 0.
Multigraph star(const std::vector<int>& arms) {
  std::size_t total = 1;
  for (int a : arms) total += static_cast<std::size_t>(a);
  Multigraph g = graph(total);
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int k = 0; k < a; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("finite families") {
  for (std::size_t n = 1; n <= 6; ++n) {
    GraphVerdict v = classify_graph(path_graph(n));
    CHECK(v.overall == RepType::Finite);
    REQUIRE(v.components.size() == 1);
    CHECK(v.components[0].family == "A" + std::to_string(n));
  }
  CHECK(classify_graph(star({1, 1, 1})).components[0].family == "D4");
  CHECK(classify_graph(star({1, 1, 4})).components[0].family == "D7");
  CHECK(classify_graph(star({1, 2, 2})).components[0].family == "E6");
  CHECK(classify_graph(star({1, 2, 3})).components[0].family == "E7");
  CHECK(classify_graph(star({1, 2, 4})).components[0].family == "E8");
}

TEST_CASE("euclidean families") {
  {
    Multigraph g = graph(1);
    g.add_edge(0, 0);
    GraphVerdict v = classify_graph(g);
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "A~0");
  }
  {
    Multigraph g = graph(2);
    g.add_edge(0, 1, 2);
    GraphVerdict v = classify_graph(g);
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "A~1");
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    GraphVerdict v = classify_graph(cycle_graph(n));
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "A~" + std::to_string(n - 1));
  }
  {
    // Degree-4 star on 5 vertices.
    GraphVerdict v = classify_graph(star({1, 1, 1, 1}));
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "D~4");
  }
  {
    // Two branch vertices with two pendant leaves each.
    Multigraph g = graph(6);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    GraphVerdict v = classify_graph(g);
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "D~5");
  }
  CHECK(classify_graph(star({2, 2, 2})).components[0].family == "E~6");
  CHECK(classify_graph(star({1, 3, 3})).components[0].family == "E~7");
  CHECK(classify_graph(star({1, 2, 5})).components[0].family == "E~8");
}

TEST_CASE("wild shapes") {
  {
    Multigraph g = graph(1);
    g.add_edge(0, 0, 2);  // two loops
    CHECK(classify_graph(g).overall == RepType::Wild);
  }
  {
    Multigraph g = graph(2);
    g.add_edge(0, 1, 3);  // triple edge
    CHECK(classify_graph(g).overall == RepType::Wild);
  }
  {
    Multigraph g = graph(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);  // loop plus an edge
    CHECK(classify_graph(g).overall == RepType::Wild);
  }
  CHECK(classify_graph(star({1, 2, 6})).overall == RepType::Wild);
  CHECK(classify_graph(star({2, 2, 3})).overall == RepType::Wild);
  CHECK(classify_graph(star({1, 1, 1, 1, 1})).overall == RepType::Wild);
  {
    // Cycle with a pendant edge: unicyclic but not all degrees 2.
    Multigraph g = graph(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    CHECK(classify_graph(g).overall == RepType::Wild);
  }
}

TEST_CASE("disconnected graphs take the worst verdict") {
  Multigraph g = graph(5);
  g.add_edge(0, 1);      // A2
  g.add_edge(2, 3);      // A2
  g.add_edge(4, 4);      // A~0
  GraphVerdict v = classify_graph(g);
  CHECK(v.overall == RepType::Tame);
  CHECK(v.components.size() == 3);

  g.loops[4] = 2;  // make the loop component wild
  CHECK(classify_graph(g).overall == RepType::Wild);
}

TEST_CASE("isolated vertex is A1") {
  GraphVerdict v = classify_graph(graph(1));
  CHECK(v.overall == RepType::Finite);
  CHECK(v.components[0].family == "A1");
}

TEST_CASE("classification is orientation invariant") {
  std::mt19937 rng(5);
  // Random orientations of the A4 path and of a 4-cycle always classify the same.
  for (int t = 0; t < 10; ++t) {
    Quiver q({"1", "2", "3", "4"});
    for (int i = 0; i < 3; ++i) {
      if (rng() % 2)
        q.set_arrow_dim(i, i + 1, 1);
      else
        q.set_arrow_dim(i + 1, i, 1);
    }
    GraphVerdict v = classify_graph(underlying_graph(q));
    CHECK(v.overall == RepType::Finite);
    CHECK(v.components[0].family == "A4");
  }
  for (int t = 0; t < 10; ++t) {
    Quiver q({"1", "2", "3", "4"});
    for (int i = 0; i < 4; ++i) {
      int j = (i + 1) % 4;
      if (rng() % 2)
        q.set_arrow_dim(i, j, 1);
      else
        q.set_arrow_dim(j, i, 1);
    }
    GraphVerdict v = classify_graph(underlying_graph(q));
    CHECK(v.overall == RepType::Tame);
    CHECK(v.components[0].family == "A~3");
  }
}

TEST_CASE("adding an edge never improves the verdict") {
  auto rank = [](RepType t) { return t == RepType::Wild ? 2 : t == RepType::Tame ? 1 : 0; };
  std::mt19937 rng(9);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + rng() % 5;
    Multigraph g = graph(n);
    const int extra = static_cast<int>(rng() % (n + 2));
    for (int e = 0; e < extra; ++e)
      g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const int before = rank(classify_graph(g).overall);
    g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const int after = rank(classify_graph(g).overall);
    CHECK(after >= before);
  }
}

TEST_CASE("underlying graph forgets directions and keeps multiplicities") {
  Quiver q({"1", "2"});
  q.set_arrow_dim(0, 1, 1);
  q.set_arrow_dim(1, 0, 1);
  Multigraph g = underlying_graph(q);
  CHECK(g.edges.at({0, 1}) == 2);

  Quiver loop({"v"});
  loop.set_arrow_dim(0, 0, 1);
  CHECK(underlying_graph(loop).loops[0] == 1);
}
