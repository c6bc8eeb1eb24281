#include <catch_amalgamated.hpp>

#include <set>

#include "slidechrom/dyck.hpp"

using namespace slidechrom;

namespace {

using Cell = std::pair<int, int>;  // (column p, row q), unit square [p-1,p] x [q-1,q]

// Cells strictly between the path and the diagonal, collected while walking the steps.
std::set<Cell> cells_below(const PartialDyckPath& D) {
  std::set<Cell> out;
  int x = 0, y = D.r();
  for (char c : D.steps()) {
    if (c == 'N') {
      ++y;
      continue;
    }
    ++x;
    for (int q = x + 1; q <= y; ++q) out.insert({x, q});
  }
  return out;
}

std::set<std::pair<int, int>> oracle_edges(const PartialDyckPath& D) {
  auto cells = cells_below(D);
  std::set<std::pair<int, int>> e;
  for (int i = 1; i <= D.n(); ++i)
    for (int j = i + 1; j <= D.n(); ++j)
      if (cells.count({i + D.r(), j + D.r()})) e.insert({i, j});
  return e;
}

RestrictionMap oracle_rho(const PartialDyckPath& D) {
  auto cells = cells_below(D);
  RestrictionMap rho;
  for (int i = 1; i <= D.n(); ++i) {
    int best = 0;
    for (int j = 1; j <= D.r(); ++j)
      if (!cells.count({j, i + D.r()})) best = j;
    rho.push_back(best);
  }
  return rho;
}

std::set<std::pair<int, int>> edge_set(const DyckGraph& G) {
  auto v = G.edges();
  return {v.begin(), v.end()};
}

long long count_lattice_paths(int n, int r) {
  long long count = 0;
  for (int mask = 0; mask < (1 << (2 * n + r)); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    int x = 0, y = r;
    bool ok = true;
    for (int k = 0; k < 2 * n + r; ++k) {
      if (mask & (1 << k))
        ++y;
      else
        ++x;
      ok = ok && y >= x;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("parse_path") {
  CHECK_NOTHROW(parse_path("ENEENENEE", 3, 3));
  CHECK_NOTHROW(parse_path("NNNEEE", 3, 0));
  CHECK_THROWS_AS(parse_path("ENNNEE", 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("EEE", 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("NNNEEX", 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_path_literal("ENEENENEE"), std::invalid_argument);
  CHECK(parse_path_literal("ENEENENEE@3,3") == parse_path("ENEENENEE", 3, 3));
}

TEST_CASE("graphs and restriction maps of the two drawn paths") {
  auto six = parse_path_literal("ENEEENENEENNEENEE@6,5");
  CHECK(edge_set(dyck_graph(six)) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
  CHECK(restriction_map(six) == RestrictionMap{1, 4, 5, 5, 5, 5});
  auto three = parse_path_literal("ENEENENEE@3,3");
  CHECK(edge_set(dyck_graph(three)) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(restriction_map(three) == RestrictionMap{1, 3, 3});
}

TEST_CASE("small graphs") {
  CHECK(dyck_graph(parse_path("NENENE", 3, 0)).edges().empty());
  CHECK(edge_set(dyck_graph(parse_path("NNNEEE", 3, 0))) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  for (const auto& D : enumerate_paths(3, 0)) CHECK(restriction_map(D) == RestrictionMap{0, 0, 0});
}

TEST_CASE("path counts") {
  CHECK(enumerate_paths(3, 0).size() == 5);
  CHECK(enumerate_paths(0, 4).size() == 1);
  CHECK(enumerate_paths(0, 4)[0].steps() == "EEEE");
  CHECK(enumerate_paths(1, 1).size() == 2);
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; n * 2 + r <= 12; ++r) CHECK(static_cast<long long>(enumerate_paths(n, r).size()) == count_lattice_paths(n, r));
}

TEST_CASE("graph and restriction map agree with the cell oracle") {
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 4; ++r)
      for (const auto& D : enumerate_paths(n, r)) {
        auto G = dyck_graph(D);
        CHECK(edge_set(G) == oracle_edges(D));
        CHECK(restriction_map(D) == oracle_rho(D));
        CHECK(G.has_interval_property());
        auto rho = restriction_map(D);
        for (std::size_t k = 0; k < rho.size(); ++k) {
          CHECK(rho[k] >= 0);
          CHECK(rho[k] <= r);
          if (k) CHECK(rho[k - 1] <= rho[k]);
        }
        CHECK(parse_path_literal(D.literal()) == D);
      }
}

TEST_CASE("adding area never removes edges") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; n + r <= 7; ++r)
      for (const auto& D : enumerate_paths(n, r)) {
        auto before = edge_set(dyck_graph(D));
        const auto& s = D.steps();
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
          if (s[k] != 'E' || s[k + 1] != 'N') continue;
          std::string t = s;
          t[k] = 'N';
          t[k + 1] = 'E';
          auto after = edge_set(dyck_graph(parse_path(t, n, r)));
          for (const auto& e : before) CHECK(after.count(e) == 1);
        }
      }
}

TEST_CASE("DOT rendering lists every edge") {
  auto D = parse_path_literal("ENEENENEE@3,3");
  auto dot = to_dot(dyck_graph(D), restriction_map(D));
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("2 -- 3") != std::string::npos);
  CHECK(dot.find("<=3") != std::string::npos);
}
