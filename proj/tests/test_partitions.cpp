#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "slidechrom/dyck.hpp"
#include "slidechrom/partitions.hpp"
#include "slidechrom/slide.hpp"

using namespace slidechrom;

namespace {

const char* kSixVertex = "ENEEENENEENNEENEE@6,5";
const char* kThreeVertex = "ENEENENEE@3,3";

Permutation perm(const std::string& s) {
  Permutation p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

// Small triple: 2 above 1 and 3, natural labels, bounds (2,3,2).
LabeledPoset small_triple() { return LabeledPoset(Poset::from_relations(3, {{1, 2}, {3, 2}}), {1, 2, 3}, {2, 3, 2}); }

// Cover relation recomputed from `less` alone.
bool is_cover(const Poset& P, int i, int j) {
  if (!P.less(i, j)) return false;
  for (int k = 1; k <= P.n(); ++k)
    if (P.less(i, k) && P.less(k, j)) return false;
  return true;
}

// Every f in the box, filtered by the cover conditions.
std::multiset<std::vector<int>> partitions_by_scan(const LabeledPoset& LP, const Window& w) {
  std::multiset<std::vector<int>> out;
  const int n = LP.n();
  std::vector<int> f(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (!is_cover(LP.order, i, j)) continue;
          int a = f[static_cast<std::size_t>(i - 1)], b = f[static_cast<std::size_t>(j - 1)];
          if (a > b || (a == b && LP.label(i) > LP.label(j))) return;
        }
      out.insert(f);
      return;
    }
    for (int c = w.lo; c <= std::min(w.hi, LP.bound(v)); ++c) {
      f[static_cast<std::size_t>(v - 1)] = c;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

struct DyckData {
  PartialDyckPath D;
  DyckGraph G;
  RestrictionMap rho;
  Poset P;
  explicit DyckData(const PartialDyckPath& d)
      : D(d), G(dyck_graph(d)), rho(restriction_map(d)), P(incomparability_poset(G)) {}
};

void for_each_small_path(const std::function<void(const PartialDyckPath&)>& fn) {
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= 4; ++r) for_each_path(n, r, fn);
}

}  // namespace

TEST_CASE("incomparability poset") {
  DyckData d(parse_path_literal(kThreeVertex));
  CHECK(d.P.relations() == std::vector<std::pair<int, int>>{{1, 3}});
  DyckGraph K(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(incomparability_poset(K).relations().empty());
  DyckGraph E(3, {});
  CHECK(incomparability_poset(E).relations() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  DyckGraph bad(3, {{1, 3}});
  CHECK_THROWS_AS(incomparability_poset(bad), std::invalid_argument);
}

TEST_CASE("orientations from permutations") {
  DyckData d5(parse_path_literal(kThreeVertex));
  auto id = orientation_from_perm(d5.G, identity_permutation(3));
  CHECK(id.has_arc(2, 1));
  CHECK(id.has_arc(3, 2));
  auto rev = orientation_from_perm(d5.G, perm("321"));
  CHECK(rev.has_arc(1, 2));
  CHECK(rev.has_arc(2, 3));
  DyckData d1(parse_path_literal(kSixVertex));
  auto o = orientation_from_perm(d1.G, perm("645123"));
  CHECK(omega_labeling(o) == Permutation{6, 5, 1, 4, 2, 3});
}

TEST_CASE("omega labeling") {
  DyckGraph E(4, {});
  CHECK(omega_labeling(Orientation(E, {})) == Permutation{4, 3, 2, 1});
  DyckGraph one(2, {{1, 2}});
  auto w = omega_labeling(Orientation(one, {{1, 2}}));
  CHECK(w[0] < w[1]);
  CHECK_THROWS_AS(Orientation(DyckGraph(3, {{1, 2}, {1, 3}, {2, 3}}), {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("poset of an orientation") {
  CHECK(poset_of_orientation(Orientation(DyckGraph(3, {}), {})).relations().empty());
  DyckGraph path(3, {{1, 2}, {2, 3}});
  auto P = poset_of_orientation(Orientation(path, {{3, 2}, {2, 1}}));
  CHECK(P.relations() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  DyckData d1(parse_path_literal(kSixVertex));
  auto Po = poset_of_orientation(orientation_from_perm(d1.G, perm("645123")));
  auto covers = Po.cover_relations();
  std::set<std::pair<int, int>> cs(covers.begin(), covers.end());
  CHECK(cs == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {5, 3}, {4, 5}, {6, 5}});
}

TEST_CASE("inversions and descents") {
  DyckData d(parse_path_literal(kThreeVertex));
  CHECK(inv_g(d.G, identity_permutation(3)) == 0);
  CHECK(inv_g(d.G, perm("321")) == 2);
  CHECK(inv_g(d.G, perm("312")) == 1);
  CHECK(p_descents(d.P, perm("312")) == std::set<int>{1});
  CHECK(p_descents(d.P, perm("321")).empty());
  Poset anti = Poset::from_relations(3, {});
  for_each_permutation(3, [&](const Permutation& pi) { CHECK(p_descents(anti, pi).empty()); });
}

TEST_CASE("barrho and rdes on the drawn examples") {
  DyckData d(parse_path_literal(kThreeVertex));
  auto b = barrho(perm("312"), d.rho, d.P);
  CHECK(std::vector<int>{b[2], b[0], b[1]} == std::vector<int>{1, 1, 3});
  CHECK(rdes(perm("321"), d.rho, d.P) == WeakComposition::parse("11|1"));
  CHECK(rdes(identity_permutation(3), d.rho, d.P) == WeakComposition::parse("111"));
  // Chain 1 < ... < 5 with labels 2,3,1,5,4 and bounds 1,4,5,6,4 along it.
  Permutation omega{2, 3, 1, 5, 4};
  RestrictionMap rho{1, 4, 5, 6, 4};
  CHECK(barrho_by_labels(identity_permutation(5), rho, omega) == RestrictionMap{1, 2, 3, 3, 4});
  CHECK(rdes_by_labels(identity_permutation(5), rho, omega) == WeakComposition::parse("2021"));
  Poset total = Poset::chain(identity_permutation(3));
  CHECK(barrho(perm("321"), {2, 2, 2}, total) == RestrictionMap{2, 2, 2});
}

TEST_CASE("restricted partitions of the small triple") {
  auto LP = small_triple();
  auto parts = enumerate_restricted_partitions(LP, Window(1, 3));
  CHECK(parts.size() == 6);
  TPolynomial expect(Window(1, 3));
  for (const char* m : {"120", "111", "111", "021", "201", "210"}) expect.add_term(WeakComposition::parse(m), 1);
  CHECK(partition_gf(LP, Window(1, 3)) == expect);
  CHECK(linear_extensions(LP.order).size() == 2);
}

TEST_CASE("restricted partition edge cases") {
  auto LP = LabeledPoset(Poset::from_relations(2, {{1, 2}}), {1, 2}, {0, 3});
  CHECK(enumerate_restricted_partitions(LP, Window(1, 3)).empty());
  CHECK(partition_gf(LP, Window(1, 3)).is_zero());
  auto one = LabeledPoset(Poset::from_relations(1, {}), {1}, {2});
  CHECK(enumerate_restricted_partitions(one, Window(1, 3)) == std::vector<RestrictedPartition>{{1}, {2}});
}

TEST_CASE("chain partitions equal two slides") {
  LabeledPoset L(Poset::chain(identity_permutation(5)), {2, 3, 1, 5, 4}, {1, 4, 5, 6, 4});
  auto expect = slide_poly(WeakComposition::parse("2021"), Window(1, 4)) + slide_poly(WeakComposition::parse("1121"), Window(1, 4));
  CHECK(partition_gf(L, Window(1, 4)) == expect);
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions(Poset::from_relations(3, {})).size() == 6);
  CHECK(linear_extensions(Poset::chain(perm("213"))) == std::vector<Permutation>{perm("213")});
}

TEST_CASE("linear extensions and partitions agree with brute-force scans") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 5;
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 3 == 0) rel.emplace_back(i, j);
    Poset P = Poset::from_relations(n, rel);
    std::vector<Permutation> scan;
    for_each_permutation(n, [&](const Permutation& pi) {
      for (std::size_t a = 0; a < pi.size(); ++a)
        for (std::size_t b = a + 1; b < pi.size(); ++b)
          if (P.less(pi[b], pi[a])) return;
      scan.push_back(pi);
    });
    CHECK(linear_extensions(P) == scan);
    Permutation omega = identity_permutation(n);
    std::shuffle(omega.begin(), omega.end(), rng);
    RestrictionMap rho;
    for (int i = 0; i < n; ++i) rho.push_back(static_cast<int>(rng() % 4));
    LabeledPoset LP(P, omega, rho);
    for (Window w : {Window(1, 3), Window(-1, 2)}) {
      auto got = enumerate_restricted_partitions(LP, w);
      CHECK(std::multiset<std::vector<int>>(got.begin(), got.end()) == partitions_by_scan(LP, w));
    }
  }
}

TEST_CASE("descents of P_D match ascents of the orientation labeling") {
  for_each_small_path([](const PartialDyckPath& D) {
    DyckData d(D);
    for_each_permutation(D.n(), [&](const Permutation& pi) {
      auto omega = omega_labeling(orientation_from_perm(d.G, pi));
      for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        bool desc = d.P.less(pi[i + 1], pi[i]);
        bool asc = omega[static_cast<std::size_t>(pi[i] - 1)] < omega[static_cast<std::size_t>(pi[i + 1] - 1)];
        CHECK(desc == asc);
      }
      CHECK(rdes(pi, d.rho, d.P) == rdes_by_labels(pi, d.rho, omega));
      CHECK(barrho(pi, d.rho, d.P) == barrho_by_labels(pi, d.rho, omega));
    });
  });
}

TEST_CASE("barrho properties over small Dyck data") {
  for_each_small_path([](const PartialDyckPath& D) {
    DyckData d(D);
    const int n = D.n();
    for_each_permutation(n, [&](const Permutation& pi) {
      auto bar = barrho(pi, d.rho, d.P);
      auto omega = omega_labeling(orientation_from_perm(d.G, pi));
      for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (d.P.less(pi[i + 1], pi[i])) CHECK(bar[static_cast<std::size_t>(pi[i] - 1)] == bar[static_cast<std::size_t>(pi[i + 1] - 1)]);
      // rdes is well formed and its flattening is the complement of the descent set.
      auto a = rdes(pi, d.rho, d.P);
      CHECK(a.weight() == n);
      std::set<int> comp;
      auto des = p_descents(d.P, pi);
      for (int i = 1; i < n; ++i)
        if (!des.count(i)) comp.insert(i);
      CHECK(flatten(a) == comp_of_subset(comp, n));
      // Replacing rho by barrho does not change the partitions of the chain.
      if (n <= 4) {
        Poset L = Poset::chain(pi);
        Window w(-1, D.r());
        CHECK(enumerate_restricted_partitions(LabeledPoset(L, omega, d.rho), w) ==
              enumerate_restricted_partitions(LabeledPoset(L, omega, bar), w));
      }
    });
  });
}

TEST_CASE("a chain's partitions form a single slide") {
  for_each_small_path([](const PartialDyckPath& D) {
    if (D.n() > 4) return;
    DyckData d(D);
    for_each_permutation(D.n(), [&](const Permutation& pi) {
      auto omega = omega_labeling(orientation_from_perm(d.G, pi));
      LabeledPoset L(Poset::chain(pi), omega, d.rho);
      for (int lo : {1, 0, -1}) {
        Window w(lo, D.r());
        CHECK(partition_gf(L, w) == slide_poly(rdes(pi, d.rho, d.P), w));
      }
    });
  });
}

TEST_CASE("DOT rendering of a labeled poset") {
  auto dot = to_dot(small_triple());
  CHECK(dot.find("1 -> 2") != std::string::npos);
  CHECK(dot.find("3 -> 2") != std::string::npos);
}
