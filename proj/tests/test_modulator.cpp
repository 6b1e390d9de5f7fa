#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bounds.hpp"
#include "modulator.hpp"
#include "oracle.hpp"
#include "outerplanar.hpp"
#include "testutil.hpp"

using namespace opk;
using namespace opk::testutil;

namespace {

// v completes each attached C4 into a K2,3
graph refusal_gadget(int gadgets, int& apex) {
  graph g;
  apex = 1;
  g.add_vertex(apex);
  int next = 2;
  for (int i = 0; i < gadgets; ++i) {
    int a = next, x = next + 1, b = next + 2, y = next + 3;
    next += 4;
    g.add_edge(a, x);
    g.add_edge(x, b);
    g.add_edge(b, y);
    g.add_edge(y, a);
    g.add_edge(apex, a);
    g.add_edge(apex, b);
  }
  return g;
}

}  // namespace

TEST_CASE("modulator_provider") {
  kernel_config cfg;
  SUBCASE("outerplanar graph needs nothing") {
    auto r = modulator_provider(fan_graph(6), 3, cfg);
    CHECK(r.status == provider_result::outcome::found);
    CHECK(r.modulator.empty());
  }
  SUBCASE("K4 with budget 1") {
    auto r = modulator_provider(complete_graph(4), 1, cfg);
    CHECK(r.status == provider_result::outcome::found);
    CHECK(r.modulator.size() == 1);
  }
  SUBCASE("three obstructions exceed budget 2") {
    graph g = complete_graph(4);
    g = disjoint_union(g, complete_bipartite(2, 3), 4);
    g = disjoint_union(g, complete_graph(4), 9);
    REQUIRE(opd_exact(g, 4) == 3);
    auto r = modulator_provider(g, 2, cfg);
    CHECK(r.status == provider_result::outcome::opd_exceeds_k);
  }
  SUBCASE("heuristic mode") {
    kernel_config h;
    h.provider = provider_mode::heuristic;
    auto r = modulator_provider(complete_graph(4), 1, h);
    CHECK(r.status == provider_result::outcome::found);
    CHECK(r.modulator.size() == 1);
    CHECK(is_outerplanar(complete_graph(4).without_vertices(
        std::set<int>(r.modulator.begin(), r.modulator.end()))));
    // K5 needs 2 deletions; with k=1 the heuristic cannot conclude
    auto r2 = modulator_provider(complete_graph(5), 1, h);
    CHECK(r2.status == provider_result::outcome::unknown);
  }
}

TEST_CASE("avoidance_set") {
  SUBCASE("isolated vertex in an outerplanar graph") {
    graph g = fan_graph(5);
    g.add_vertex(50);
    auto s = avoidance_set(g, 50, 2);
    REQUIRE(s.has_value());
    CHECK(s->empty());
  }
  SUBCASE("hub of W6") {
    graph w6 = wheel_graph(6);  // rim 1..6, hub 7
    REQUIRE(is_outerplanar(w6.without_vertices({7})));
    auto s = avoidance_set(w6, 7, 2);
    REQUIRE(s.has_value());
    CHECK(s->size() <= 6);
    std::set<int> drop(s->begin(), s->end());
    CHECK_FALSE(drop.count(7));
    CHECK(is_outerplanar(w6.without_vertices(drop)));
    CHECK(opd_exact_avoiding(w6, 7, 2).has_value());
  }
  SUBCASE("refusal matches the avoiding oracle") {
    for (int k = 1; k <= 2; ++k) {
      int apex = 0;
      graph g = refusal_gadget(k + 1, apex);
      REQUIRE(is_outerplanar(g.without_vertices({apex})));
      CHECK_FALSE(avoidance_set(g, apex, k).has_value());
      auto best = opd_exact_avoiding(g, apex, k);
      CHECK_FALSE(best.has_value());
    }
  }
  SUBCASE("returned sets obey the 3k bound on random instances") {
    std::mt19937_64 rng(808);
    int done = 0;
    while (done < 120) {
      graph g = random_graph(9, 0.3, rng);
      int v = 1 + static_cast<int>(rng() % 9);
      if (!g.has_vertex(v)) continue;
      if (!is_outerplanar(g.without_vertices({v}))) continue;
      ++done;
      int k = 1 + static_cast<int>(rng() % 2);
      auto s = avoidance_set(g, v, k);
      if (s) {
        CHECK(static_cast<int>(s->size()) <= 3 * k);
        CHECK(is_outerplanar(g.without_vertices(std::set<int>(s->begin(), s->end()))));
      } else {
        CHECK_FALSE(opd_exact_avoiding(g, v, k).has_value());
      }
    }
  }
  CHECK_THROWS_AS(avoidance_set(complete_graph(5), 1, 2), std::invalid_argument);
}

TEST_CASE("build_augmented") {
  kernel_config cfg;
  SUBCASE("outerplanar input: empty modulator") {
    graph g = fan_graph(6);
    auto out = build_augmented(g, 3, cfg);
    CHECK(out.st == augment_output::status::ok);
    CHECK(out.g == g);
    CHECK(out.k == 3);
    CHECK(out.am.x0.empty());
    CHECK_FALSE(validate_augmented_modulator(out.g, out.k, out.am).has_value());
  }
  SUBCASE("K4 with budget 1") {
    auto out = build_augmented(complete_graph(4), 1, cfg);
    REQUIRE(out.st == augment_output::status::ok);
    auto err = validate_augmented_modulator(out.g, out.k, out.am);
    if (err) CAPTURE(*err);
    CHECK_FALSE(err.has_value());
    CHECK(static_cast<int>(out.am.x0.size()) <= cfg.c * out.k);
  }
  SUBCASE("forced vertex decrements k and shifts opd") {
    int apex = 0;
    graph g = refusal_gadget(2, apex);  // only the apex solves it with one deletion
    REQUIRE(opd_exact(g, 2) == 1);
    auto out = build_augmented(g, 1, cfg);
    REQUIRE(out.st == augment_output::status::ok);
    CHECK(out.k == 0);
    CHECK_FALSE(out.g.has_vertex(apex));
    CHECK(replay_trace(g, out.trace) == out.g);
    // opd(g') = opd(g) - (k - k')
    CHECK(opd_exact(out.g, 2) == *opd_exact(g, 2) - (1 - out.k));
  }
  SUBCASE("verdict on overloaded instances") {
    graph g = disjoint_union(complete_graph(4), complete_graph(4), 4);
    auto out = build_augmented(g, 1, cfg);
    CHECK(out.st == augment_output::status::opd_exceeds_k);
  }
}

TEST_CASE("rule1_reduce_degree") {
  SUBCASE("no pair exceeds k+3 shared components: unchanged") {
    graph g;
    int u = 1, v = 2;
    for (int i = 0; i < 3; ++i) {
      g.add_edge(u, 10 + i);
      g.add_edge(v, 10 + i);
    }
    augmented_modulator am;
    am.x0 = {u, v};
    am.repair[u] = {};
    am.repair[v] = {};
    REQUIRE_FALSE(validate_augmented_modulator(g, 2, am).has_value());
    auto [g2, t] = rule1_reduce_degree(g, 2, am);
    CHECK(g2 == g);
    CHECK(t.empty());
  }
  SUBCASE("unmarked pairs lose their edges; opd is preserved") {
    int k = 2;
    graph g;
    int u = 1, v = 2;
    for (int i = 0; i < k + 4; ++i) {  // one component more than gets marked
      g.add_edge(u, 10 + i);
      g.add_edge(v, 10 + i);
    }
    g.add_edge(u, 30);  // extra component adjacent to u only
    augmented_modulator am;
    am.x0 = {u, v};
    am.repair[u] = {};
    am.repair[v] = {};
    REQUIRE_FALSE(validate_augmented_modulator(g, k, am).has_value());
    auto before = opd_exact(g, k);
    auto [g2, t] = rule1_reduce_degree(g, k, am);
    CHECK(replay_trace(g, t) == g2);
    CHECK(g2.vertex_count() == 2 + (k + 3));  // unmarked singleton and 30 disappear
    auto after = opd_exact(g2, k);
    REQUIRE(before.has_value());
    REQUIRE(after.has_value());
    CHECK(*before == *after);
    // f1 bound on the component graph
    component_graph cg = build_component_graph(g2, am.all());
    CHECK(cg.edge_count() <= f1(1) * (k + 3LL) * (k + 3LL) * (k + 3LL));
  }
  SUBCASE("isolated modulator vertices leave the modulator") {
    graph g;
    g.add_edge(1, 10);
    g.add_edge(2, 10);
    g.add_vertex(3);  // modulator vertex with no edges at all
    augmented_modulator am;
    am.x0 = {1, 2, 3};
    am.repair[1] = {};
    am.repair[2] = {};
    am.repair[3] = {};
    REQUIRE_FALSE(validate_augmented_modulator(g, 3, am).has_value());
    auto [g2, t] = rule1_reduce_degree(g, 3, am);
    CHECK_FALSE(g2.has_vertex(3));
    CHECK(g2.has_vertex(10));  // shared component stays marked
    CHECK(am.x0 == std::set<int>{1, 2});
  }
  SUBCASE("single-neighbor components lose their edges and vanish") {
    graph g;
    g.add_edge(1, 10);
    g.add_edge(2, 10);
    g.add_edge(1, 20);  // adjacent to 1 only: never marked
    g.add_edge(20, 21);
    augmented_modulator am;
    am.x0 = {1, 2};
    am.repair[1] = {};
    am.repair[2] = {};
    auto before = opd_exact(g, 2);
    auto [g2, t] = rule1_reduce_degree(g, 2, am);
    CHECK_FALSE(g2.has_vertex(20));
    CHECK_FALSE(g2.has_vertex(21));
    CHECK(g2.has_vertex(10));
    CHECK(replay_trace(g, t) == g2);
    CHECK(*before == *opd_exact(g2, 2));
  }
}

TEST_CASE("formula regression") {
  CHECK(f1(40) == 24800);
  CHECK(f2(40) == 7000);
  CHECK(f3(40) == 242400);
  CHECK(f4(1, 678) == 3396);
  CHECK(f3(1) == 678);
  CHECK(f5(1, f3(1)) == 1646400);
  CHECK(f4(40, f3(40)) == 40LL * 242400 + 6 * 40 + 4 * 242400);
}

TEST_CASE("rule2_remove_pendant") {
  SUBCASE("pendant path off K4") {
    graph g = complete_graph(4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    auto [g2, t] = rule2_remove_pendant(g, {5, 6, 7});
    CHECK(g2 == complete_graph(4));
    CHECK(replay_trace(g, t) == g2);
    CHECK(*opd_exact(g, 2) == *opd_exact(g2, 2));
  }
  SUBCASE("isolated outerplanar component") {
    graph g = disjoint_union(complete_graph(4), cycle_graph(5), 4);
    auto [g2, t] = rule2_remove_pendant(g, {5, 6, 7, 8, 9});
    CHECK(g2 == complete_graph(4));
  }
  SUBCASE("pendant fan of 10 vertices off K4") {
    graph g = complete_graph(4);
    // fan: path 5..13 plus apex 14, glued to K4 at vertex 1 via edge 1-14
    for (int i = 5; i < 13; ++i) g.add_edge(i, i + 1);
    for (int i = 5; i <= 13; ++i) g.add_edge(14, i);
    g.add_edge(1, 14);
    std::vector<int> c;
    for (int i = 5; i <= 14; ++i) c.push_back(i);
    auto [g2, t] = rule2_remove_pendant(g, c);
    CHECK(g2 == complete_graph(4));
    CHECK(*opd_exact(g, 1) == 1);
    CHECK(*opd_exact(g2, 1) == 1);
  }
  SUBCASE("preconditions enforced") {
    graph g = complete_graph(4);
    g.add_edge(4, 5);
    CHECK_THROWS_AS(rule2_remove_pendant(g, {3, 5}), std::invalid_argument);  // two neighbors
    graph h = complete_graph(5);
    h.add_edge(5, 6);
    // closed neighborhood of {2,3,4,5} inside K5 is K5 itself
    CHECK_THROWS_AS(rule2_remove_pendant(h, {6, 5, 4, 3, 2}), std::invalid_argument);
  }
}

TEST_CASE("outerplanar_separator") {
  SUBCASE("singleton set needs nothing") {
    CHECK(outerplanar_separator(fan_graph(6), {3}).empty());
  }
  SUBCASE("path endpoints get one middle separator") {
    graph g = path_graph(9);
    auto y = outerplanar_separator(g, {1, 9});
    CHECK(y.size() <= 4);
    CHECK_FALSE(y.empty());
    std::set<int> cut(y.begin(), y.end());
    cut.insert(1);
    cut.insert(9);
    graph rest = g.without_vertices(cut);
    for (const auto& comp : connected_components(rest)) {
      std::set<int> cs(comp.begin(), comp.end());
      auto nb = g.neighborhood(cs);
      CHECK_FALSE((nb.count(1) && nb.count(9)));
    }
  }
  SUBCASE("random outerplanar graphs: size bound and separation") {
    std::mt19937_64 rng(121);
    for (int it = 0; it < 60; ++it) {
      int n = 8 + static_cast<int>(rng() % 90);
      graph g;
      for (int i = 1; i <= n; ++i) g.add_vertex(i);
      for (int i = 1; i <= n; ++i)
        if (rng() % 100 < 92) g.add_edge(i, i % n + 1);
      std::vector<std::pair<int, int>> stack{{1, n}};
      while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2) continue;
        int mid = lo + 1 + static_cast<int>(rng() % (hi - lo - 1));
        if (mid - lo >= 2 && rng() % 100 < 60) g.add_edge(lo, mid);
        if (hi - mid >= 2 && rng() % 100 < 60) g.add_edge(mid, hi);
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
      }
      REQUIRE(is_outerplanar(g));
      std::set<int> xs;
      int want = std::min(n, 2 + static_cast<int>(rng() % 7));
      while (static_cast<int>(xs.size()) < want) xs.insert(1 + static_cast<int>(rng() % n));
      std::vector<int> x(xs.begin(), xs.end());
      auto y = outerplanar_separator(g, x);
      CHECK(y.size() <= 4 * x.size());
      for (int v : y) CHECK_FALSE(xs.count(v));
      std::set<int> cut = xs;
      cut.insert(y.begin(), y.end());
      graph rest = g.without_vertices(cut);
      for (const auto& comp : connected_components(rest)) {
        std::set<int> cs(comp.begin(), comp.end());
        auto nb = g.neighborhood(cs);
        int touched = 0;
        for (int v : xs)
          if (nb.count(v)) ++touched;
        CHECK(touched <= 1);
      }
    }
  }
  CHECK_THROWS_AS(outerplanar_separator(complete_graph(4), {1}), std::invalid_argument);
}

TEST_CASE("compute_z") {
  SUBCASE("empty modulator: empty z") {
    augmented_modulator am;
    CHECK(compute_z(fan_graph(5), 2, am).empty());
  }
  SUBCASE("two modulator vertices with three disjoint 2-edge paths") {
    graph g;
    int u = 1, v = 2;
    for (int i = 0; i < 3; ++i) {
      g.add_edge(u, 10 + i);
      g.add_edge(10 + i, v);
    }
    augmented_modulator am;
    am.x0 = {u, v};
    am.repair[u] = {};
    am.repair[v] = {};
    int k = 2;
    REQUIRE_FALSE(validate_augmented_modulator(g, k, am).has_value());
    auto z = compute_z(g, k, am);
    CHECK_FALSE(z.empty());
    CHECK(static_cast<int>(z.size()) <= k + 3);
    // u,v are (x union z)-separated
    std::set<int> cut = {u, v};
    cut.insert(z.begin(), z.end());
    graph rest = g.without_vertices(cut);
    for (const auto& comp : connected_components(rest)) {
      auto nb = g.neighborhood(std::set<int>(comp.begin(), comp.end()));
      CHECK_FALSE((nb.count(u) && nb.count(v)));
    }
  }
}

TEST_CASE("build_op_decomposition") {
  kernel_config cfg;
  SUBCASE("outerplanar input: everything empty") {
    graph g = fan_graph(6);
    auto out = build_op_decomposition(g, 2, cfg);
    REQUIRE(out.st == decomposition_output::status::ok);
    CHECK(out.od.am.x0.empty());
    CHECK(out.od.z.empty());
    // pendant components (the whole graph) disappear
    CHECK(out.g.empty());
    CHECK(replay_trace(g, out.trace) == out.g);
  }
  SUBCASE("K4 plus attached flesh with budget 1") {
    graph g = complete_graph(4);
    g.add_edge(1, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 1);
    g.add_edge(2, 7);
    auto out = build_op_decomposition(g, 1, cfg);
    REQUIRE(out.st == decomposition_output::status::ok);  // validated internally
    CHECK(replay_trace(g, out.trace) == out.g);
    // conditional contract: opd stays while <= k
    auto before = opd_exact(g, 1);
    REQUIRE(before.has_value());
    auto after = opd_exact(out.g, out.k);
    REQUIRE(after.has_value());
    CHECK(*before - (1 - out.k) == *after);
  }
  SUBCASE("verdict propagates") {
    graph g = disjoint_union(complete_graph(4), complete_graph(4), 4);
    auto out = build_op_decomposition(g, 1, cfg);
    CHECK(out.st == decomposition_output::status::opd_exceeds_k);
  }
  SUBCASE("random apex instances: decomposition is valid and f4 bound holds") {
    std::mt19937_64 rng(787);
    int done = 0;
    while (done < 20) {
      graph g = random_graph(8, 0.35, rng, 1);
      int k = 2;
      if (opd_exact(g, k) > k) continue;
      ++done;
      auto out = build_op_decomposition(g, k, cfg);
      REQUIRE(out.st == decomposition_output::status::ok);
      component_graph cg = build_component_graph(out.g, out.od.separator_union());
      __int128 f4bound = static_cast<__int128>(f4(cfg.c, out.od.d)) * pow4(out.k + 3);
      CHECK(static_cast<__int128>(cg.edge_count()) <= f4bound);
      CHECK(replay_trace(g, out.trace) == out.g);
    }
  }
}

TEST_CASE("bipartite outerplanar bound on component graphs") {
  std::mt19937_64 rng(313);
  for (int it = 0; it < 250; ++it) {
    graph g = random_graph(10, 0.25, rng);
    if (!is_outerplanar(g)) continue;
    auto vs = g.vertices();
    std::set<int> x;
    int want = std::min<int>(vs.size(), 1 + static_cast<int>(rng() % 4));
    while (static_cast<int>(x.size()) < want) x.insert(vs[rng() % vs.size()]);
    component_graph cg = build_component_graph(g, x);
    // restrict to components with at least two modulator neighbors
    std::map<int, int> comp_deg;
    for (auto [xi, cj] : cg.edges) comp_deg[cj]++;
    long long y_cnt = 0, e_cnt = 0;
    for (auto [cj, d] : comp_deg)
      if (d >= 2) {
        y_cnt += 1;
        e_cnt += d;
      }
    CHECK(y_cnt <= 4 * static_cast<long long>(x.size()));
    CHECK(e_cnt <= 10 * static_cast<long long>(x.size()));
  }
}

TEST_CASE("component count bound: 3s + 4|Z|") {
  std::mt19937_64 rng(414);
  kernel_config cfg;
  int done = 0;
  while (done < 15) {
    graph g = random_graph(9, 0.3, rng);
    int k = 2;
    if (opd_exact(g, k) > k) continue;
    ++done;
    auto aug = build_augmented(g, k, cfg);
    if (aug.st != augment_output::status::ok) continue;
    auto am = aug.am;
    auto [g2, t] = rule1_reduce_degree(aug.g, aug.k, am);
    long long s = build_component_graph(g2, am.all()).edge_count();
    // random z disjoint from the modulator
    std::set<int> x = am.all();
    std::set<int> z;
    for (int v : g2.vertices())
      if (!x.count(v) && rng() % 3 == 0) z.insert(v);
    std::set<int> xz = x;
    xz.insert(z.begin(), z.end());
    graph rest = g2.without_vertices(xz);
    long long multi = 0;
    for (const auto& comp : connected_components(rest)) {
      auto nb = g2.neighborhood(std::set<int>(comp.begin(), comp.end()));
      if (nb.size() >= 2) ++multi;
    }
    CHECK(multi <= 3 * s + 4 * static_cast<long long>(z.size()));
  }
}
