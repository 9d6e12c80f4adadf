// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace shellab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

bool answer_is(Answer a, bool yes) { return a == (yes ? Answer::yes : Answer::no); }

// 1. Decision table on the fixture files, under 10 s in total.
Check decision_table() {
  Check c;
  const auto t0 = Clock::now();
  for (const auto& [file, expected] : fx::decision_table()) {
    const auto p = fx::load(file);
    Answer a;
    if (std::string(file) == "fan8.txt")
      a = is_strong_shelling_order(p.complex, p.listed) ? Answer::yes : Answer::no;
    else
      a = search_strong_shelling_order(p.complex).answer;
    c.expect(answer_is(a, expected), std::string(file) + " gave " + std::string(to_string(a)));
  }
  const double s = seconds_since(t0);
  c.expect(s < 10.0, "took " + std::to_string(s) + " s");
  c.why << (c.ok ? "" : "; ") << s << " s";
  return c;
}

// 2. Skeleton and pure-part counterexamples.
Check skeleton_counterexamples() {
  Check c;
  const auto strip = fx::load("strip4.txt").complex;
  const auto sk = pure_skeleton(strip, 1);
  const Face a{1, 2}, b{5, 6};
  const auto g = build_gamma(sk);
  const int dd = distance(a, b);
  const int dg = g.dist[*sk.index_of(a)][*sk.index_of(b)];
  c.expect(find_strong_shelling_order(strip).has_value(), "strip not SS");
  c.expect(!find_strong_shelling_order(sk).has_value(), "1-skeleton SS");
  c.expect(dd == 2, "dis_Delta=" + std::to_string(dd));
  c.expect(dg == 3, "dis_Gamma=" + std::to_string(dg));
  const auto mixed = fx::load("mixed3.txt").complex;
  c.expect(find_strong_shelling_order(mixed).has_value(), "mixed not SS");
  c.expect(!find_strong_shelling_order(pure_part(mixed, 2)).has_value(), "pure_2 SS");
  if (c.ok) c.why << "dis_Delta=" << dd << " dis_Gamma=" << dg;
  return c;
}

// 3. Codimension one graph table.
Check codim_table() {
  Check c;
  const auto path = fx::load("path4.txt").complex;
  const auto gp = build_gamma(path);
  const auto i12 = *path.index_of(Face{1, 2}), i45 = *path.index_of(Face{4, 5});
  c.expect(gp.dist[i12][i45] == 3, "path dis_Gamma");
  c.expect(distance(path.facet(i12), path.facet(i45)) == 2, "path dis_Delta");
  c.expect(!is_harmonious(path), "path harmonious");

  const auto hex = fx::load("hexagon.txt").complex;
  const auto gh = build_gamma(hex);
  bool cycle = gh.size() == 6 && gh.graph.edge_count() == 6;
  for (std::size_t v = 0; v < gh.size(); ++v) cycle = cycle && gh.graph.neighbors(v).size() == 2;
  const auto mh = graph_metrics(gh.graph);
  cycle = cycle && mh.connected;
  c.expect(cycle, "hexagon graph is not a 6-cycle");
  c.expect(is_harmonious(hex), "hexagon not harmonious");
  c.expect(search_distance_preserving_order(gh.graph).answer == Answer::no, "hexagon has a DPO");
  c.expect(mh.girth == 6, "hexagon girth " + std::to_string(mh.girth));

  const auto strip5 = fx::load("strip5.txt").complex;
  const auto g5 = build_gamma(strip5);
  const auto a = *strip5.index_of(Face{1, 2, 3}), b = *strip5.index_of(Face{5, 6, 7});
  c.expect(distance(strip5.facet(a), strip5.facet(b)) == 3, "strip5 dis_Delta");
  c.expect(g5.dist[a][b] == 4, "strip5 dis_Gamma");
  return c;
}

// 4 and 8 share the enumeration.
struct Enumeration {
  std::vector<Complex> complexes;
  double seconds = 0;
};

Check oracle_equivalence(const Enumeration& e) {
  Check c;
  const auto t0 = Clock::now();
  std::size_t ss = 0, sh = 0;
  for (const auto& cx : e.complexes) {
    const auto search_ss = search_strong_shelling_order(cx).answer;
    const auto h_ss = decide_strongly_shellable_via_h(cx).answer;
    const auto gamma_ss = decide_pure_ss_via_gamma(cx).answer;
    const auto search_sh = search_shelling_order(cx).answer;
    const auto h_sh = decide_shellable_via_h(cx).answer;
    const bool agree = search_ss == h_ss && h_ss == gamma_ss && search_sh == h_sh &&
                       search_ss != Answer::undecided && search_sh != Answer::undecided;
    c.expect(agree, "disagreement on " + cx.to_string());
    ss += search_ss == Answer::yes;
    sh += search_sh == Answer::yes;
  }
  // independent count by canonical augmentation over S6: 6+101+579+101+6+1
  c.expect(e.complexes.size() == 794, "enumeration size " + std::to_string(e.complexes.size()));
  const double s = seconds_since(t0) + e.seconds;
  c.expect(s < 600.0, "took " + std::to_string(s) + " s");
  c.why << (c.ok ? "" : "; ") << e.complexes.size() << " classes, " << ss
        << " strongly shellable, " << sh << " shellable, " << s << " s";
  return c;
}

Check girth_diameter(const Enumeration& e) {
  Check c;
  std::size_t checked = 0;
  for (const auto& cx : e.complexes) {
    if (!find_strong_shelling_order(cx)) continue;
    ++checked;
    const auto m = graph_metrics(build_gamma(cx).graph);
    c.expect(m.girth == 0 || m.girth == 3 || m.girth == 4, "girth on " + cx.to_string());
    c.expect(m.diameter && *m.diameter <= cx.dim() + 1, "diameter on " + cx.to_string());
  }
  c.why << (c.ok ? "" : "; ") << checked << " pure strongly shellable complexes";
  return c;
}

// 5. Closure properties.
Check closure_suite() {
  Check c;
  std::vector<Complex> pool;
  for (const auto& f : fx::small_ss_fixtures()) pool.push_back(fx::load(f).complex);
  pool.push_back(fx::load("grid76.txt").complex);
  const auto randoms = fx::random_ss_complexes(20260501, 200, false);
  pool.insert(pool.end(), randoms.begin(), randoms.end());
  const auto not_ss = fx::make({{1, 2}, {3, 4}}, 4);
  const auto small_ss = fx::make({{1, 2}, {2, 3}}, 3);
  std::mt19937_64 rng(7);
  std::size_t checks = 0;

  for (const auto& cx : pool) {
    const bool big = cx.size() > 20;
    const auto ord = find_strong_shelling_order(cx);
    c.expect(ord.has_value(), "pool member not SS");
    if (!ord) continue;
    // dimension-decreasing rearrangement
    const auto re = dimension_decreasing_reorder(cx, *ord);
    c.expect(is_strong_shelling_order(cx, re) && is_dimension_decreasing(cx, re),
             "reorder on " + cx.to_string());
    ++checks;
    // link at every face
    if (!big) {
      for (const auto& face : oracle::faces(fx::family(cx))) {
        const auto lk = link(cx, Face::from_range(face));
        if (lk.is_void()) continue;
        c.expect(find_strong_shelling_order(lk).has_value(), "link on " + cx.to_string());
        ++checks;
      }
      // join with SS and with non-SS factors
      c.expect(find_strong_shelling_order(join(cx, small_ss)).has_value(),
               "SS join on " + cx.to_string());
      c.expect(!find_strong_shelling_order(join(cx, not_ss)).has_value(),
               "non-SS join on " + cx.to_string());
      c.expect(!find_strong_shelling_order(join(not_ss, cx)).has_value(),
               "non-SS join (left) on " + cx.to_string());
      checks += 3;
      // expansion, entries at most 3
      std::vector<int> s(static_cast<std::size_t>(cx.n()));
      for (auto& x : s) x = 1 + static_cast<int>(rng() % 3);
      const auto ex = expansion(cx, std::span<const int>(s));
      c.expect(find_strong_shelling_order(ex).has_value(), "expansion on " + cx.to_string());
      ++checks;
    }
    // the complement of a full simplex is {empty set}, outside the query domain
    if (cx.is_pure() && !complement_complex(cx).is_void()) {
      c.expect(find_strong_shelling_order(complement_complex(cx)).has_value(),
               "complement on " + cx.to_string());
      ++checks;
    }
    bool has_edge_facet = false;
    for (const auto& f : cx.facets()) has_edge_facet = has_edge_facet || f.dim() == 1;
    if (has_edge_facet) {
      c.expect(find_strong_shelling_order(pure_part(cx, 1)).has_value(),
               "pure_1 on " + cx.to_string());
      ++checks;
    }
    c.expect(find_strong_shelling_order(pure_skeleton(cx, cx.dim())).has_value(),
             "top skeleton on " + cx.to_string());
    ++checks;
  }
  // the other direction: non-SS bases give non-SS expansions and joins
  std::mt19937_64 nrng(20260504);
  std::size_t non = 0;
  while (non < 100) {
    // at most 5 vertices and 4 facets: refuting larger expansions is exhaustive and slow
    const int n = 3 + static_cast<int>(nrng() % 3);
    const auto cx = fx::random_complex(nrng, n, 2 + static_cast<int>(nrng() % 3), 1, n - 1);
    if (find_strong_shelling_order(cx)) continue;
    ++non;
    std::vector<int> s(static_cast<std::size_t>(n));
    for (auto& x : s) x = 1 + static_cast<int>(nrng() % 3);
    c.expect(!find_strong_shelling_order(expansion(cx, std::span<const int>(s))).has_value(),
             "expansion of non-SS base " + cx.to_string());
    c.expect(!find_strong_shelling_order(join(cx, small_ss)).has_value(),
             "join of non-SS base " + cx.to_string());
    checks += 2;
  }
  c.why << (c.ok ? "" : "; ") << pool.size() << " complexes, " << checks << " checks";
  return c;
}

// 6. Constructors.
Check constructors() {
  Check c;
  const auto tri = spanning_forest_complex({{1, 2}, {2, 3}, {1, 3}});
  c.expect(tri == fx::make({{1, 2}, {1, 3}, {2, 3}}, 3), "triangle");
  const auto forest = fx::load("forest8.txt");
  const auto rl = reverse_lex_order(forest.complex);
  std::vector<std::string> got;
  for (auto i : rl) {
    std::string s;
    for (int v : forest.complex.facet(i).vertices()) s += std::to_string(v);
    got.push_back(s);
  }
  const std::vector<std::string> want{"124", "134", "234", "125", "135", "235", "145", "245"};
  c.expect(got == want, "reverse-lex order of forest8");
  c.expect(is_strong_shelling_order(forest.complex, rl), "forest8 reverse-lex not SS");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto m = spanning_forest_complex(fx::random_graph(rng, 7));
    c.expect(is_strong_shelling_order(m, reverse_lex_order(m)), "random matroid " + m.to_string());
  }
  return c;
}

// 7. Linear quotients.
Check linear_quotients() {
  Check c;
  std::vector<Complex> pool;
  for (const auto& f : fx::small_ss_fixtures()) {
    auto cx = fx::load(f).complex;
    if (cx.is_pure()) pool.push_back(cx);
  }
  pool.push_back(fx::load("grid76.txt").complex);
  const auto randoms = fx::random_ss_complexes(20260502, 100, true);
  pool.insert(pool.end(), randoms.begin(), randoms.end());
  for (const auto& cx : pool) {
    const auto ord = find_strong_shelling_order(cx);
    c.expect(ord && has_linear_quotients(facet_ideal(cx), *ord), "on " + cx.to_string());
  }
  const MonomialIdeal two({Monomial({1, 1}), Monomial({0, 0, 1, 1})});
  c.expect(!has_linear_quotients(two, FacetOrder({0, 1})) &&
               !has_linear_quotients(two, FacetOrder({1, 0})),
           "x1x2, x3x4 has linear quotients");
  c.why << (c.ok ? "" : "; ") << pool.size() << " complexes";
  return c;
}

// 9. Posets.
Check poset_suite() {
  Check c;
  std::mt19937_64 rng(20260503);
  std::vector<Poset> pool;
  while (pool.size() < 30) {
    auto p = fx::random_pure_poset(rng);
    if (is_strongly_shellable_poset(p) == Answer::yes) pool.push_back(p);
  }
  const auto chain2 = Poset::from_relations(2, {{1, 2}});
  const auto two_chains = Poset::from_relations(4, {{1, 2}, {3, 4}});
  c.expect(is_strongly_shellable_poset(two_chains) == Answer::no, "two chains SS");
  std::size_t checks = 0;
  for (const auto& p : pool) {
    const int r = p.length() + 1;
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::set<int> s;
      for (int k = 0; k < r; ++k)
        if ((mask >> k) & 1) s.insert(k + 1);
      c.expect(is_strongly_shellable_poset(rank_selected(p, s)) == Answer::yes, "rank selection");
      ++checks;
    }
    for (int x = 1; x <= p.size(); ++x)
      for (int y = 1; y <= p.size(); ++y)
        if (p.leq(x, y)) {
          c.expect(is_strongly_shellable_poset(interval(p, x, y)) == Answer::yes, "interval");
          ++checks;
        }
    c.expect(is_strongly_shellable_poset(ordinal_sum(p, chain2)) == Answer::yes, "sum SS+SS");
    c.expect(is_strongly_shellable_poset(ordinal_sum(p, two_chains)) == Answer::no, "sum SS+non");
    c.expect(is_strongly_shellable_poset(ordinal_sum(two_chains, p)) == Answer::no, "sum non+SS");
    checks += 3;
  }
  c.why << (c.ok ? "" : "; ") << pool.size() << " posets, " << checks << " checks";
  return c;
}

// 10. Quasi-harmonious fixtures.
Check quasi_harmonious() {
  Check c;
  const auto q = fx::load("quasi5.txt").complex;
  c.expect(is_quasi_harmonious(q), "quasi5 not quasi-harmonious");
  c.expect(!is_harmonious(q), "quasi5 harmonious");
  const auto m = fx::load("mixed6.txt").complex;
  c.expect(find_strong_shelling_order(m).has_value(), "mixed6 not SS");
  c.expect(!is_quasi_harmonious(m), "mixed6 quasi-harmonious");
  return c;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Check()>& run) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    std::printf("%s [%d] %s%s%s\n", c.ok ? "PASS" : "FAIL", id, name,
                c.why.str().empty() ? "" : " : ", c.why.str().c_str());
    std::fflush(stdout);
    failed += c.ok ? 0 : 1;
  };

  Enumeration e;
  {
    const auto t0 = Clock::now();
    e.complexes = fx::pure_complexes_up_to_iso(8);
    e.seconds = seconds_since(t0);
  }

  report(1, "fixture decision table", decision_table);
  report(2, "skeleton and pure-part counterexamples", skeleton_counterexamples);
  report(3, "codimension one graph table", codim_table);
  report(4, "oracle equivalence on pure complexes, n<=6, <=8 facets",
         [&] { return oracle_equivalence(e); });
  report(5, "closure properties", closure_suite);
  report(6, "spanning forests and reverse-lex orders", constructors);
  report(7, "linear quotients of facet ideals", linear_quotients);
  report(8, "girth and diameter bounds", [&] { return girth_diameter(e); });
  report(9, "poset constructions", poset_suite);
  report(10, "quasi-harmonious fixtures", quasi_harmonious);
  return failed == 0 ? 0 : 1;
}
