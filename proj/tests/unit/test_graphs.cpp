/*
 * Copyright 2026 The fusionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/graphs.hpp"
#include "oracle.hpp"

using namespace fusionkit;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

GroupPtr cyclic(unsigned n) {
  if (n == 1) return FiniteGroup::from_table(1, {0});
  std::string cyc = "g=(";
  for (unsigned i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  return oracle::perm_group(cyc);
}

/// The map C_k -> G sending the first generator of C_k to x.
std::vector<ElementId> cyclic_map(const GroupPtr& ck, const FiniteGroup& g, ElementId x) {
  std::vector<ElementId> m(ck->order(), kNoElement);
  const ElementId c = ck->order() == 1 ? ck->identity() : ck->generators()[0];
  ElementId a = ck->identity(), b = g.identity();
  for (std::size_t i = 0; i < ck->order(); ++i) {
    m[a] = b;
    a = ck->mul(a, c);
    b = g.mul(b, x);
  }
  return m;
}

std::size_t element_order(const FiniteGroup& g, ElementId x) {
  std::size_t k = 1;
  for (ElementId y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// Adds a geometric edge o -> t whose group is <x> (x in G_o), mapped to
/// <z> in G_t; x and z must have the same order.
EdgeId add_cyclic_edge(GraphOfGroups& G, VertexId o, VertexId t, ElementId x, ElementId z) {
  const FiniteGroup& go = *G.vertex_groups[o];
  GroupPtr ck = cyclic(static_cast<unsigned>(element_order(go, x)));
  const EdgeId y = G.graph.add_edge(o, t);
  G.edge_groups.push_back(ck);
  G.edge_groups.push_back(ck);
  G.edge_maps.push_back(cyclic_map(ck, *G.vertex_groups[t], z));
  G.edge_maps.push_back(cyclic_map(ck, go, x));
  return y;
}

GraphOfGroups vertices(std::vector<GroupPtr> groups) {
  GraphOfGroups G;
  G.graph.vertex_count = groups.size();
  G.vertex_groups = std::move(groups);
  return G;
}

/// Hom(pi, Z/p) straight from the abelianized relator matrix, mapped into
/// the HomBasis column layout and echelonized.
std::vector<ModVector> relator_oracle(const GraphOfGroups& G, const std::vector<EdgeId>& tree,
                                      const HomBasis& layout, unsigned p) {
  const GroupPresentation P = pi1_presentation(G, tree);
  std::vector<ModVector> rows;
  for (const Word& w : P.relators) {
    ModVector row(P.generators.size(), 0);
    for (const Letter& l : w) row[l.generator] = (row[l.generator] + p + l.exponent) % p;
    rows.push_back(row);
  }
  std::vector<ModVector> null;
  if (rows.empty()) {
    for (std::size_t i = 0; i < P.generators.size(); ++i) {
      ModVector e(P.generators.size(), 0);
      e[i] = 1;
      null.push_back(e);
    }
  } else {
    null = ModMatrix::from_rows(rows, P.generators.size(), p).nullspace();
  }
  std::vector<ModVector> values;
  for (const ModVector& f : null) {
    ModVector v(layout.columns, 0);
    for (std::size_t i = 0; i < P.generators.size(); ++i) {
      const auto& o = P.origins[i];
      if (o.kind == GeneratorOrigin::Kind::VertexElement) {
        v[layout.vertex_offset[o.index] + o.element] = f[i];
      } else {
        auto it = std::find(layout.free_edges.begin(), layout.free_edges.end(), o.index);
        if (it != layout.free_edges.end())
          v[layout.columns - layout.free_edges.size() + (it - layout.free_edges.begin())] = f[i];
      }
    }
    values.push_back(v);
  }
  return echelon_basis(values, layout.columns, p);
}

/// Swaps y and ybar for every geometric edge.
GraphOfGroups flipped(const GraphOfGroups& G, std::vector<EdgeId>& tree) {
  GraphOfGroups F = G;
  for (EdgeId y = 0; y < G.graph.edges.size(); ++y) {
    const EdgeId r = G.graph.edges[y].reverse;
    F.graph.edges[r] = {G.graph.edges[y].origin, G.graph.edges[y].terminus, y};
    F.edge_maps[r] = G.edge_maps[y];
  }
  for (EdgeId& y : tree) y = G.graph.edges[y].reverse;
  return F;
}

}  // namespace

TEST(SerreGraph, ValidationExamples) {
  SerreGraph Y;
  Y.vertex_count = 2;
  Y.add_edge(0, 1);
  EXPECT_NO_THROW(validate_graph(Y));
  EXPECT_EQ(orientation(Y), std::vector<EdgeId>{0});

  SerreGraph fixed;
  fixed.vertex_count = 1;
  fixed.edges.push_back({0, 0, 0});
  EXPECT_EQ(code_of([&] { validate_graph(fixed); }), ErrorCode::FixedPointInvolution);

  SerreGraph loop;
  loop.vertex_count = 1;
  loop.add_edge(0, 0);
  EXPECT_NO_THROW(validate_graph(loop));

  SerreGraph bad = Y;
  bad.vertex_count = 3;
  bad.edges[1].origin = 2;
  EXPECT_EQ(code_of([&] { validate_graph(bad); }), ErrorCode::MismatchedEndpoints);
}

TEST(SerreGraph, MaximalTreeExamples) {
  SerreGraph path;
  path.vertex_count = 4;
  path.add_edge(0, 1);
  path.add_edge(2, 1);
  path.add_edge(3, 2);
  EXPECT_EQ(maximal_tree(path), (std::vector<EdgeId>{0, 2, 4}));

  SerreGraph rose;
  rose.vertex_count = 1;
  for (int i = 0; i < 3; ++i) rose.add_edge(0, 0);
  EXPECT_TRUE(maximal_tree(rose).empty());

  SerreGraph split;
  split.vertex_count = 3;
  split.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { maximal_tree(split); }), ErrorCode::Disconnected);
}

TEST(SerreGraph, TriangleTreeIsLeastSpanningTree) {
  SerreGraph tri;
  tri.vertex_count = 3;
  tri.add_edge(0, 1);
  tri.add_edge(0, 2);
  tri.add_edge(1, 2);
  // enumerate the spanning trees among pairs of geometric edges
  const std::vector<std::pair<int, int>> ends{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::vector<EdgeId>> trees;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      std::set<int> touched{ends[a].first, ends[a].second, ends[b].first, ends[b].second};
      if (touched.size() == 3) trees.push_back({EdgeId(2 * a), EdgeId(2 * b)});
    }
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(maximal_tree(tri), *std::min_element(trees.begin(), trees.end()));
}

TEST(SerreGraph, MaximalTreeSpansRandomGraphs) {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    SerreGraph Y;
    Y.vertex_count = 1 + rng() % 6;
    for (VertexId v = 1; v < Y.vertex_count; ++v) Y.add_edge(rng() % v, v);
    for (int extra = rng() % 4; extra > 0; --extra)
      Y.add_edge(rng() % Y.vertex_count, rng() % Y.vertex_count);
    auto T = maximal_tree(Y);
    EXPECT_EQ(T.size() + 1, Y.vertex_count);
    // the tree must connect everything: a second union-find pass
    std::vector<VertexId> comp(Y.vertex_count);
    std::iota(comp.begin(), comp.end(), 0);
    for (int pass = 0; pass < 8; ++pass)
      for (EdgeId y : T) {
        auto m = std::min(comp[Y.edges[y].origin], comp[Y.edges[y].terminus]);
        comp[Y.edges[y].origin] = comp[Y.edges[y].terminus] = m;
      }
    for (VertexId c : comp) EXPECT_EQ(c, 0u);
  }
}

TEST(Presentation, FormatAndParseRoundTrip) {
  const std::string text = "gen a, b, t;\nrel a^2, b^2, t a t^-1 b^-1, 1;\n";
  auto P = parse_presentation(text);
  ASSERT_EQ(P.generators.size(), 3u);
  ASSERT_EQ(P.relators.size(), 4u);
  EXPECT_EQ(P.relators[2], (Word{{2, 1}, {0, 1}, {2, -1}, {1, -1}}));
  EXPECT_EQ(format_presentation(P), text);
  EXPECT_EQ(code_of([] { parse_presentation("gen a, a;\nrel ;\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation("gen a;\nrel b;\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation("gen a;\nrel a^0;\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_presentation("gen a\nrel a;\n"); }), ErrorCode::ParseError);
}

TEST(Pi1, SingleVertexIsTheVertexGroup) {
  GraphOfGroups G = vertices({oracle::load("s3.grp")});
  auto P = pi1_presentation(G, {});
  EXPECT_EQ(P.generators.size(), 5u);
  for (unsigned p : {2u, 3u, 5u}) {
    auto H = hom_mod_p(G, {}, p);
    EXPECT_EQ(H.basis.size(), hom_to_cyclic(G.vertex_groups[0], p).size());
  }
}

TEST(Pi1, FreeProductOfTwoInvolutions) {
  GraphOfGroups G = vertices({cyclic(2), cyclic(2)});
  add_cyclic_edge(G, 0, 1, G.vertex_groups[0]->identity(), G.vertex_groups[1]->identity());
  const ElementId a = G.vertex_groups[0]->generators()[0];
  const std::string na = "v0_" + std::to_string(a), nb = "v1_" + std::to_string(a);
  EXPECT_EQ(format_presentation(pi1_presentation(G, {0})),
            "gen " + na + ", " + nb + ", y0;\nrel " + na + "^2, " + nb + "^2, y0;\n");
  EXPECT_EQ(hom_mod_p(G, {0}, 2).basis.size(), 2u);
  EXPECT_EQ(code_of([&] { pi1_presentation(G, {}); }), ErrorCode::NotATree);
}

TEST(Pi1, KleinLoopOnD8HasTwistRelators) {
  GroupPtr d8 = oracle::d8();
  GraphOfGroups G = vertices({d8});
  // V = <r^2, s> with the twist r^2 -> s -> r^2 s -> r^2
  const ElementId r = oracle::find(*d8, "(1 2 3 4)"), s = oracle::find(*d8, "(1 3)");
  const ElementId r2 = d8->mul(r, r), r2s = d8->mul(r2, s);
  const Subgroup V(d8, oracle::closure(*d8, {r2, s}));
  auto ind = induced_group(V);
  std::vector<ElementId> incl = ind.embedding, twist(ind.embedding.size());
  for (std::size_t i = 0; i < incl.size(); ++i) {
    const ElementId x = incl[i];
    twist[i] = x == r2 ? s : x == s ? r2s : x == r2s ? r2 : x;
  }
  G.graph.add_edge(0, 0);
  G.edge_groups = {ind.group, ind.group};
  G.edge_maps = {twist, incl};
  auto P = pi1_presentation(G, {});
  auto gen = [&](ElementId x) { return static_cast<std::uint32_t>(x - (x > d8->identity())); };
  const std::uint32_t t = static_cast<std::uint32_t>(P.generators.size() - 1);
  std::set<std::vector<std::pair<std::uint32_t, int>>> expected, got;
  for (ElementId a : ind.group->generators())
    expected.insert({{t, 1}, {gen(twist[a]), 1}, {t, -1}, {gen(incl[a]), -1}});
  for (const Word& w : P.relators)
    if (!w.empty() && w.front().generator == t) {
      std::vector<std::pair<std::uint32_t, int>> flat;
      for (const Letter& l : w) flat.push_back({l.generator, l.exponent});
      got.insert(flat);
    }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(P.generators[t], "y0");
}

TEST(SylowHypotheses, Examples) {
  GraphOfGroups single = vertices({oracle::s4()});
  EXPECT_TRUE(check_sylow_hypotheses(single, 2, 0).ok);

  GraphOfGroups G = vertices({cyclic(2), cyclic(2)});
  add_cyclic_edge(G, 0, 1, G.vertex_groups[0]->identity(), G.vertex_groups[1]->identity());
  auto r = check_sylow_hypotheses(G, 2, 0);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.unreachable.has_value());
  EXPECT_EQ(*r.unreachable, 1u);
  EXPECT_TRUE(check_sylow_hypotheses(G, 3, 0).ok);
}

TEST(SylowHypotheses, PathsMayPassThroughIntermediateVertices) {
  // 0 -C2-> 1 -C2-> 2 with a direct trivial edge 0 -> 2 that does not count
  GraphOfGroups G = vertices({cyclic(2), cyclic(6), cyclic(2)});
  const ElementId a0 = G.vertex_groups[0]->generators()[0];
  const FiniteGroup& c6 = *G.vertex_groups[1];
  const ElementId g6 = c6.generators()[0], inv = c6.power(g6, 3);
  const ElementId a2 = G.vertex_groups[2]->generators()[0];
  add_cyclic_edge(G, 0, 1, a0, inv);
  add_cyclic_edge(G, 1, 2, inv, a2);
  add_cyclic_edge(G, 0, 2, G.vertex_groups[0]->identity(), G.vertex_groups[2]->identity());
  EXPECT_TRUE(check_sylow_hypotheses(G, 2, 0).ok);
  EXPECT_FALSE(check_sylow_hypotheses(G, 3, 0).ok);
}

TEST(HomModP, Examples) {
  GraphOfGroups G = vertices({cyclic(2)});
  const ElementId a = G.vertex_groups[0]->generators()[0];
  add_cyclic_edge(G, 0, 0, a, a);
  EXPECT_EQ(hom_mod_p(G, {}, 2).basis.size(), 2u);  // C2 x Z
  EXPECT_EQ(hom_mod_p(G, {}, 3).basis.size(), 1u);
}

TEST(HomModP, MatchesRelatorMatrixOnRandomGraphs) {
  std::mt19937 rng(2024);
  const std::vector<GroupPtr> pool{cyclic(1), cyclic(2), cyclic(4), cyclic(6),
                                   oracle::load("s3.grp"), oracle::d8(), oracle::q8()};
  for (int round = 0; round < 40; ++round) {
    std::vector<GroupPtr> gs;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) gs.push_back(pool[rng() % pool.size()]);
    GraphOfGroups G = vertices(gs);
    const std::size_t edges = (n - 1) + rng() % 3;
    for (std::size_t e = 0; e < edges; ++e) {
      const VertexId o = e + 1 < n ? static_cast<VertexId>(rng() % (e + 1)) : rng() % n;
      const VertexId t = e + 1 < n ? static_cast<VertexId>(e + 1) : rng() % n;
      const FiniteGroup& go = *gs[o];
      const FiniteGroup& gt = *gs[t];
      // pick x in G_o and z in G_t of a common order (the identity always works)
      std::vector<std::pair<ElementId, ElementId>> pairs;
      for (ElementId x = 0; x < go.order(); ++x)
        for (ElementId z = 0; z < gt.order(); ++z)
          if (element_order(go, x) == element_order(gt, z)) pairs.push_back({x, z});
      auto [x, z] = pairs[rng() % pairs.size()];
      add_cyclic_edge(G, o, t, x, z);
    }
    auto tree = maximal_tree(G.graph);
    for (unsigned p : {2u, 3u}) {
      auto H = hom_mod_p(G, tree, p);
      EXPECT_EQ(H.basis, relator_oracle(G, tree, H, p)) << "round " << round << " p " << p;
      auto ft = tree;
      GraphOfGroups F = flipped(G, ft);
      EXPECT_EQ(hom_mod_p(F, ft, p).basis.size(), H.basis.size());
    }
  }
}
