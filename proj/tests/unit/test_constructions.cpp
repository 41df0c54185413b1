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

#include "fusionkit/constructions.hpp"
#include "fusionkit/error.hpp"
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

oracle::Set parent_members(const SubgroupLattice& L, SubgroupId id) {
  oracle::Set out;
  for (ElementId x : L.at(id).members()) out.push_back(L.to_parent(x));
  std::sort(out.begin(), out.end());
  return out;
}

struct Case {
  std::string name;
  GroupPtr g;
  unsigned p;
};

std::vector<Case> corpus_cases() {
  return {{"s3", oracle::load("s3.grp"), 2},       {"s3", oracle::load("s3.grp"), 3},
          {"a4", oracle::load("a4.grp"), 2},       {"s4", oracle::s4(), 2},
          {"d12", oracle::load("d12.grp"), 2},     {"sl2_3", oracle::load("sl2_3.grp"), 2},
          {"gl2_3", oracle::load("gl2_3.grp"), 2}, {"a6", oracle::load("a6.grp"), 2},
          {"s5", oracle::load("s5.grp"), 2}};
}

struct S4Data {
  GroupPtr g = oracle::s4();
  FusionSystem F = fusion_of_group(g, sylow_subgroup(g, 2), 2);
  SubgroupId V = F.lattice().id_of_parent_subgroup(
      Subgroup(g, oracle::members_of(g, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  SubgroupId S = F.lattice().top();
};

/// dim Hom(pi, Z/p) from the abelianized relators of a presentation.
std::size_t abelian_dim(const GroupPresentation& P, unsigned p) {
  std::vector<ModVector> rows;
  for (const Word& w : P.relators) {
    ModVector row(P.generators.size(), 0);
    for (const Letter& l : w) row[l.generator] = (row[l.generator] + p + l.exponent) % p;
    rows.push_back(row);
  }
  if (rows.empty()) return P.generators.size();
  return ModMatrix::from_rows(rows, P.generators.size(), p).nullspace().size();
}

}  // namespace

TEST(Subdivision, SingleObjectForS) {
  S4Data d;
  auto poset = subdivision_poset(d.F, {d.S});
  ASSERT_EQ(poset.objects.size(), 1u);
  EXPECT_EQ(poset.objects[0], std::vector<SubgroupId>{d.S});
}

TEST(Subdivision, MatchesChainConjugacyByGroupElements) {
  // For F = F_S(G), chains are F-conjugate exactly when one element of G
  // conjugates every member onto the corresponding member.
  for (const auto& c : corpus_cases()) {
    if (c.g->order() > 120) continue;
    FusionSystem F = fusion_of_group(c.g, sylow_subgroup(c.g, c.p), c.p);
    const auto& L = F.lattice();
    const auto R = centric_collection(F);
    auto poset = subdivision_poset(F, R);
    std::vector<std::vector<SubgroupId>> chains;
    for (const auto& [chain, cls] : poset.class_index) chains.push_back(chain);
    std::vector<std::size_t> comp(chains.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&](std::size_t i) {
      while (comp[i] != i) i = comp[i];
      return i;
    };
    for (std::size_t i = 0; i < chains.size(); ++i)
      for (std::size_t j = i + 1; j < chains.size(); ++j) {
        if (chains[i].size() != chains[j].size()) continue;
        bool conj = false;
        for (ElementId x = 0; x < c.g->order() && !conj; ++x) {
          bool all = true;
          for (std::size_t k = 0; k < chains[i].size() && all; ++k) {
            oracle::Set img;
            for (ElementId y : parent_members(L, chains[i][k])) img.push_back(c.g->conjugate(x, y));
            std::sort(img.begin(), img.end());
            all = img == parent_members(L, chains[j][k]);
          }
          conj = all;
        }
        if (conj) comp[root(i)] = root(j);
        EXPECT_EQ(conj, poset.class_index.at(chains[i]) == poset.class_index.at(chains[j]));
      }
    std::set<std::size_t> classes;
    for (std::size_t i = 0; i < chains.size(); ++i) classes.insert(root(i));
    EXPECT_EQ(classes.size(), poset.objects.size()) << c.name;
  }
}

TEST(Subdivision, OrderIsAPartialOrder) {
  S4Data d;
  auto poset = subdivision_poset(d.F, centric_collection(d.F));
  const std::size_t n = poset.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(poset.geq(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && poset.geq(i, j)) EXPECT_FALSE(poset.geq(j, i));
      for (std::size_t k = 0; k < n; ++k)
        if (poset.geq(i, j) && poset.geq(j, k)) EXPECT_TRUE(poset.geq(i, k));
    }
  }
  const std::size_t vd = poset.class_of({d.V, d.S});
  EXPECT_TRUE(poset.geq(vd, poset.class_of({d.V})));
  EXPECT_TRUE(poset.geq(vd, poset.class_of({d.S})));
  EXPECT_FALSE(poset.geq(poset.class_of({d.V}), vd));
}

TEST(Subdivision, RejectsCollectionsNotClosedUnderConjugation) {
  for (const auto& c : corpus_cases()) {
    FusionSystem F = fusion_of_group(c.g, sylow_subgroup(c.g, c.p), c.p);
    for (SubgroupId P : centric_collection(F))
      if (F.conjugacy_class(F.class_of(P)).members.size() > 1) {
        EXPECT_EQ(code_of([&] { subdivision_poset(F, {P, F.lattice().top()}); }),
                  ErrorCode::NotClosedUnderConjugation);
        return;
      }
  }
  FAIL() << "expected a centric class with two members";
}

TEST(Representatives, S4Examples) {
  S4Data d;
  EXPECT_EQ(normalized_representatives(d.F, {d.S}), std::vector<SubgroupId>{d.S});
  EXPECT_EQ(normalized_representatives(d.F, centric_radical_collection(d.F)),
            (std::vector<SubgroupId>{d.S, d.V}));
  EXPECT_EQ(normalized_representatives(d.F, centric_collection(d.F)).size(), 4u);
}

TEST(Representatives, AreFullyNormalizedByDirectScan) {
  for (const auto& c : corpus_cases()) {
    FusionSystem F = fusion_of_group(c.g, sylow_subgroup(c.g, c.p), c.p);
    const auto& L = F.lattice();
    const auto& s = L.sylow().member_vector();
    auto n_s = [&](SubgroupId P) {
      std::size_t k = 0;
      for (ElementId x : oracle::normalizer(*c.g, parent_members(L, P))) k += oracle::contains(s, x);
      return k;
    };
    for (SubgroupId R : normalized_representatives(F, centric_collection(F))) {
      for (SubgroupId Q : F.conjugacy_class(F.class_of(R)).members) EXPECT_GE(n_s(R), n_s(Q));
    }
  }
}

TEST(Robinson, S4Tree) {
  S4Data d;
  for (auto variant : {RobinsonVariant::Quotient, RobinsonVariant::Original}) {
    auto datum = robinson_tree(d.g, d.F, centric_radical_collection(d.F), variant);
    auto sum = summarize(datum);
    EXPECT_EQ(sum.vertex_orders, (std::vector<std::size_t>{8, 24}));
    EXPECT_EQ(sum.edge_orders, (std::vector<std::size_t>{8, 8}));
    EXPECT_TRUE(check_sylow_hypotheses(datum.graph, 2, datum.v0).ok);
    auto check = verify_realization(datum, d.F);
    EXPECT_TRUE(check.ok) << check.detail;
  }
}

TEST(Robinson, MissingRadicalIsRejected) {
  S4Data d;
  EXPECT_EQ(code_of([&] { robinson_tree(d.g, d.F, {d.S}, RobinsonVariant::Quotient); }),
            ErrorCode::MissingRadical);
}

TEST(Robinson, SylowFusionOfAPGroup) {
  GroupPtr d8 = oracle::d8();
  FusionSystem F = fusion_of_group(d8, sylow_subgroup(d8, 2), 2);
  auto datum = robinson_tree(d8, F, centric_collection(F), RobinsonVariant::Quotient);
  EXPECT_TRUE(check_sylow_hypotheses(datum.graph, 2, 0).ok);
  EXPECT_TRUE(verify_realization(datum, F).ok);
  for (const auto& g : datum.graph.vertex_groups) EXPECT_TRUE(is_power_of(g->order(), 2));
}

TEST(Robinson, CorpusRealizesAndMatchesStableElements) {
  for (const auto& c : corpus_cases()) {
    FusionSystem F = fusion_of_group(c.g, sylow_subgroup(c.g, c.p), c.p);
    const auto stable = stable_h1(F);
    for (const auto& R : {centric_radical_collection(F), centric_collection(F)}) {
      auto q = robinson_tree(c.g, F, R, RobinsonVariant::Quotient);
      auto o = robinson_tree(c.g, F, R, RobinsonVariant::Original);
      for (const auto* datum : {&q, &o}) {
        EXPECT_TRUE(check_sylow_hypotheses(datum->graph, c.p, datum->v0).ok) << c.name;
        auto check = verify_realization(*datum, F);
        EXPECT_TRUE(check.ok) << c.name << ": " << check.detail;
        auto homs = hom_mod_p(datum->graph, datum->tree, c.p);
        EXPECT_EQ(restrict_to_sylow(*datum, homs, c.p), stable) << c.name;
        EXPECT_EQ(homs.basis.size(), abelian_dim(pi1_presentation(datum->graph, datum->tree), c.p));
      }
      // the original edge group is a Sylow subgroup of the quotient one
      auto sq = summarize(q), so = summarize(o);
      for (std::size_t e = 0; e < sq.edge_orders.size(); ++e) {
        std::size_t part = 1, n = sq.edge_orders[e];
        while (n % c.p == 0) {
          n /= c.p;
          part *= c.p;
        }
        EXPECT_EQ(so.edge_orders[e], part) << c.name;
      }
    }
  }
}

TEST(Robinson, S4DegreeOneSpotValue) {
  S4Data d;
  auto datum = robinson_tree(d.g, d.F, centric_radical_collection(d.F), RobinsonVariant::Quotient);
  auto homs = hom_mod_p(datum.graph, datum.tree, 2);
  EXPECT_EQ(restrict_to_sylow(datum, homs, 2).size(), 1u);
  EXPECT_EQ(stable_h1(d.F).size(), 1u);
}

TEST(LearyStancu, EmptyGeneratorsOnSylowFusion) {
  GroupPtr d8 = oracle::d8();
  FusionSystem F = fusion_of_group(d8, sylow_subgroup(d8, 2), 2);
  auto datum = leary_stancu_graph(F, {});
  EXPECT_TRUE(datum.graph.graph.edges.empty());
  EXPECT_TRUE(verify_realization(datum, F).ok);
  auto P = pi1_presentation(datum.graph, datum.tree);
  EXPECT_EQ(P.generators.size(), 7u);
  EXPECT_EQ(abelian_dim(P, 2), 2u);
}

TEST(LearyStancu, S4WithKleinRotation) {
  S4Data d;
  const auto& L = d.F.lattice();
  Map rot;
  const ElementId c = oracle::find(*d.g, "(1 2 3)");
  for (ElementId x : L.at(d.V).members()) rot.push_back(*L.to_local(d.g->conjugate(c, L.to_parent(x))));
  auto datum = leary_stancu_graph(d.F, {{d.V, d.S, rot}});
  EXPECT_EQ(datum.graph.graph.edges.size(), 2u);
  EXPECT_TRUE(verify_realization(datum, d.F).ok);
  auto homs = hom_mod_p(datum.graph, datum.tree, 2);
  EXPECT_EQ(homs.basis.size(), abelian_dim(pi1_presentation(datum.graph, datum.tree), 2));
  EXPECT_EQ(code_of([&] { leary_stancu_graph(d.F, {}); }), ErrorCode::DoesNotGenerate);
}

TEST(LearyStancu, DroppedGeneratorIsReported) {
  S4Data d;
  FusionSystem inner = generate_fusion(d.F.lattice_ptr(), 2, {});
  auto datum = leary_stancu_graph(inner, {});
  auto check = verify_realization(datum, d.F);
  ASSERT_FALSE(check.ok);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_FALSE(check.witness->in_first);
  EXPECT_EQ(inner.aut_order(d.V), 2u);
  EXPECT_EQ(d.F.aut_order(d.V), 6u);
}

TEST(LearyStancu, CorpusWithChosenAndAllGenerators) {
  for (const auto& c : corpus_cases()) {
    FusionSystem F = fusion_of_group(c.g, sylow_subgroup(c.g, c.p), c.p);
    auto chosen = leary_stancu_graph(F, alperin_generators(F));
    EXPECT_TRUE(verify_realization(chosen, F).ok) << c.name;
    const auto all = centric_morphisms(F);
    std::size_t expected = 0;
    for (SubgroupId P : centric_collection(F)) expected += F.homs(P, F.lattice().top()).size();
    EXPECT_EQ(all.size(), expected);
    auto full = leary_stancu_graph(F, all);
    EXPECT_EQ(full.graph.graph.edges.size(), 2 * all.size());
    EXPECT_TRUE(verify_realization(full, F).ok) << c.name;
  }
}

TEST(LearyStancu, RejectsMorphismsOutsideF) {
  S4Data d;
  FusionSystem inner = generate_fusion(d.F.lattice_ptr(), 2, {});
  const auto& L = d.F.lattice();
  Map rot;
  const ElementId c = oracle::find(*d.g, "(1 2 3)");
  for (ElementId x : L.at(d.V).members()) rot.push_back(*L.to_local(d.g->conjugate(c, L.to_parent(x))));
  EXPECT_EQ(code_of([&] { leary_stancu_graph(inner, {{d.V, d.S, rot}}); }), ErrorCode::InvalidArgument);
}
