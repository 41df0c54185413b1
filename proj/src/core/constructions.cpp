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

#include "fusionkit/constructions.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

Subgroup ambient_subgroup(const SubgroupLattice& L, SubgroupId P) {
  std::vector<ElementId> members;
  for (ElementId x : L.at(P).members()) members.push_back(L.to_parent(x));
  std::sort(members.begin(), members.end());
  return Subgroup(L.sylow().parent_ptr(), std::move(members));
}

std::string describe(const Morphism& m) {
  return std::to_string(m.source) + " -> " + std::to_string(m.target);
}

/// Sorted, duplicate-free copy of R with every id checked against the lattice.
std::vector<SubgroupId> normalize_collection(const FusionSystem& F, std::vector<SubgroupId> R) {
  std::sort(R.begin(), R.end());
  R.erase(std::unique(R.begin(), R.end()), R.end());
  for (SubgroupId P : R)
    if (P >= F.lattice().size())
      throw Error(ErrorCode::InvalidArgument, "unknown subgroup id " + std::to_string(P));
  return R;
}

void require_closed(const FusionSystem& F, const std::vector<SubgroupId>& R) {
  for (SubgroupId P : R)
    for (SubgroupId Q : F.conjugacy_class(F.class_of(P)).members)
      if (!std::binary_search(R.begin(), R.end(), Q))
        throw Error(ErrorCode::NotClosedUnderConjugation,
                    "subgroup " + std::to_string(Q) + " is F-conjugate to " + std::to_string(P) +
                        " but missing from the collection");
}

}  // namespace

std::vector<SubgroupId> centric_radical_collection(const FusionSystem& F) {
  std::vector<SubgroupId> out;
  for (SubgroupId P = 0; P < F.lattice().size(); ++P)
    if (F.centric(P) && F.radical(P)) out.push_back(P);
  return out;
}

std::vector<SubgroupId> centric_collection(const FusionSystem& F) {
  std::vector<SubgroupId> out;
  for (SubgroupId P = 0; P < F.lattice().size(); ++P)
    if (F.centric(P)) out.push_back(P);
  return out;
}

// ---------------------------------------------------------------------------
// subdivision poset

bool SubdivisionPoset::geq(std::size_t i, std::size_t j) const {
  return std::binary_search(below.at(i).begin(), below.at(i).end(), j);
}

std::size_t SubdivisionPoset::class_of(const std::vector<SubgroupId>& chain) const {
  auto it = class_index.find(chain);
  if (it == class_index.end()) throw Error(ErrorCode::NotAChain, "not a strict chain of the collection");
  return it->second;
}

SubdivisionPoset subdivision_poset(const FusionSystem& F, const std::vector<SubgroupId>& R_in) {
  const SubgroupLattice& L = F.lattice();
  const auto R = normalize_collection(F, R_in);
  for (SubgroupId P : R)
    if (!F.centric(P))
      throw Error(ErrorCode::InvalidArgument, "subgroup " + std::to_string(P) + " is not F-centric");
  require_closed(F, R);

  std::vector<std::vector<SubgroupId>> chains;
  std::vector<SubgroupId> current;
  auto extend = [&](auto&& self) -> void {
    chains.push_back(current);
    for (SubgroupId Q : R)
      if (Q != current.back() && L.contains(Q, current.back())) {
        current.push_back(Q);
        self(self);
        current.pop_back();
      }
  };
  for (SubgroupId P : R) {
    current = {P};
    extend(extend);
  }

  // canonical form: least image of the chain under isomorphisms out of its top
  auto canonical = [&](const std::vector<SubgroupId>& chain) {
    const SubgroupId top = chain.back();
    std::vector<SubgroupId> best;
    for (SubgroupId X : F.conjugacy_class(F.class_of(top)).members)
      for (const Map& a : F.isomorphisms(top, X)) {
        std::vector<SubgroupId> img;
        for (SubgroupId P : chain) img.push_back(L.image(P, L.restrict(top, a, P)));
        if (best.empty() || img < best) best = std::move(img);
      }
    return best;
  };
  std::map<std::vector<SubgroupId>, std::vector<SubgroupId>> canon;
  std::set<std::pair<std::size_t, std::vector<SubgroupId>>> reps;
  for (const auto& c : chains) {
    auto k = canonical(c);
    reps.insert({k.size(), k});
    canon.emplace(c, std::move(k));
  }
  SubdivisionPoset out;
  std::map<std::vector<SubgroupId>, std::size_t> rep_index;
  for (const auto& [len, k] : reps) {
    rep_index.emplace(k, out.objects.size());
    out.objects.push_back(k);
  }
  for (const auto& [c, k] : canon) out.class_index.emplace(c, rep_index.at(k));
  for (const auto& obj : out.objects) {
    std::set<std::size_t> below;
    const std::size_t n = obj.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<SubgroupId> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(obj[i]);
      below.insert(out.class_index.at(sub));
    }
    out.below.emplace_back(below.begin(), below.end());
  }
  return out;
}

std::vector<SubgroupId> normalized_representatives(const FusionSystem& F,
                                                   const std::vector<SubgroupId>& R_in) {
  const auto R = normalize_collection(F, R_in);
  const SubgroupId top = F.lattice().top();
  if (!std::binary_search(R.begin(), R.end(), top))
    throw Error(ErrorCode::InvalidArgument, "the collection must contain S");
  require_closed(F, R);
  std::vector<SubgroupId> others;
  std::set<std::size_t> seen{F.class_of(top)};
  for (SubgroupId P : R) {
    if (!seen.insert(F.class_of(P)).second) continue;
    std::optional<SubgroupId> pick;
    for (SubgroupId Q : F.conjugacy_class(F.class_of(P)).members)
      if (F.fully_normalized(Q) && F.fully_centralized(Q)) {
        pick = Q;
        break;
      }
    if (!pick)
      throw Error(ErrorCode::NoFullyNormalizedMember,
                  "the class of subgroup " + std::to_string(P) +
                      " has no fully normalized, fully centralized member");
    others.push_back(*pick);
  }
  std::sort(others.begin(), others.end());
  others.insert(others.begin(), top);
  return others;
}

// ---------------------------------------------------------------------------
// Robinson tree

namespace {

/// Aut_L(P) = N_G(P) / Theta(P) with the canonical Theta.
struct LocalGroup {
  Subgroup normalizer;
  Subgroup theta;
  QuotientGroup quotient;
};

LocalGroup local_group(const GroupPtr& G, const SubgroupLattice& L, SubgroupId P, unsigned p) {
  const Subgroup Pa = ambient_subgroup(L, P);
  Subgroup N = normalizer(G, Pa);
  Subgroup theta = p_prime_core(centralizer(G, Pa), p);
  QuotientGroup q = quotient_group(N, theta);
  return {std::move(N), std::move(theta), std::move(q)};
}

SylowPart part_of(const SubgroupLattice& L, SubgroupId P, const LocalGroup& lg) {
  SylowPart part;
  for (ElementId s : L.at(L.normalizer(P)).members()) {
    part.local.push_back(s);
    part.image.push_back(lg.quotient.coset_of.at(L.to_parent(s)));
  }
  return part;
}

}  // namespace

RealizationDatum robinson_tree(const GroupPtr& G, const FusionSystem& F,
                               const std::vector<SubgroupId>& R_in, RobinsonVariant variant) {
  if (!F.ambient() || F.ambient()->group != G)
    throw Error(ErrorCode::InvalidArgument, "fusion system was not computed from this group");
  const SubgroupLattice& L = F.lattice();
  const unsigned p = F.prime();
  const auto R = normalize_collection(F, R_in);
  for (SubgroupId P : R)
    if (!F.centric(P))
      throw Error(ErrorCode::InvalidArgument, "subgroup " + std::to_string(P) + " is not F-centric");
  for (SubgroupId P : centric_radical_collection(F))
    if (!std::binary_search(R.begin(), R.end(), P))
      throw Error(ErrorCode::MissingRadical,
                  "centric radical subgroup " + std::to_string(P) + " is missing from the collection");
  const auto reps = normalized_representatives(F, R);

  RealizationDatum d;
  d.kind = variant == RobinsonVariant::Quotient ? RealizationKind::Robinson
                                                : RealizationKind::RobinsonOriginal;
  d.vertex_subgroups = reps;
  d.graph.graph.vertex_count = reps.size();
  std::vector<LocalGroup> locals;
  for (SubgroupId P : reps) {
    locals.push_back(local_group(G, L, P, p));
    d.graph.vertex_groups.push_back(locals.back().quotient.group);
    d.parts.push_back(part_of(L, P, locals.back()));
  }
  const LocalGroup& root = locals.front();
  for (VertexId i = 1; i < reps.size(); ++i) {
    const LocalGroup& leaf = locals[i];
    GroupPtr edge;
    std::vector<ElementId> to_leaf, to_root;
    if (variant == RobinsonVariant::Quotient) {
      // N_{Aut_L(S)}(R_i) = (N_G(S) n N_G(R_i)) / Theta(S); restriction to
      // R_i is x Theta(S) -> x Theta(R_i)
      const Subgroup E = normalizer_in(root.normalizer, ambient_subgroup(L, reps[i]));
      const QuotientGroup q = quotient_group(E, root.theta);
      edge = q.group;
      for (ElementId x : q.representatives) {
        to_leaf.push_back(leaf.quotient.coset_of.at(x));
        to_root.push_back(root.quotient.coset_of.at(x));
      }
    } else {
      const InducedGroup ns = induced_group(ambient_subgroup(L, L.normalizer(reps[i])));
      edge = ns.group;
      for (ElementId x : ns.embedding) {
        to_leaf.push_back(leaf.quotient.coset_of.at(x));
        to_root.push_back(root.quotient.coset_of.at(x));
      }
    }
    const EdgeId y = d.graph.graph.add_edge(0, i);
    d.graph.edge_groups.push_back(edge);
    d.graph.edge_groups.push_back(edge);
    d.graph.edge_maps.push_back(std::move(to_leaf));
    d.graph.edge_maps.push_back(std::move(to_root));
    d.tree.push_back(y);
  }
  validate_graph_of_groups(d.graph);
  return d;
}

// ---------------------------------------------------------------------------
// Leary-Stancu graph

RealizationDatum leary_stancu_graph(const FusionSystem& F, const std::vector<Morphism>& phi) {
  const SubgroupLattice& L = F.lattice();
  const SubgroupId top = L.top();
  std::vector<Morphism> gens;
  for (const Morphism& m : phi) {
    if (m.source >= L.size() || m.images.size() != L.at(m.source).order() ||
        !L.is_monomorphism(m.source, m.images) || !F.contains(m.source, top, m.images))
      throw Error(ErrorCode::InvalidArgument, "generator " + describe(m) + " is not a morphism of F");
    gens.push_back({m.source, top, m.images});
  }
  const FusionSystem generated = generate_fusion(F.lattice_ptr(), F.prime(), gens);
  if (auto diff = fusion_difference(generated, F)) {
    Morphism miss{diff->source, diff->target, diff->map};
    throw Error(ErrorCode::DoesNotGenerate,
                "Inn(S) and the generators miss the F-class of the morphism " + describe(miss));
  }

  RealizationDatum d;
  d.kind = RealizationKind::LearyStancu;
  d.graph.graph.vertex_count = 1;
  d.graph.vertex_groups.push_back(L.group());
  SylowPart part;
  for (ElementId s = 0; s < L.group()->order(); ++s) {
    part.local.push_back(s);
    part.image.push_back(s);
  }
  d.parts.push_back(std::move(part));
  d.vertex_subgroups.push_back(top);
  for (const Morphism& m : gens) {
    const InducedGroup P = induced_group(L.at(m.source));
    std::vector<ElementId> twisted, included;
    for (ElementId x : P.embedding) {
      twisted.push_back(L.apply(m.source, m.images, x));
      included.push_back(x);
    }
    d.graph.graph.add_edge(0, 0);
    d.graph.edge_groups.push_back(P.group);
    d.graph.edge_groups.push_back(P.group);
    d.graph.edge_maps.push_back(std::move(twisted));
    d.graph.edge_maps.push_back(std::move(included));
  }
  d.generators = std::move(gens);
  validate_graph_of_groups(d.graph);
  return d;
}

std::vector<Morphism> alperin_generators(const FusionSystem& F) {
  const SubgroupLattice& L = F.lattice();
  const SubgroupId top = L.top();
  const auto cr = centric_radical_collection(F);
  std::vector<SubgroupId> reps;
  {
    std::vector<SubgroupId> R = cr;
    if (!std::binary_search(R.begin(), R.end(), top)) {
      R.push_back(top);
      std::sort(R.begin(), R.end());
    }
    reps = normalized_representatives(F, R);
  }
  std::vector<Morphism> out;
  for (SubgroupId P : reps) {
    std::vector<Map> chosen;
    if (P == top)
      for (ElementId s : L.group()->generators()) chosen.push_back(L.conjugation(P, s));
    auto close = [&] {
      std::set<Map> group{L.identity_map(P)};
      std::vector<Map> frontier{L.identity_map(P)};
      while (!frontier.empty()) {
        std::vector<Map> next;
        for (const Map& b : frontier)
          for (const Map& g : chosen) {
            Map c = L.compose(P, g, P, b);
            if (group.insert(c).second) next.push_back(std::move(c));
          }
        frontier = std::move(next);
      }
      return group;
    };
    std::set<Map> generated = close();
    for (const Map& a : F.automorphisms(P)) {
      if (generated.count(a)) continue;
      chosen.push_back(a);
      out.push_back({P, top, a});
      generated = close();
    }
  }
  return out;
}

std::vector<Morphism> centric_morphisms(const FusionSystem& F) {
  std::vector<Morphism> out;
  const SubgroupId top = F.lattice().top();
  for (SubgroupId P : centric_collection(F))
    for (Morphism& m : F.homs(P, top)) out.push_back(std::move(m));
  return out;
}

// ---------------------------------------------------------------------------
// verification

RealizationCheck verify_realization(const RealizationDatum& datum, const FusionSystem& F) {
  const SubgroupLattice& L = F.lattice();
  const GraphOfGroups& G = datum.graph;
  validate_graph_of_groups(G);
  const SerreGraph& Y = G.graph;
  if (datum.parts.size() != Y.vertex_count || datum.v0 >= Y.vertex_count)
    throw Error(ErrorCode::InvalidArgument, "datum has no S-part for every vertex");
  if (datum.parts[datum.v0].local.size() != L.group()->order())
    throw Error(ErrorCode::InvalidArgument, "S does not embed in the base vertex group");

  std::vector<std::unordered_map<ElementId, ElementId>> back(Y.vertex_count);
  std::vector<SubgroupId> part_id;
  for (VertexId v = 0; v < Y.vertex_count; ++v) {
    const SylowPart& part = datum.parts[v];
    for (std::size_t i = 0; i < part.local.size(); ++i) back[v].emplace(part.image[i], part.local[i]);
    part_id.push_back(L.id_of(part.local));
  }

  std::set<Morphism> gens;
  for (VertexId v = 0; v < Y.vertex_count; ++v) {
    const FiniteGroup& gv = *G.vertex_groups[v];
    const SylowPart& part = datum.parts[v];
    std::unordered_map<ElementId, ElementId> fwd;
    for (std::size_t i = 0; i < part.local.size(); ++i) fwd.emplace(part.local[i], part.image[i]);
    const auto subs = L.subgroups_of(part_id[v]);
    for (ElementId g = 0; g < gv.order(); ++g)
      for (SubgroupId P : subs) {
        Map m;
        for (ElementId x : L.at(P).members()) {
          auto it = back[v].find(gv.conjugate(g, fwd.at(x)));
          if (it == back[v].end()) break;
          m.push_back(it->second);
        }
        if (m.size() == L.at(P).order()) gens.insert({P, L.image(P, m), std::move(m)});
      }
  }
  // conjugation by the letter y carries a^y to a^ybar
  for (EdgeId y = 0; y < Y.edges.size(); ++y) {
    const EdgeId yb = Y.edges[y].reverse;
    const VertexId t = Y.edges[y].terminus, o = Y.edges[yb].terminus;
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (ElementId a = 0; a < G.edge_groups[y]->order(); ++a) {
      auto u = back[t].find(G.edge_maps[y][a]);
      auto w = back[o].find(G.edge_maps[yb][a]);
      if (u != back[t].end() && w != back[o].end()) pairs.emplace_back(u->second, w->second);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<ElementId> dom;
    Map m;
    for (auto [s, r] : pairs) {
      dom.push_back(s);
      m.push_back(r);
    }
    const auto id = L.find(dom);
    if (!id) throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(y) + " meets S in a non-subgroup");
    gens.insert({*id, L.image(*id, m), std::move(m)});
  }

  const FusionSystem generated =
      generate_fusion(F.lattice_ptr(), F.prime(), std::vector<Morphism>(gens.begin(), gens.end()));
  RealizationCheck out;
  out.witness = fusion_difference(generated, F);
  out.ok = !out.witness;
  if (out.witness) {
    Morphism m{out.witness->source, out.witness->target, out.witness->map};
    out.detail = out.witness->in_first ? "generated morphism " + describe(m) + " is not in F"
                                       : "morphism " + describe(m) + " of F is not generated";
  }
  return out;
}

std::vector<ModVector> restrict_to_sylow(const RealizationDatum& datum, const HomBasis& homs,
                                         unsigned p) {
  const SylowPart& part = datum.parts.at(datum.v0);
  const std::size_t offset = homs.vertex_offset.at(datum.v0);
  std::vector<ModVector> values;
  for (const ModVector& f : homs.basis) {
    ModVector v(part.local.size(), 0);
    for (std::size_t i = 0; i < part.local.size(); ++i) v[part.local[i]] = f[offset + part.image[i]];
    values.push_back(std::move(v));
  }
  return echelon_basis(values, part.local.size(), p);
}

DatumSummary summarize(const RealizationDatum& datum) {
  DatumSummary s;
  for (const auto& g : datum.graph.vertex_groups) s.vertex_orders.push_back(g->order());
  for (const auto& g : datum.graph.edge_groups) s.edge_orders.push_back(g->order());
  return s;
}

std::string_view kind_name(RealizationKind kind) noexcept {
  switch (kind) {
    case RealizationKind::Robinson:
      return "robinson";
    case RealizationKind::RobinsonOriginal:
      return "robinson-original";
    case RealizationKind::LearyStancu:
      return "leary-stancu";
  }
  return "unknown";
}

}  // namespace fusionkit
