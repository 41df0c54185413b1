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

// Realizations of a fusion system by graphs of groups: the star-shaped
// Robinson tree and the one-vertex Leary-Stancu graph, plus the verifier that
// recomputes the fusion system a datum generates on S.

#ifndef FUSIONKIT_CONSTRUCTIONS_HPP
#define FUSIONKIT_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/graphs.hpp"

namespace fusionkit {

/// F-centric F-radical subgroups, ascending.
std::vector<SubgroupId> centric_radical_collection(const FusionSystem& F);
/// F-centric subgroups, ascending.
std::vector<SubgroupId> centric_collection(const FusionSystem& F);

/// F-conjugacy classes of strict chains P_0 < ... < P_k in a collection R.
struct SubdivisionPoset {
  /// Canonical representative of each class (the least chain of the class
  /// under lexicographic order of ids), sorted by (length, chain).
  std::vector<std::vector<SubgroupId>> objects;
  /// below[i]: every j with objects[i] >= objects[j], ascending (i included).
  std::vector<std::vector<std::size_t>> below;

  /// Every strict chain of R mapped to the index of its class.
  std::map<std::vector<SubgroupId>, std::size_t> class_index;

  bool geq(std::size_t i, std::size_t j) const;
  /// Throws NotAChain for chains outside R.
  std::size_t class_of(const std::vector<SubgroupId>& chain) const;
};

/// Throws NotClosedUnderConjugation, or InvalidArgument for non-centric
/// members.
SubdivisionPoset subdivision_poset(const FusionSystem& F, const std::vector<SubgroupId>& R);

/// S first, then one fully normalized and fully centralized member per
/// class of R (least id), ordered by that id. Throws NoFullyNormalizedMember
/// when a class has no such member, InvalidArgument when S is not in R.
std::vector<SubgroupId> normalized_representatives(const FusionSystem& F,
                                                   const std::vector<SubgroupId>& R);

enum class RobinsonVariant { Quotient, Original };
enum class RealizationKind { Robinson, RobinsonOriginal, LearyStancu };

/// Where S sits inside a vertex group: `local` are sorted local ids of S
/// forming a subgroup, image[i] is the vertex-group element of local[i].
struct SylowPart {
  std::vector<ElementId> local;
  std::vector<ElementId> image;
};

struct RealizationDatum {
  RealizationKind kind = RealizationKind::Robinson;
  GraphOfGroups graph;
  std::vector<EdgeId> tree;
  VertexId v0 = 0;
  std::vector<SylowPart> parts;              // one per vertex
  std::vector<SubgroupId> vertex_subgroups;  // R_i for each Robinson vertex; S for Leary-Stancu
  std::vector<Morphism> generators;          // Leary-Stancu: one per loop
};

/// Star tree with root Aut_L(S) and leaves Aut_L(R_i), Aut_L(P) realized as
/// N_G(P) / O_p'(C_G(P)). Edge groups are N_{Aut_L(S)}(R_i) (quotient) or
/// N_S(R_i) (original). F must be fusion_of_group(G, ...). Throws
/// MissingRadical when R lacks a centric radical subgroup.
RealizationDatum robinson_tree(const GroupPtr& G, const FusionSystem& F,
                               const std::vector<SubgroupId>& R, RobinsonVariant variant);

/// One vertex S and a loop y_i per phi_i : P_i -> S, with a^{y_i} = phi_i(a)
/// and a^{ybar_i} = a. Throws DoesNotGenerate when Inn(S) and Phi generate a
/// smaller system, InvalidArgument when some phi_i is not in F.
RealizationDatum leary_stancu_graph(const FusionSystem& F, const std::vector<Morphism>& phi);

/// A small generating set: automorphisms of the fully normalized
/// representatives of the centric radical classes, chosen greedily in map
/// order (inner automorphisms of S are skipped).
std::vector<Morphism> alperin_generators(const FusionSystem& F);
/// Every morphism P -> S of F with P F-centric, by (P, map).
std::vector<Morphism> centric_morphisms(const FusionSystem& F);

struct RealizationCheck {
  bool ok = true;
  std::optional<FusionDifference> witness;  // in_first: generated but not in F
  std::string detail;
};

/// Closes the conjugation data of the datum (conjugation inside each vertex
/// group among subgroups of its S-part, and a^y -> a^ybar across each edge
/// where both lie in S-parts) and compares with F.
RealizationCheck verify_realization(const RealizationDatum& datum, const FusionSystem& F);

/// Restriction of Hom(pi, Z/p) to S through the base vertex, as values on
/// the local elements of S in reduced echelon form.
std::vector<ModVector> restrict_to_sylow(const RealizationDatum& datum, const HomBasis& homs,
                                         unsigned p);

/// Vertex and edge group orders of a datum, for reports.
struct DatumSummary {
  std::vector<std::size_t> vertex_orders;
  std::vector<std::size_t> edge_orders;  // one per oriented edge
};
DatumSummary summarize(const RealizationDatum& datum);

std::string_view kind_name(RealizationKind kind) noexcept;

}  // namespace fusionkit

#endif  // FUSIONKIT_CONSTRUCTIONS_HPP
