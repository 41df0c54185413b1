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

// Fusion systems on a finite p-group S.
//
// S is copied into a standalone table group (the "local" group) and all of
// its subgroups are enumerated once into a SubgroupLattice, giving each a
// canonical id. A morphism P -> Q is stored as the array of images of the
// members of P (in sorted member order), as local element ids.
//
// A FusionSystem is kept in groupoid form. The isomorphisms of F split the
// subgroups into F-conjugacy classes. Each class has a root R (its least
// subgroup id), the full group Aut_F(R), and a transport isomorphism
// tau_P : R -> P for every member P. Then
//
//   Iso_F(P, P') = tau_P' o Aut_F(R) o tau_P^-1,
//
// and every morphism is an isomorphism onto its image followed by an
// inclusion. Transports are canonical (least image array in their coset), so
// two fusion systems on the same S are equal iff their classes, root
// automorphism groups and transports agree.

#ifndef FUSIONKIT_FUSION_HPP
#define FUSIONKIT_FUSION_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/linalg.hpp"

namespace fusionkit {

using SubgroupId = std::uint32_t;
using Map = std::vector<ElementId>;

/// A morphism between two subgroups of the lattice. images[i] is the image
/// of the i-th member of source; all images lie in target.
struct Morphism {
  SubgroupId source = 0;
  SubgroupId target = 0;
  Map images;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

class SubgroupLattice {
 public:
  /// Enumerates the subgroups of S (a p-subgroup of its parent). Throws
  /// CapExceeded when |S| exceeds cap.
  static std::shared_ptr<const SubgroupLattice> create(
      const Subgroup& S, std::size_t cap = kDefaultSubgroupCap);

  /// S as a standalone group; lattice subgroups live here.
  const GroupPtr& group() const noexcept { return local_; }
  /// S inside its original parent group.
  const Subgroup& sylow() const noexcept { return sylow_; }
  ElementId to_parent(ElementId local) const { return embedding_[local]; }
  std::optional<ElementId> to_local(ElementId parent) const;

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& at(SubgroupId id) const { return subgroups_[id]; }
  SubgroupId top() const noexcept { return static_cast<SubgroupId>(subgroups_.size() - 1); }
  std::optional<SubgroupId> find(const std::vector<ElementId>& sorted_members) const;
  /// Throws NotASubgroup when the members do not form a listed subgroup.
  SubgroupId id_of(const std::vector<ElementId>& sorted_members) const;
  /// Lattice id of a subgroup given in the parent group of S.
  SubgroupId id_of_parent_subgroup(const Subgroup& P) const;

  SubgroupId normalizer(SubgroupId id) const { return normalizer_[id]; }
  SubgroupId centralizer(SubgroupId id) const { return centralizer_[id]; }
  SubgroupId center(SubgroupId id) const { return center_[id]; }
  bool contains(SubgroupId big, SubgroupId small) const;
  /// Ids of the subgroups of P, ascending.
  std::vector<SubgroupId> subgroups_of(SubgroupId id) const;
  /// s P s^-1.
  SubgroupId conjugate(SubgroupId id, ElementId s) const;

  // Map helpers. Maps are indexed by the position of a member in its source.
  std::size_t position(SubgroupId id, ElementId x) const;
  ElementId apply(SubgroupId source, const Map& map, ElementId x) const {
    return map[position(source, x)];
  }
  Map identity_map(SubgroupId id) const;
  /// Conjugation by s restricted to P.
  Map conjugation(SubgroupId id, ElementId s) const;
  /// outer o inner, where inner has source `source` and image inside the
  /// source `mid` of outer.
  Map compose(SubgroupId mid, const Map& outer, SubgroupId source, const Map& inner) const;
  /// Inverse of an isomorphism source -> image(source, map).
  Map inverse(SubgroupId source, const Map& map) const;
  Map restrict(SubgroupId source, const Map& map, SubgroupId sub) const;
  SubgroupId image(SubgroupId source, const Map& map) const;
  bool is_monomorphism(SubgroupId source, const Map& map) const;

  GroupMono to_mono(const Morphism& m) const;

 private:
  explicit SubgroupLattice(Subgroup S) : sylow_(std::move(S)) {}

  GroupPtr local_;
  Subgroup sylow_;
  std::vector<ElementId> embedding_;
  std::unordered_map<ElementId, ElementId> reverse_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<std::vector<ElementId>, SubgroupId, VectorHash> index_;
  std::vector<SubgroupId> normalizer_, centralizer_, center_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Optional ambient group the fusion system was computed from.
struct AmbientGroup {
  GroupPtr group;
  Subgroup sylow;
};

class FusionSystem {
 public:
  struct ConjugacyClass {
    SubgroupId root;
    std::vector<SubgroupId> members;  // ascending
    std::vector<Map> automorphisms;   // all of Aut_F(root), sorted
  };

  /// Smallest fusion system whose isomorphisms contain the given ones and
  /// Hom_S. Inputs are isomorphisms P -> image; they are not restricted to
  /// subgroups here (see generate_fusion for the restriction-closed version).
  static FusionSystem from_isomorphisms(LatticePtr lattice, unsigned p,
                                        const std::vector<Morphism>& isos,
                                        bool include_inner = true);

  unsigned prime() const noexcept { return p_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const std::optional<AmbientGroup>& ambient() const noexcept { return ambient_; }
  void set_ambient(AmbientGroup a) { ambient_ = std::move(a); }

  std::size_t class_count() const noexcept { return classes_.size(); }
  const ConjugacyClass& conjugacy_class(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(SubgroupId id) const { return class_of_[id]; }
  /// Canonical transport root -> P.
  const Map& transport(SubgroupId id) const { return transport_[id]; }
  bool conjugate(SubgroupId a, SubgroupId b) const { return class_of_[a] == class_of_[b]; }

  /// Iso_F(P, P2), sorted.
  std::vector<Map> isomorphisms(SubgroupId P, SubgroupId P2) const;
  std::vector<Map> automorphisms(SubgroupId P) const { return isomorphisms(P, P); }
  std::size_t aut_order(SubgroupId P) const { return classes_[class_of_[P]].automorphisms.size(); }
  /// F(P, Q): isomorphisms onto subgroups of Q, sorted by (image id, map).
  std::vector<Morphism> homs(SubgroupId P, SubgroupId Q) const;
  bool contains_iso(SubgroupId P, SubgroupId P2, const Map& map) const;
  /// Whether the map P -> Q (images in Q) is a morphism of F.
  bool contains(SubgroupId P, SubgroupId Q, const Map& map) const;

  /// Aut_F(P) as a permutation group on the positions of P's members.
  GroupPtr automorphism_group(SubgroupId P) const;

  bool fully_normalized(SubgroupId P) const;
  bool fully_centralized(SubgroupId P) const;
  bool centric(SubgroupId P) const;
  bool radical(SubgroupId P) const;
  /// |Aut_S(P)| = |N_S(P) : C_S(P)|.
  std::size_t aut_s_order(SubgroupId P) const;

 private:
  FusionSystem() = default;

  unsigned p_ = 0;
  LatticePtr lattice_;
  std::optional<AmbientGroup> ambient_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<Map> transport_;

  friend class GroupoidBuilder;
};

// ---------------------------------------------------------------------------
// operations

/// F_S(G): morphisms are conjugations by elements of G. Throws NotSylow
/// unless S is a Sylow p-subgroup of G.
FusionSystem fusion_of_group(const GroupPtr& G, const Subgroup& S, unsigned p,
                             std::size_t subgroup_cap = kDefaultSubgroupCap);

/// Smallest fusion system on S containing Hom_S and the generators, closed
/// under composition, restriction and inverses. Generators are monomorphisms
/// between subgroups of S (in S's parent group).
FusionSystem generate_fusion(const Subgroup& S, unsigned p, const std::vector<GroupMono>& gens,
                             std::size_t subgroup_cap = kDefaultSubgroupCap);
/// Same, on an existing lattice with lattice-level morphisms.
FusionSystem generate_fusion(const LatticePtr& lattice, unsigned p,
                             const std::vector<Morphism>& gens);

struct FusionDifference {
  SubgroupId source;
  SubgroupId target;
  Map map;
  bool in_first;  // present in the first system, missing from the second
};

/// nullopt when equal; otherwise the first differing morphism in the order
/// (source id, target id, map). Throws MismatchedSylow when the systems live
/// on different groups or primes.
std::optional<FusionDifference> fusion_difference(const FusionSystem& a, const FusionSystem& b);
inline bool fusion_equal(const FusionSystem& a, const FusionSystem& b) {
  return !fusion_difference(a, b).has_value();
}

/// Throws InvalidFusion if the structural invariants fail: Hom_S contained,
/// closure under restriction, maps are monomorphisms.
void validate_fusion(const FusionSystem& F);

struct SaturationViolation {
  char axiom;            // 'a' or 'b'
  SubgroupId subgroup;   // P
  std::optional<Morphism> morphism;  // the failing phi for axiom (b)
  std::string detail;
};

struct SaturationReport {
  bool saturated = true;
  std::vector<SaturationViolation> violations;  // first failure per class and axiom
};

/// Checks both saturation axioms. Axiom (b) is checked for one fully
/// centralized target per class unless exhaustive is set.
SaturationReport check_saturation(const FusionSystem& F, bool exhaustive = false);

struct ClassInfo {
  SubgroupId representative;
  std::size_t class_size;
  bool fully_normalized;
  bool fully_centralized;
  bool centric;
  bool radical;
  std::size_t aut_order;
};

/// One row per class; representative is the least fully normalized member.
std::vector<ClassInfo> classify_subgroups(const FusionSystem& F);

/// Least fully normalized member of the class of P.
SubgroupId class_representative(const FusionSystem& F, std::size_t cls);

/// Homomorphisms S -> Z/p fixed by every morphism of F^c (of F when all_of_f
/// is set). Each is given by its values on the local elements of S; the
/// basis is in reduced echelon form.
std::vector<ModVector> stable_h1(const FusionSystem& F, bool all_of_f = false);

// ---------------------------------------------------------------------------
// text format
//
//   fusion 1
//   p <prime>
//   order <n>
//   table            n rows of n local element ids
//   subgroups <k>
//   <id> : <members...>
//   isomorphisms <m>
//   <P> <Q> : x1->y1, x2->y2, ...
//
// Only isomorphisms (Q the image of P) are listed; every other morphism is one
// of them followed by an inclusion. Lines are sorted by (P, Q, map).

std::string serialize_fusion(const FusionSystem& F);
/// Throws ParseError on malformed text, InvalidFusion when the listed maps do
/// not form a fusion system.
FusionSystem parse_fusion(const std::string& text);

}  // namespace fusionkit

#endif  // FUSIONKIT_FUSION_HPP
