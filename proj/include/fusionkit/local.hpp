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

// Local categories over a fusion system: transporter and orbit categories,
// signaliser functors, and the quotient linking system
//
//   L(P, Q) = N_pi(P, Q) / Theta(P)
//
// whose morphisms are cosets g Theta(P), each named by its least element.

#ifndef FUSIONKIT_LOCAL_HPP
#define FUSIONKIT_LOCAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/fusion.hpp"

namespace fusionkit {

// ---------------------------------------------------------------------------
// transporter and orbit categories

class TransporterCategory {
 public:
  TransporterCategory(GroupPtr pi, LatticePtr lattice, std::vector<SubgroupId> objects);

  const std::vector<SubgroupId>& objects() const noexcept { return objects_; }
  /// N_pi(P, Q), sorted ambient ids.
  const std::vector<ElementId>& morphisms(SubgroupId P, SubgroupId Q) const;
  /// The functor to F_S(pi): conjugation by g as a map P -> Q.
  Map project(SubgroupId P, ElementId g) const;
  const GroupPtr& ambient() const noexcept { return pi_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }

 private:
  GroupPtr pi_;
  LatticePtr lattice_;
  std::vector<SubgroupId> objects_;
  std::map<std::pair<SubgroupId, SubgroupId>, std::vector<ElementId>> mor_;
};

/// Throws NotASubgroup unless the lattice's S lives in pi.
TransporterCategory transporter_category(const GroupPtr& pi, const LatticePtr& lattice,
                                         std::vector<SubgroupId> objects);

class OrbitCategory {
 public:
  const std::vector<SubgroupId>& objects() const noexcept { return objects_; }
  /// Inn(Q)-orbits of F(P, Q), each named by its least map; sorted.
  const std::vector<Map>& morphisms(SubgroupId P, SubgroupId Q) const;
  /// Orbit name of an arbitrary morphism P -> Q.
  Map orbit_of(SubgroupId P, SubgroupId Q, const Map& m) const;
  /// [psi] o [phi] for phi : P -> Q and psi : Q -> R.
  Map compose(SubgroupId P, SubgroupId Q, SubgroupId R, const Map& phi, const Map& psi) const;

 private:
  friend OrbitCategory orbit_category(const FusionSystem&, std::vector<SubgroupId>);
  const FusionSystem* F_ = nullptr;
  std::vector<SubgroupId> objects_;
  std::map<std::pair<SubgroupId, SubgroupId>, std::vector<Map>> mor_;
};

/// Builds the orbit category and checks that composition of orbits is well
/// defined (throws IllDefinedComposition otherwise). F must outlive it.
OrbitCategory orbit_category(const FusionSystem& F, std::vector<SubgroupId> objects);

/// Ids of the F-centric subgroups, ascending.
std::vector<SubgroupId> centric_subgroups(const FusionSystem& F);

// ---------------------------------------------------------------------------
// signaliser functors

/// Theta(P) as a subgroup of the ambient group, for each F-centric P.
struct SignaliserFunctor {
  std::map<SubgroupId, Subgroup> theta;
};

struct SignaliserViolation {
  std::string condition;  // "complement" or "transport"
  SubgroupId P;
  SubgroupId Q;
  ElementId g;  // ambient element for "transport"; kNoElement otherwise
};

/// Theta(P) = O_p'(C_G(P)). F must be fusion_of_group(G, S, p). Throws
/// NotComplement if the result fails validation.
SignaliserFunctor canonical_signaliser(const GroupPtr& G, const FusionSystem& F);

/// Checks Theta(P) n Z(P) = 1, Theta(P) Z(P) = C_pi(P), and
/// Theta(Q) <= g Theta(P) g^-1 whenever g P g^-1 <= Q, over all centric P, Q.
std::optional<SignaliserViolation> validate_signaliser(const GroupPtr& pi, const FusionSystem& F,
                                                       const SignaliserFunctor& theta);

// ---------------------------------------------------------------------------
// linking systems

class LinkingSystem {
 public:
  struct Arrow {
    ElementId rep;   // least element of the coset g Theta(P)
    Map projection;  // pi(f) : P -> Q as images of P's members
  };

  const GroupPtr& ambient() const noexcept { return pi_; }
  const FusionSystem& fusion() const noexcept { return *F_; }
  const std::vector<SubgroupId>& objects() const noexcept { return objects_; }
  bool is_object(SubgroupId P) const;
  const Subgroup& theta(SubgroupId P) const { return theta_.at(P); }

  /// L(P, Q), sorted by representative.
  const std::vector<Arrow>& arrows(SubgroupId P, SubgroupId Q) const;
  /// Index of the arrow with the given coset representative, if any.
  std::optional<std::size_t> find(SubgroupId P, SubgroupId Q, ElementId rep) const;
  /// Least element of g Theta(P).
  ElementId coset_rep(SubgroupId P, ElementId g) const;
  /// g o f for f in L(P, Q) and g in L(Q, R), as an index into L(P, R).
  std::size_t compose(SubgroupId P, SubgroupId Q, SubgroupId R, std::size_t f,
                      std::size_t g) const;
  /// delta(s) for s in N_S(P, Q), s a local element of S.
  std::size_t delta(SubgroupId P, SubgroupId Q, ElementId s) const;
  std::size_t aut_order(SubgroupId P) const { return arrows(P, P).size(); }

  /// Assembles a linking system from explicit data without any checks; the
  /// delta table maps each local s in N_S(P, Q) to an arrow index. Used to
  /// build deliberately broken systems.
  static LinkingSystem assemble(GroupPtr pi, const FusionSystem& F,
                                std::map<SubgroupId, Subgroup> theta,
                                std::map<std::pair<SubgroupId, SubgroupId>, std::vector<Arrow>> arrows,
                                std::map<std::pair<SubgroupId, SubgroupId>,
                                         std::map<ElementId, std::size_t>> delta);
  /// Mutable access for corruption tests.
  std::vector<Arrow>& mutable_arrows(SubgroupId P, SubgroupId Q) { return arrows_.at({P, Q}); }
  std::map<ElementId, std::size_t>& mutable_delta(SubgroupId P, SubgroupId Q) {
    return delta_.at({P, Q});
  }

 private:
  LinkingSystem() = default;

  GroupPtr pi_;
  const FusionSystem* F_ = nullptr;
  std::vector<SubgroupId> objects_;
  std::map<SubgroupId, Subgroup> theta_;
  std::map<std::pair<SubgroupId, SubgroupId>, std::vector<Arrow>> arrows_;
  std::map<std::pair<SubgroupId, SubgroupId>, std::map<ElementId, std::size_t>> delta_;
};

/// L(P, Q) = N_pi(P, Q)/Theta(P) on the F-centric subgroups. Composition
/// well-definedness is checked (IllDefinedComposition). F must outlive L.
LinkingSystem linking_from_signaliser(const GroupPtr& pi, const FusionSystem& F,
                                      const SignaliserFunctor& theta);

struct LinkingViolation {
  char axiom;  // 'A', 'B' or 'C'
  SubgroupId P;
  SubgroupId Q;
  std::string detail;
};

/// Exhaustive check of axioms (A), (B), (C). Returns the first failure.
std::optional<LinkingViolation> validate_linking_axioms(const LinkingSystem& L,
                                                        const FusionSystem& F);

// ---------------------------------------------------------------------------
// chains

struct ChainAutomorphisms {
  std::vector<SubgroupId> chain;    // P_0 < ... < P_k
  std::vector<Map> aut_f;           // Aut_F(P_.) inside Aut_F(P_k), sorted
  std::vector<std::size_t> aut_l;   // Aut_L(P_.) as indices into L(P_k, P_k)
};

/// Throws NotAChain unless the chain is strictly increasing and centric.
ChainAutomorphisms chain_automorphisms(const LinkingSystem& L, const FusionSystem& F,
                                       const std::vector<SubgroupId>& chain);

/// Restriction Aut_L(P_.) -> Aut_L(Q_.) for a subchain Q_. (given by
/// increasing indices into the chain of `from`), via the unique phi' with
/// phi o e = e o phi' for the inclusion arrow e. Entry i is the index into
/// L(Q_top, Q_top) of the restriction of from.aut_l[i].
std::vector<std::size_t> restrict_chain_automorphisms(const LinkingSystem& L,
                                                      const ChainAutomorphisms& from,
                                                      const std::vector<std::size_t>& subchain);

/// Line-oriented dump: header, objects with Theta, then one line per arrow
/// `P Q rep : x->y, ...` with the coset representative as the extra column.
std::string serialize_linking(const LinkingSystem& L);

}  // namespace fusionkit

#endif  // FUSIONKIT_LOCAL_HPP
