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

#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fusionkit/error.hpp"

namespace fusionkit {

// ---------------------------------------------------------------------------
// SubgroupLattice

LatticePtr SubgroupLattice::create(const Subgroup& S, std::size_t cap) {
  if (S.order() > cap)
    throw Error(ErrorCode::CapExceeded,
                "|S| = " + std::to_string(S.order()) + " exceeds the subgroup cap " +
                    std::to_string(cap));
  std::shared_ptr<SubgroupLattice> L(new SubgroupLattice(S));
  InducedGroup ind = induced_group(S);
  L->local_ = ind.group;
  L->embedding_ = std::move(ind.embedding);
  for (std::size_t i = 0; i < L->embedding_.size(); ++i)
    L->reverse_.emplace(L->embedding_[i], static_cast<ElementId>(i));
  L->subgroups_ = enumerate_subgroups(Subgroup::whole(L->local_), cap);
  for (std::size_t i = 0; i < L->subgroups_.size(); ++i)
    L->index_.emplace(L->subgroups_[i].member_vector(), static_cast<SubgroupId>(i));
  for (const Subgroup& P : L->subgroups_) {
    LocalData ld = local_data(L->local_, P);
    L->normalizer_.push_back(L->id_of(ld.normalizer.member_vector()));
    L->centralizer_.push_back(L->id_of(ld.centralizer.member_vector()));
    L->center_.push_back(L->id_of(ld.center.member_vector()));
  }
  return L;
}

std::optional<ElementId> SubgroupLattice::to_local(ElementId parent) const {
  auto it = reverse_.find(parent);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::optional<SubgroupId> SubgroupLattice::find(const std::vector<ElementId>& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const std::vector<ElementId>& members) const {
  auto id = find(members);
  if (!id) throw Error(ErrorCode::NotASubgroup, "member set is not a subgroup of S");
  return *id;
}

SubgroupId SubgroupLattice::id_of_parent_subgroup(const Subgroup& P) const {
  if (P.parent_ptr() != sylow_.parent_ptr())
    throw Error(ErrorCode::NotASubgroup, "subgroup lives in a different group");
  std::vector<ElementId> local;
  for (ElementId x : P.members()) {
    auto l = to_local(x);
    if (!l) throw Error(ErrorCode::NotASubgroup, "subgroup is not contained in S");
    local.push_back(*l);
  }
  std::sort(local.begin(), local.end());
  return id_of(local);
}

bool SubgroupLattice::contains(SubgroupId big, SubgroupId small) const {
  return subgroups_[small].is_subgroup_of(subgroups_[big]);
}

std::vector<SubgroupId> SubgroupLattice::subgroups_of(SubgroupId id) const {
  std::vector<SubgroupId> out;
  for (SubgroupId j = 0; j <= id; ++j)
    if (subgroups_[j].order() <= subgroups_[id].order() && contains(id, j)) out.push_back(j);
  return out;
}

SubgroupId SubgroupLattice::conjugate(SubgroupId id, ElementId s) const {
  Map m = conjugation(id, s);
  std::sort(m.begin(), m.end());
  return id_of(m);
}

std::size_t SubgroupLattice::position(SubgroupId id, ElementId x) const {
  auto m = subgroups_[id].members();
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x)
    throw Error(ErrorCode::InvalidArgument, "element outside the source of a map");
  return static_cast<std::size_t>(it - m.begin());
}

Map SubgroupLattice::identity_map(SubgroupId id) const { return subgroups_[id].member_vector(); }

Map SubgroupLattice::conjugation(SubgroupId id, ElementId s) const {
  Map out;
  out.reserve(subgroups_[id].order());
  for (ElementId x : subgroups_[id].members()) out.push_back(local_->conjugate(s, x));
  return out;
}

Map SubgroupLattice::compose(SubgroupId mid, const Map& outer, SubgroupId,
                             const Map& inner) const {
  Map out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[position(mid, inner[i])];
  return out;
}

Map SubgroupLattice::inverse(SubgroupId source, const Map& map) const {
  const SubgroupId img = image(source, map);
  Map out(map.size());
  auto src = subgroups_[source].members();
  for (std::size_t i = 0; i < map.size(); ++i) out[position(img, map[i])] = src[i];
  return out;
}

Map SubgroupLattice::restrict(SubgroupId source, const Map& map, SubgroupId sub) const {
  Map out;
  out.reserve(subgroups_[sub].order());
  for (ElementId y : subgroups_[sub].members()) out.push_back(map[position(source, y)]);
  return out;
}

SubgroupId SubgroupLattice::image(SubgroupId, const Map& map) const {
  Map sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return id_of(sorted);
}

bool SubgroupLattice::is_monomorphism(SubgroupId source, const Map& map) const {
  const Subgroup& P = subgroups_[source];
  if (map.size() != P.order()) return false;
  for (ElementId y : map)
    if (y >= local_->order()) return false;
  Map sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto members = P.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (ElementId g : P.generators())
      if (map[position(source, local_->mul(members[i], g))] !=
          local_->mul(map[i], map[position(source, g)]))
        return false;
  return true;
}

GroupMono SubgroupLattice::to_mono(const Morphism& m) const {
  return GroupMono{subgroups_[m.source], subgroups_[m.target], m.images};
}

// ---------------------------------------------------------------------------
// groupoid closure

class GroupoidBuilder {
 public:
  explicit GroupoidBuilder(LatticePtr lattice) : L_(std::move(lattice)) {
    const std::size_t n = L_->size();
    cls_.resize(n);
    tau_.resize(n);
    members_.resize(n);
    gens_.resize(n);
    root_.resize(n);
    for (SubgroupId i = 0; i < n; ++i) {
      cls_[i] = i;
      root_[i] = i;
      members_[i] = {i};
      tau_[i] = L_->identity_map(i);
    }
  }

  /// Adds the isomorphism phi : P -> phi(P).
  void add(SubgroupId P, const Map& phi) {
    const SubgroupLattice& L = *L_;
    const SubgroupId P2 = L.image(P, phi);
    const std::size_t c1 = cls_[P], c2 = cls_[P2];
    const SubgroupId R1 = root_[c1], R2 = root_[c2];
    // theta : R1 -> R2 through P and P2
    Map to_p2 = L.compose(P, phi, R1, tau_[P]);
    Map theta = L.compose(P2, L.inverse(R2, tau_[P2]), R1, to_p2);
    if (c1 == c2) {
      if (theta != L.identity_map(R1)) gens_[c1].insert(std::move(theta));
      return;
    }
    const Map theta_inv = L.inverse(R1, theta);
    for (SubgroupId X : members_[c2]) {
      tau_[X] = L.compose(R2, tau_[X], R1, theta);
      cls_[X] = c1;
    }
    for (const Map& beta : gens_[c2])
      gens_[c1].insert(L.compose(R2, theta_inv, R1, L.compose(R2, beta, R1, theta)));
    members_[c1].insert(members_[c1].end(), members_[c2].begin(), members_[c2].end());
    members_[c2].clear();
    gens_[c2].clear();
  }

  FusionSystem finish(unsigned p) {
    const SubgroupLattice& L = *L_;
    FusionSystem F;
    F.p_ = p;
    F.lattice_ = L_;
    F.class_of_.assign(L.size(), 0);
    F.transport_.resize(L.size());
    std::vector<char> done(L.size(), 0);
    for (SubgroupId s = 0; s < L.size(); ++s) {
      const std::size_t c = cls_[s];
      if (done[c]) continue;
      done[c] = 1;
      std::vector<SubgroupId> members = members_[c];
      std::sort(members.begin(), members.end());
      const SubgroupId R = root_[c], R2 = members.front();  // R2 == s
      const Map t = tau_[R2];
      const Map tinv = L.inverse(R, t);
      // rebase generators and transports at the least member
      std::vector<Map> gens;
      for (const Map& a : gens_[c]) gens.push_back(L.compose(R, t, R2, L.compose(R, a, R2, tinv)));
      std::set<Map> group{L.identity_map(R2)};
      std::deque<Map> queue{L.identity_map(R2)};
      while (!queue.empty()) {
        Map e = std::move(queue.front());
        queue.pop_front();
        for (const Map& g : gens) {
          Map prod = L.compose(R2, g, R2, e);
          if (group.insert(prod).second) queue.push_back(std::move(prod));
        }
      }
      FusionSystem::ConjugacyClass cc{R2, members, std::vector<Map>(group.begin(), group.end())};
      for (SubgroupId X : members) {
        const Map base = L.compose(R, tau_[X], R2, tinv);
        Map best;
        for (const Map& a : cc.automorphisms) {
          Map cand = L.compose(R2, base, R2, a);
          if (best.empty() || cand < best) best = std::move(cand);
        }
        F.transport_[X] = std::move(best);
        F.class_of_[X] = F.classes_.size();
      }
      F.classes_.push_back(std::move(cc));
    }
    return F;
  }

 private:
  LatticePtr L_;
  std::vector<std::size_t> cls_;
  std::vector<Map> tau_;
  std::vector<std::vector<SubgroupId>> members_;
  std::vector<std::set<Map>> gens_;
  std::vector<SubgroupId> root_;
};

FusionSystem FusionSystem::from_isomorphisms(LatticePtr lattice, unsigned p,
                                             const std::vector<Morphism>& isos,
                                             bool include_inner) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (!is_power_of(lattice->group()->order(), p))
    throw Error(ErrorCode::InvalidArgument, "S must be a p-group");
  GroupoidBuilder b(lattice);
  if (include_inner) {
    const auto gens = lattice->group()->generators();
    for (SubgroupId P = 0; P < lattice->size(); ++P)
      for (ElementId s : gens) b.add(P, lattice->conjugation(P, s));
  }
  for (const Morphism& m : isos) {
    if (m.source >= lattice->size() || !lattice->is_monomorphism(m.source, m.images))
      throw Error(ErrorCode::InvalidArgument, "generator is not a monomorphism");
    b.add(m.source, m.images);
  }
  return b.finish(p);
}

// ---------------------------------------------------------------------------
// queries

std::vector<Map> FusionSystem::isomorphisms(SubgroupId P, SubgroupId P2) const {
  if (class_of_[P] != class_of_[P2]) return {};
  const SubgroupLattice& L = *lattice_;
  const ConjugacyClass& cc = classes_[class_of_[P]];
  const SubgroupId R = cc.root;
  const Map inv = L.inverse(R, transport_[P]);
  std::vector<Map> out;
  out.reserve(cc.automorphisms.size());
  for (const Map& a : cc.automorphisms)
    out.push_back(L.compose(R, transport_[P2], P, L.compose(R, a, P, inv)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Morphism> FusionSystem::homs(SubgroupId P, SubgroupId Q) const {
  std::vector<Morphism> out;
  for (SubgroupId X : classes_[class_of_[P]].members)
    if (lattice_->contains(Q, X))
      for (Map& m : isomorphisms(P, X)) out.push_back(Morphism{P, Q, std::move(m)});
  return out;
}

bool FusionSystem::contains_iso(SubgroupId P, SubgroupId P2, const Map& map) const {
  if (class_of_[P] != class_of_[P2]) return false;
  const SubgroupLattice& L = *lattice_;
  const ConjugacyClass& cc = classes_[class_of_[P]];
  const SubgroupId R = cc.root;
  Map alpha = L.compose(P2, L.inverse(R, transport_[P2]), R, L.compose(P, map, R, transport_[P]));
  return std::binary_search(cc.automorphisms.begin(), cc.automorphisms.end(), alpha);
}

bool FusionSystem::contains(SubgroupId P, SubgroupId Q, const Map& map) const {
  if (!lattice_->is_monomorphism(P, map)) return false;
  const SubgroupId X = lattice_->image(P, map);
  return lattice_->contains(Q, X) && contains_iso(P, X, map);
}

GroupPtr FusionSystem::automorphism_group(SubgroupId P) const {
  std::vector<Permutation> perms;
  for (const Map& a : automorphisms(P)) {
    Permutation perm(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      perm[i] = static_cast<std::uint32_t>(lattice_->position(P, a[i]));
    perms.push_back(std::move(perm));
  }
  return FiniteGroup::from_permutations(lattice_->at(P).order(), perms);
}

namespace {

std::size_t order_of(const SubgroupLattice& L, SubgroupId id) { return L.at(id).order(); }

}  // namespace

bool FusionSystem::fully_normalized(SubgroupId P) const {
  const auto& L = *lattice_;
  const std::size_t n = order_of(L, L.normalizer(P));
  for (SubgroupId X : classes_[class_of_[P]].members)
    if (order_of(L, L.normalizer(X)) > n) return false;
  return true;
}

bool FusionSystem::fully_centralized(SubgroupId P) const {
  const auto& L = *lattice_;
  const std::size_t n = order_of(L, L.centralizer(P));
  for (SubgroupId X : classes_[class_of_[P]].members)
    if (order_of(L, L.centralizer(X)) > n) return false;
  return true;
}

bool FusionSystem::centric(SubgroupId P) const {
  for (SubgroupId X : classes_[class_of_[P]].members)
    if (!lattice_->contains(X, lattice_->centralizer(X))) return false;
  return true;
}

bool FusionSystem::radical(SubgroupId P) const {
  const auto& L = *lattice_;
  const std::size_t inn = L.at(P).order() / order_of(L, L.center(P));
  const GroupPtr aut = automorphism_group(P);
  return p_core(Subgroup::whole(aut), p_).order() == inn;
}

std::size_t FusionSystem::aut_s_order(SubgroupId P) const {
  const auto& L = *lattice_;
  return order_of(L, L.normalizer(P)) / order_of(L, L.centralizer(P));
}

// ---------------------------------------------------------------------------
// constructions

FusionSystem fusion_of_group(const GroupPtr& G, const Subgroup& S, unsigned p,
                             std::size_t subgroup_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (S.parent_ptr() != G) throw Error(ErrorCode::NotASubgroup, "S is not a subgroup of G");
  if (S.order() != p_part(G->order(), p))
    throw Error(ErrorCode::NotSylow, "|S| = " + std::to_string(S.order()) +
                                         " but the p-part of |G| is " +
                                         std::to_string(p_part(G->order(), p)));
  LatticePtr L = SubgroupLattice::create(S, subgroup_cap);
  GroupoidBuilder b(L);
  const FiniteGroup& g = *G;
  for (SubgroupId P = 0; P < L->size(); ++P) {
    std::vector<ElementId> ambient;
    for (ElementId x : L->at(P).members()) ambient.push_back(L->to_parent(x));
    std::set<Map> seen;
    for (ElementId h = 0; h < g.order(); ++h) {
      Map phi;
      phi.reserve(ambient.size());
      for (ElementId x : ambient) {
        auto y = L->to_local(g.conjugate(h, x));
        if (!y) break;
        phi.push_back(*y);
      }
      if (phi.size() != ambient.size() || !seen.insert(phi).second) continue;
      b.add(P, phi);
    }
  }
  FusionSystem F = b.finish(p);
  F.set_ambient(AmbientGroup{G, S});
  return F;
}

FusionSystem generate_fusion(const LatticePtr& lattice, unsigned p,
                             const std::vector<Morphism>& gens) {
  std::set<Morphism> isos;
  for (const Morphism& m : gens) {
    if (m.source >= lattice->size() || !lattice->is_monomorphism(m.source, m.images))
      throw Error(ErrorCode::InvalidArgument, "generator is not a monomorphism");
    for (SubgroupId Y : lattice->subgroups_of(m.source)) {
      Map r = lattice->restrict(m.source, m.images, Y);
      const SubgroupId img = lattice->image(Y, r);
      isos.insert(Morphism{Y, img, std::move(r)});
    }
  }
  return FusionSystem::from_isomorphisms(lattice, p, std::vector<Morphism>(isos.begin(), isos.end()));
}

FusionSystem generate_fusion(const Subgroup& S, unsigned p, const std::vector<GroupMono>& gens,
                             std::size_t subgroup_cap) {
  LatticePtr L = SubgroupLattice::create(S, subgroup_cap);
  std::vector<Morphism> local;
  for (const GroupMono& m : gens) {
    m.validate();
    Morphism lm;
    lm.source = L->id_of_parent_subgroup(m.source);
    const SubgroupId target = L->id_of_parent_subgroup(m.target);
    for (ElementId x : L->at(lm.source).members()) {
      auto y = L->to_local(m.apply(L->to_parent(x)));
      if (!y) throw Error(ErrorCode::InvalidArgument, "generator leaves S");
      lm.images.push_back(*y);
    }
    lm.target = target;
    local.push_back(std::move(lm));
  }
  return generate_fusion(L, p, local);
}

// ---------------------------------------------------------------------------
// comparison and validation

namespace {

bool same_sylow(const FusionSystem& a, const FusionSystem& b) {
  if (a.prime() != b.prime()) return false;
  if (a.lattice_ptr() == b.lattice_ptr()) return true;
  const FiniteGroup& x = *a.lattice().group();
  const FiniteGroup& y = *b.lattice().group();
  if (x.order() != y.order() || a.lattice().size() != b.lattice().size()) return false;
  for (ElementId i = 0; i < x.order(); ++i)
    for (ElementId j = 0; j < x.order(); ++j)
      if (x.mul(i, j) != y.mul(i, j)) return false;
  return true;
}

}  // namespace

std::optional<FusionDifference> fusion_difference(const FusionSystem& a, const FusionSystem& b) {
  if (!same_sylow(a, b))
    throw Error(ErrorCode::MismatchedSylow, "fusion systems live on different Sylow subgroups");
  const SubgroupLattice& L = a.lattice();
  bool same = a.class_count() == b.class_count();
  for (std::size_t c = 0; same && c < a.class_count(); ++c) {
    const auto& x = a.conjugacy_class(c);
    const auto& y = b.conjugacy_class(c);
    same = x.members == y.members && x.automorphisms == y.automorphisms;
  }
  for (SubgroupId P = 0; same && P < L.size(); ++P) same = a.transport(P) == b.transport(P);
  if (same) return std::nullopt;

  for (SubgroupId P = 0; P < L.size(); ++P)
    for (SubgroupId Q = 0; Q < L.size(); ++Q) {
      if (L.at(Q).order() < L.at(P).order()) continue;
      auto collect = [&](const FusionSystem& F) {
        std::vector<Map> maps;
        for (Morphism& m : F.homs(P, Q)) maps.push_back(std::move(m.images));
        std::sort(maps.begin(), maps.end());
        return maps;
      };
      const auto ma = collect(a), mb = collect(b);
      if (ma == mb) continue;
      std::vector<Map> only_a, only_b;
      std::set_difference(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(only_a));
      std::set_difference(mb.begin(), mb.end(), ma.begin(), ma.end(), std::back_inserter(only_b));
      const bool first_a = !only_a.empty() && (only_b.empty() || only_a.front() < only_b.front());
      return FusionDifference{P, Q, first_a ? only_a.front() : only_b.front(), first_a};
    }
  return std::nullopt;
}

void validate_fusion(const FusionSystem& F) {
  const SubgroupLattice& L = F.lattice();
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidFusion, msg); };
  const auto sgens = L.group()->generators();
  for (SubgroupId P = 0; P < L.size(); ++P) {
    const auto& cc = F.conjugacy_class(F.class_of(P));
    if (!L.is_monomorphism(cc.root, F.transport(P)) || L.image(cc.root, F.transport(P)) != P)
      fail("transport to subgroup " + std::to_string(P) + " is not an isomorphism");
    for (ElementId s : sgens)
      if (!F.contains_iso(P, L.conjugate(P, s), L.conjugation(P, s)))
        fail("conjugation by an element of S missing at subgroup " + std::to_string(P));
  }
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const auto& cc = F.conjugacy_class(c);
    const SubgroupId R = cc.root;
    std::vector<std::pair<SubgroupId, const Map*>> maps;
    for (const Map& a : cc.automorphisms) {
      if (!L.is_monomorphism(R, a) || L.image(R, a) != R)
        fail("non-automorphism listed at subgroup " + std::to_string(R));
      maps.emplace_back(R, &a);
    }
    for (SubgroupId X : cc.members) maps.emplace_back(X, &F.transport(X));
    for (const auto& [target, m] : maps) {
      (void)target;
      for (SubgroupId Y : L.subgroups_of(R)) {
        Map r = L.restrict(R, *m, Y);
        if (!F.contains_iso(Y, L.image(Y, r), r))
          fail("not closed under restriction: subgroup " + std::to_string(R) + " to " +
               std::to_string(Y));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// saturation and classification

SubgroupId class_representative(const FusionSystem& F, std::size_t c) {
  const SubgroupLattice& L = F.lattice();
  const auto& members = F.conjugacy_class(c).members;
  SubgroupId best = members.front();
  for (SubgroupId X : members)
    if (L.at(L.normalizer(X)).order() > L.at(L.normalizer(best)).order()) best = X;
  return best;
}

namespace {

/// Aut_S(T) as a sorted list of maps.
std::vector<Map> aut_s(const SubgroupLattice& L, SubgroupId T) {
  std::set<Map> out;
  for (ElementId s : L.at(L.normalizer(T)).members()) out.insert(L.conjugation(T, s));
  return std::vector<Map>(out.begin(), out.end());
}

/// N_phi for phi : P -> T.
SubgroupId n_phi(const SubgroupLattice& L, SubgroupId P, SubgroupId T, const Map& phi,
                 const std::vector<Map>& aut_s_t) {
  const FiniteGroup& g = *L.group();
  const Map phi_inv = L.inverse(P, phi);
  std::vector<ElementId> members;
  for (ElementId h : L.at(L.normalizer(P)).members()) {
    Map m;
    for (ElementId t : L.at(T).members()) {
      ElementId x = L.apply(T, phi_inv, t);
      m.push_back(L.apply(P, phi, g.conjugate(h, x)));
    }
    if (std::binary_search(aut_s_t.begin(), aut_s_t.end(), m)) members.push_back(h);
  }
  return L.id_of(members);
}

bool extends(const FusionSystem& F, SubgroupId P, const Map& phi, SubgroupId N) {
  const SubgroupLattice& L = F.lattice();
  for (SubgroupId X : F.conjugacy_class(F.class_of(N)).members)
    for (const Map& psi : F.isomorphisms(N, X))
      if (L.restrict(N, psi, P) == phi) return true;
  return false;
}

}  // namespace

SaturationReport check_saturation(const FusionSystem& F, bool exhaustive) {
  validate_fusion(F);
  const SubgroupLattice& L = F.lattice();
  SaturationReport report;
  auto n_order = [&](SubgroupId X) { return L.at(L.normalizer(X)).order(); };
  auto c_order = [&](SubgroupId X) { return L.at(L.centralizer(X)).order(); };
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const auto& cc = F.conjugacy_class(c);
    std::size_t nmax = 0, cmax = 0;
    for (SubgroupId X : cc.members) {
      nmax = std::max(nmax, n_order(X));
      cmax = std::max(cmax, c_order(X));
    }
    // axiom (a)
    for (SubgroupId X : cc.members) {
      if (n_order(X) != nmax) continue;
      if (c_order(X) != cmax) {
        report.violations.push_back({'a', X, std::nullopt,
                                     "fully normalized but not fully centralized"});
        break;
      }
      const std::size_t sylow = p_part(cc.automorphisms.size(), F.prime());
      if (F.aut_s_order(X) != sylow) {
        report.violations.push_back(
            {'a', X, std::nullopt,
             "|Aut_S(P)| = " + std::to_string(F.aut_s_order(X)) +
                 " but a Sylow subgroup of Aut_F(P) has order " + std::to_string(sylow)});
        break;
      }
    }
    // axiom (b)
    bool failed = false;
    for (SubgroupId T : cc.members) {
      if (failed || c_order(T) != cmax) continue;
      const auto ast = aut_s(L, T);
      for (SubgroupId P : cc.members) {
        for (const Map& phi : F.isomorphisms(P, T)) {
          const SubgroupId N = n_phi(L, P, T, phi, ast);
          if (!extends(F, P, phi, N)) {
            report.violations.push_back({'b', P, Morphism{P, T, phi},
                                         "no extension to N_phi (order " +
                                             std::to_string(L.at(N).order()) + ")"});
            failed = true;
            break;
          }
        }
        if (failed) break;
      }
      if (!exhaustive) break;
    }
  }
  report.saturated = report.violations.empty();
  return report;
}

std::vector<ClassInfo> classify_subgroups(const FusionSystem& F) {
  std::vector<ClassInfo> out;
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const SubgroupId rep = class_representative(F, c);
    out.push_back(ClassInfo{rep, F.conjugacy_class(c).members.size(), F.fully_normalized(rep),
                            F.fully_centralized(rep), F.centric(rep), F.radical(rep),
                            F.aut_order(rep)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// degree-one stable elements

std::vector<ModVector> stable_h1(const FusionSystem& F, bool all_of_f) {
  const SubgroupLattice& L = F.lattice();
  const unsigned p = F.prime();
  const auto homs = hom_to_cyclic(L.group(), p);
  const std::size_t d = homs.size(), n = L.group()->order();
  if (d == 0) return {};
  ModMatrix conditions(0, d, p);
  auto add_condition = [&](SubgroupId R, const Map& m) {
    for (ElementId x : L.at(R).generators()) {
      const ElementId y = L.apply(R, m, x);
      ModVector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = (homs[i][y] + p - homs[i][x]) % p;
      conditions.append_row(row);
    }
  };
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const auto& cc = F.conjugacy_class(c);
    if (!all_of_f && !F.centric(cc.root)) continue;
    for (const Map& a : cc.automorphisms) add_condition(cc.root, a);
    for (SubgroupId X : cc.members) add_condition(cc.root, F.transport(X));
  }
  std::vector<ModVector> forms;
  for (const ModVector& coeffs : conditions.nullspace()) {
    ModVector f(n, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t x = 0; x < n; ++x) f[x] = (f[x] + coeffs[i] * homs[i][x]) % p;
    forms.push_back(std::move(f));
  }
  return echelon_basis(forms, n, p);
}

}  // namespace fusionkit
