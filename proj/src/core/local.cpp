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

#include "fusionkit/local.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

/// Lattice subgroup P as a subgroup of the parent of S.
Subgroup ambient_subgroup(const SubgroupLattice& L, SubgroupId P) {
  std::vector<ElementId> members;
  for (ElementId x : L.at(P).members()) members.push_back(L.to_parent(x));
  std::sort(members.begin(), members.end());
  return Subgroup(L.sylow().parent_ptr(), std::move(members));
}

void require_ambient(const GroupPtr& pi, const SubgroupLattice& L) {
  if (L.sylow().parent_ptr() != pi)
    throw Error(ErrorCode::NotASubgroup, "S is not a subgroup of the ambient group");
}

/// c_g on P as a local map; throws if the image leaves S.
Map conjugation_map(const SubgroupLattice& L, SubgroupId P, ElementId g) {
  const FiniteGroup& pi = L.sylow().parent();
  Map out;
  for (ElementId x : L.at(P).members()) {
    auto y = L.to_local(pi.conjugate(g, L.to_parent(x)));
    if (!y) throw Error(ErrorCode::InvalidArgument, "conjugate leaves S");
    out.push_back(*y);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// transporter category

TransporterCategory::TransporterCategory(GroupPtr pi, LatticePtr lattice,
                                         std::vector<SubgroupId> objects)
    : pi_(std::move(pi)), lattice_(std::move(lattice)), objects_(std::move(objects)) {
  require_ambient(pi_, *lattice_);
  std::sort(objects_.begin(), objects_.end());
  objects_.erase(std::unique(objects_.begin(), objects_.end()), objects_.end());
  std::vector<Subgroup> amb;
  for (SubgroupId P : objects_) {
    if (P >= lattice_->size()) throw Error(ErrorCode::NotASubgroup, "unknown subgroup id");
    amb.push_back(ambient_subgroup(*lattice_, P));
  }
  for (std::size_t i = 0; i < objects_.size(); ++i)
    for (std::size_t j = 0; j < objects_.size(); ++j)
      mor_[{objects_[i], objects_[j]}] = transporter_set(pi_, amb[i], amb[j]);
}

const std::vector<ElementId>& TransporterCategory::morphisms(SubgroupId P, SubgroupId Q) const {
  auto it = mor_.find({P, Q});
  if (it == mor_.end()) throw Error(ErrorCode::InvalidArgument, "not an object pair");
  return it->second;
}

Map TransporterCategory::project(SubgroupId P, ElementId g) const {
  return conjugation_map(*lattice_, P, g);
}

TransporterCategory transporter_category(const GroupPtr& pi, const LatticePtr& lattice,
                                         std::vector<SubgroupId> objects) {
  return TransporterCategory(pi, lattice, std::move(objects));
}

// ---------------------------------------------------------------------------
// orbit category

Map OrbitCategory::orbit_of(SubgroupId, SubgroupId Q, const Map& m) const {
  const SubgroupLattice& L = F_->lattice();
  const FiniteGroup& s = *L.group();
  Map best;
  for (ElementId q : L.at(Q).members()) {
    Map cand;
    cand.reserve(m.size());
    for (ElementId y : m) cand.push_back(s.conjugate(q, y));
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

const std::vector<Map>& OrbitCategory::morphisms(SubgroupId P, SubgroupId Q) const {
  auto it = mor_.find({P, Q});
  if (it == mor_.end()) throw Error(ErrorCode::InvalidArgument, "not an object pair");
  return it->second;
}

Map OrbitCategory::compose(SubgroupId P, SubgroupId Q, SubgroupId R, const Map& phi,
                           const Map& psi) const {
  return orbit_of(P, R, F_->lattice().compose(Q, psi, P, phi));
}

OrbitCategory orbit_category(const FusionSystem& F, std::vector<SubgroupId> objects) {
  OrbitCategory O;
  O.F_ = &F;
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  O.objects_ = objects;
  for (SubgroupId P : objects)
    for (SubgroupId Q : objects) {
      std::set<Map> orbits;
      for (const Morphism& m : F.homs(P, Q)) orbits.insert(O.orbit_of(P, Q, m.images));
      O.mor_[{P, Q}] = std::vector<Map>(orbits.begin(), orbits.end());
    }
  // [psi] o [phi] must not depend on the representative of [phi]; changing
  // the representative of [psi] is absorbed by the orbit on the target.
  const SubgroupLattice& L = F.lattice();
  for (SubgroupId P : objects)
    for (SubgroupId Q : objects)
      for (SubgroupId R : objects)
        for (const Map& phi : O.mor_[{P, Q}])
          for (const Map& psi : O.mor_[{Q, R}]) {
            const Map v = O.compose(P, Q, R, phi, psi);
            for (ElementId q : L.at(Q).generators()) {
              Map moved;
              for (ElementId y : phi) moved.push_back(L.group()->conjugate(q, y));
              if (O.compose(P, Q, R, moved, psi) != v)
                throw Error(ErrorCode::IllDefinedComposition,
                            "orbit composition depends on the representative");
            }
          }
  return O;
}

std::vector<SubgroupId> centric_subgroups(const FusionSystem& F) {
  std::vector<SubgroupId> out;
  for (SubgroupId P = 0; P < F.lattice().size(); ++P)
    if (F.centric(P)) out.push_back(P);
  return out;
}

// ---------------------------------------------------------------------------
// signaliser functors

std::optional<SignaliserViolation> validate_signaliser(const GroupPtr& pi, const FusionSystem& F,
                                                       const SignaliserFunctor& theta) {
  const SubgroupLattice& L = F.lattice();
  require_ambient(pi, L);
  const FiniteGroup& g = *pi;
  const auto objects = centric_subgroups(F);
  std::map<SubgroupId, Subgroup> amb;
  for (SubgroupId P : objects) {
    auto it = theta.theta.find(P);
    if (it == theta.theta.end() || it->second.parent_ptr() != pi)
      return SignaliserViolation{"complement", P, P, kNoElement};
    const Subgroup& T = it->second;
    Subgroup Pa = ambient_subgroup(L, P);
    const Subgroup C = centralizer(pi, Pa);
    const Subgroup Z = center(Pa);
    bool ok = T.is_subgroup_of(C);
    for (ElementId z : Z.members())
      if (z != g.identity() && T.contains(z)) ok = false;
    if (!ok || T.order() * Z.order() != C.order())
      return SignaliserViolation{"complement", P, P, kNoElement};
    amb.emplace(P, std::move(Pa));
  }
  for (SubgroupId P : objects)
    for (SubgroupId Q : objects) {
      const Subgroup& TP = theta.theta.at(P);
      const Subgroup& TQ = theta.theta.at(Q);
      for (ElementId x : transporter_set(pi, amb.at(P), amb.at(Q))) {
        // Theta(Q) <= x Theta(P) x^-1  <=>  x^-1 Theta(Q) x <= Theta(P)
        const ElementId xi = g.inverse(x);
        for (ElementId t : TQ.generators())
          if (!TP.contains(g.conjugate(xi, t))) return SignaliserViolation{"transport", P, Q, x};
      }
    }
  return std::nullopt;
}

SignaliserFunctor canonical_signaliser(const GroupPtr& G, const FusionSystem& F) {
  if (!F.ambient() || F.ambient()->group != G)
    throw Error(ErrorCode::InvalidArgument, "fusion system was not computed from this group");
  const SubgroupLattice& L = F.lattice();
  SignaliserFunctor out;
  for (SubgroupId P : centric_subgroups(F))
    out.theta.emplace(P, p_prime_core(centralizer(G, ambient_subgroup(L, P)), F.prime()));
  if (auto v = validate_signaliser(G, F, out))
    throw Error(ErrorCode::NotComplement,
                v->condition + " condition fails at subgroup " + std::to_string(v->P));
  return out;
}

// ---------------------------------------------------------------------------
// linking systems

bool LinkingSystem::is_object(SubgroupId P) const {
  return std::binary_search(objects_.begin(), objects_.end(), P);
}

const std::vector<LinkingSystem::Arrow>& LinkingSystem::arrows(SubgroupId P, SubgroupId Q) const {
  auto it = arrows_.find({P, Q});
  if (it == arrows_.end()) throw Error(ErrorCode::InvalidArgument, "not an object pair");
  return it->second;
}

std::optional<std::size_t> LinkingSystem::find(SubgroupId P, SubgroupId Q, ElementId rep) const {
  const auto& a = arrows(P, Q);
  auto it = std::lower_bound(a.begin(), a.end(), rep,
                             [](const Arrow& x, ElementId r) { return x.rep < r; });
  if (it == a.end() || it->rep != rep) return std::nullopt;
  return static_cast<std::size_t>(it - a.begin());
}

ElementId LinkingSystem::coset_rep(SubgroupId P, ElementId g) const {
  ElementId best = kNoElement;
  for (ElementId t : theta(P).members()) best = std::min(best, pi_->mul(g, t));
  return best;
}

std::size_t LinkingSystem::compose(SubgroupId P, SubgroupId Q, SubgroupId R, std::size_t f,
                                   std::size_t g) const {
  const ElementId x = pi_->mul(arrows(Q, R).at(g).rep, arrows(P, Q).at(f).rep);
  auto idx = find(P, R, coset_rep(P, x));
  if (!idx) throw Error(ErrorCode::IllDefinedComposition, "composite is not an arrow");
  return *idx;
}

std::size_t LinkingSystem::delta(SubgroupId P, SubgroupId Q, ElementId s) const {
  auto it = delta_.find({P, Q});
  if (it == delta_.end()) throw Error(ErrorCode::InvalidArgument, "not an object pair");
  auto jt = it->second.find(s);
  if (jt == it->second.end()) throw Error(ErrorCode::InvalidArgument, "element does not transport P into Q");
  return jt->second;
}

LinkingSystem LinkingSystem::assemble(
    GroupPtr pi, const FusionSystem& F, std::map<SubgroupId, Subgroup> theta,
    std::map<std::pair<SubgroupId, SubgroupId>, std::vector<Arrow>> arrows,
    std::map<std::pair<SubgroupId, SubgroupId>, std::map<ElementId, std::size_t>> delta) {
  LinkingSystem L;
  L.pi_ = std::move(pi);
  L.F_ = &F;
  for (const auto& [P, T] : theta) L.objects_.push_back(P);
  L.theta_ = std::move(theta);
  L.arrows_ = std::move(arrows);
  L.delta_ = std::move(delta);
  return L;
}

LinkingSystem linking_from_signaliser(const GroupPtr& pi, const FusionSystem& F,
                                      const SignaliserFunctor& theta) {
  const SubgroupLattice& L = F.lattice();
  require_ambient(pi, L);
  const FiniteGroup& g = *pi;
  const auto objects = centric_subgroups(F);
  std::map<SubgroupId, Subgroup> th;
  std::map<SubgroupId, Subgroup> amb;
  for (SubgroupId P : objects) {
    auto it = theta.theta.find(P);
    if (it == theta.theta.end())
      throw Error(ErrorCode::NotComplement, "no Theta for centric subgroup " + std::to_string(P));
    th.emplace(P, it->second);
    amb.emplace(P, ambient_subgroup(L, P));
  }
  auto rep_of = [&](SubgroupId P, ElementId x) {
    ElementId best = kNoElement;
    for (ElementId t : th.at(P).members()) best = std::min(best, g.mul(x, t));
    return best;
  };
  std::map<std::pair<SubgroupId, SubgroupId>, std::vector<LinkingSystem::Arrow>> arrows;
  std::map<std::pair<SubgroupId, SubgroupId>, std::map<ElementId, std::size_t>> delta;
  for (SubgroupId P : objects) {
    for (ElementId t : th.at(P).members())
      for (ElementId x : amb.at(P).members())
        if (g.mul(t, x) != g.mul(x, t))
          throw Error(ErrorCode::IllDefinedComposition,
                      "Theta does not centralize subgroup " + std::to_string(P));
    for (SubgroupId Q : objects) {
      std::set<ElementId> reps;
      for (ElementId x : transporter_set(pi, amb.at(P), amb.at(Q))) reps.insert(rep_of(P, x));
      auto& list = arrows[{P, Q}];
      for (ElementId r : reps) {
        // (h t_Q)(g) = h g (g^-1 t_Q g): needs g^-1 Theta(Q) g <= Theta(P)
        for (ElementId t : th.at(Q).generators())
          if (!th.at(P).contains(g.conjugate(g.inverse(r), t)))
            throw Error(ErrorCode::IllDefinedComposition,
                        "composition through subgroup " + std::to_string(Q) + " is not well defined");
        list.push_back({r, conjugation_map(L, P, r)});
      }
      auto& d = delta[{P, Q}];
      for (ElementId s = 0; s < L.group()->order(); ++s) {
        const Map c = L.conjugation(P, s);
        bool inside = true;
        for (ElementId y : c) inside = inside && L.at(Q).contains(y);
        if (!inside) continue;
        const ElementId r = rep_of(P, L.to_parent(s));
        auto it = std::lower_bound(list.begin(), list.end(), r,
                                   [](const LinkingSystem::Arrow& a, ElementId v) { return a.rep < v; });
        d[s] = static_cast<std::size_t>(it - list.begin());
      }
    }
  }
  return LinkingSystem::assemble(pi, F, std::move(th), std::move(arrows), std::move(delta));
}

std::optional<LinkingViolation> validate_linking_axioms(const LinkingSystem& L,
                                                        const FusionSystem& F) {
  const SubgroupLattice& lat = F.lattice();
  const FiniteGroup& s = *lat.group();
  try {
    for (SubgroupId P : L.objects())
      for (SubgroupId Q : L.objects()) {
        const auto& arrows = L.arrows(P, Q);
        const auto& Z = lat.at(lat.center(P));
        // (A) delta(Z(P)) acts freely with orbit set F(P, Q)
        std::map<Map, std::size_t> fibre;
        for (const auto& a : arrows) ++fibre[a.projection];
        std::set<Map> expected;
        for (const Morphism& m : F.homs(P, Q)) expected.insert(m.images);
        std::set<Map> got;
        for (const auto& [m, n] : fibre) got.insert(m);
        if (got != expected)
          return LinkingViolation{'A', P, Q, "projections do not match F(P,Q)"};
        for (std::size_t f = 0; f < arrows.size(); ++f) {
          std::set<std::size_t> orbit;
          for (ElementId z : Z.members()) {
            const std::size_t moved = L.compose(P, P, Q, L.delta(P, P, z), f);
            if (z != s.identity() && moved == f)
              return LinkingViolation{'A', P, Q, "Z(P) does not act freely"};
            if (arrows[moved].projection != arrows[f].projection)
              return LinkingViolation{'A', P, Q, "Z(P)-orbit leaves a fibre of the projection"};
            orbit.insert(moved);
          }
          if (orbit.size() != Z.order() || fibre[arrows[f].projection] != Z.order())
            return LinkingViolation{'A', P, Q, "fibre is not a single free Z(P)-orbit"};
        }
        // (B) projection of delta(g) is conjugation by g
        for (ElementId g = 0; g < s.order(); ++g) {
          const Map c = lat.conjugation(P, g);
          bool inside = true;
          for (ElementId y : c) inside = inside && lat.at(Q).contains(y);
          if (!inside) continue;
          if (arrows.at(L.delta(P, Q, g)).projection != c)
            return LinkingViolation{'B', P, Q, "pi(delta(g)) differs from c_g"};
        }
        // (C) f o delta(g) = delta(pi(f)(g)) o f
        for (std::size_t f = 0; f < arrows.size(); ++f)
          for (ElementId g : lat.at(P).members()) {
            const std::size_t lhs = L.compose(P, P, Q, L.delta(P, P, g), f);
            const ElementId pg = lat.apply(P, arrows[f].projection, g);
            const std::size_t rhs = L.compose(P, Q, Q, f, L.delta(Q, Q, pg));
            if (lhs != rhs) return LinkingViolation{'C', P, Q, "equivariance fails"};
          }
      }
  } catch (const Error& e) {
    return LinkingViolation{'A', 0, 0, e.what()};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// chains

ChainAutomorphisms chain_automorphisms(const LinkingSystem& L, const FusionSystem& F,
                                       const std::vector<SubgroupId>& chain) {
  const SubgroupLattice& lat = F.lattice();
  if (chain.empty()) throw Error(ErrorCode::NotAChain, "empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= lat.size() || !L.is_object(chain[i]))
      throw Error(ErrorCode::NotAChain, "chain member is not an F-centric subgroup");
    if (i > 0 && (chain[i] == chain[i - 1] || !lat.contains(chain[i], chain[i - 1])))
      throw Error(ErrorCode::NotAChain, "chain inclusions are not strict");
  }
  ChainAutomorphisms out;
  out.chain = chain;
  const SubgroupId top = chain.back();
  for (const Map& a : F.automorphisms(top)) {
    bool keeps = true;
    for (SubgroupId P : chain) keeps = keeps && lat.image(P, lat.restrict(top, a, P)) == P;
    if (keeps) out.aut_f.push_back(a);
  }
  const auto& arrows = L.arrows(top, top);
  for (std::size_t f = 0; f < arrows.size(); ++f)
    if (std::binary_search(out.aut_f.begin(), out.aut_f.end(), arrows[f].projection))
      out.aut_l.push_back(f);
  return out;
}

std::vector<std::size_t> restrict_chain_automorphisms(const LinkingSystem& L,
                                                      const ChainAutomorphisms& from,
                                                      const std::vector<std::size_t>& subchain) {
  if (subchain.empty() || !std::is_sorted(subchain.begin(), subchain.end()) ||
      std::adjacent_find(subchain.begin(), subchain.end()) != subchain.end() ||
      subchain.back() >= from.chain.size())
    throw Error(ErrorCode::NotAChain, "subchain indices must be strictly increasing");
  std::vector<SubgroupId> sub;
  for (std::size_t i : subchain) sub.push_back(from.chain[i]);
  const ChainAutomorphisms to = chain_automorphisms(L, L.fusion(), sub);
  const SubgroupId P = from.chain.back(), Q = sub.back();
  const std::size_t e = L.delta(Q, P, L.fusion().lattice().group()->identity());
  std::vector<std::size_t> out;
  for (std::size_t phi : from.aut_l) {
    const std::size_t lhs = L.compose(Q, P, P, e, phi);
    std::vector<std::size_t> found;
    for (std::size_t psi = 0; psi < L.arrows(Q, Q).size(); ++psi)
      if (L.compose(Q, Q, P, psi, e) == lhs) found.push_back(psi);
    if (found.size() != 1)
      throw Error(ErrorCode::InvalidArgument, "restriction along the inclusion is not unique");
    if (!std::binary_search(to.aut_l.begin(), to.aut_l.end(), found.front()))
      throw Error(ErrorCode::InvalidArgument, "restriction does not preserve the subchain");
    out.push_back(found.front());
  }
  return out;
}

std::string serialize_linking(const LinkingSystem& L) {
  const SubgroupLattice& lat = L.fusion().lattice();
  std::ostringstream out;
  out << "linking 1\n";
  out << "p " << L.fusion().prime() << "\n";
  out << "ambient-order " << L.ambient()->order() << "\n";
  out << "objects " << L.objects().size() << "\n";
  for (SubgroupId P : L.objects()) {
    out << P << " :";
    for (ElementId x : lat.at(P).members()) out << ' ' << x;
    out << " | theta :";
    for (ElementId t : L.theta(P).members()) out << ' ' << t;
    out << "\n";
  }
  std::size_t count = 0;
  for (SubgroupId P : L.objects())
    for (SubgroupId Q : L.objects()) count += L.arrows(P, Q).size();
  out << "arrows " << count << "\n";
  for (SubgroupId P : L.objects())
    for (SubgroupId Q : L.objects())
      for (const auto& a : L.arrows(P, Q)) {
        out << P << ' ' << Q << ' ' << a.rep << " :";
        auto src = lat.at(P).members();
        for (std::size_t i = 0; i < src.size(); ++i)
          out << (i ? ", " : " ") << src[i] << "->" << a.projection[i];
        out << "\n";
      }
  return out.str();
}

}  // namespace fusionkit
