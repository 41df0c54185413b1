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

#include "fusionkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotSylow: return "NotSylow";
    case ErrorCode::InvalidFusion: return "InvalidFusion";
    case ErrorCode::MismatchedSylow: return "MismatchedSylow";
    case ErrorCode::NotComplement: return "NotComplement";
    case ErrorCode::IllDefinedComposition: return "IllDefinedComposition";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::FixedPointInvolution: return "FixedPointInvolution";
    case ErrorCode::MismatchedEndpoints: return "MismatchedEndpoints";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotClosedUnderConjugation: return "NotClosedUnderConjugation";
    case ErrorCode::NoFullyNormalizedMember: return "NoFullyNormalizedMember";
    case ErrorCode::MissingRadical: return "MissingRadical";
    case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
  }
  return "Unknown";
}

std::size_t VectorHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t r = 1;
  if (p < 2 || n == 0) return 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation invert(const Permutation& a) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

}  // namespace

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    std::size_t n, std::vector<ElementId> table, std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "group table must be non-empty");
  if (n > kTableLimit)
    throw Error(ErrorCode::CapExceeded,
                "table groups are limited to " + std::to_string(kTableLimit) + " elements");
  if (table.size() != n * n)
    throw Error(ErrorCode::InvalidArgument, "table must have n^2 entries");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::InvalidArgument, "label count must equal the group order");
  for (auto x : table)
    if (x >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[table[a * n + b]]++) throw Error(ErrorCode::InvalidArgument, "row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[table[b * n + a]]++) throw Error(ErrorCode::InvalidArgument, "column is not a permutation");
    }
  }
  std::optional<ElementId> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) identity = static_cast<ElementId>(e);
  }
  if (!identity) throw Error(ErrorCode::InvalidArgument, "table has no identity element");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->identity_ = *identity;
  g->table_.assign(table.begin(), table.end());
  g->labels_ = std::move(labels);
  g->finish_setup();

  // Light's associativity test: the set of a with (xa)y = x(ay) for all x, y
  // is closed under products, so checking a generating set suffices.
  for (ElementId a : g->generators_) {
    for (std::size_t x = 0; x < n; ++x) {
      const ElementId xa = table[x * n + a];
      for (std::size_t y = 0; y < n; ++y) {
        if (table[xa * n + y] != table[x * n + table[a * n + y]])
          throw Error(ErrorCode::InvalidArgument, "table is not associative");
      }
    }
  }
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(
    std::size_t degree, const std::vector<Permutation>& generators,
    std::vector<std::string> generator_names, std::size_t cap) {
  if (degree == 0) degree = 1;
  if (!generator_names.empty() && generator_names.size() != generators.size())
    throw Error(ErrorCode::InvalidArgument, "generator name count mismatch");
  for (const auto& gen : generators) {
    if (gen.size() != degree)
      throw Error(ErrorCode::InvalidArgument, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto x : gen) {
      if (x >= degree || hit[x]++) throw Error(ErrorCode::InvalidArgument, "generator is not a permutation");
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::unordered_set<Permutation, VectorHash> seen{id};
  std::vector<Permutation> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation c = compose(elements[i], gen);
      if (seen.insert(c).second) {
        elements.push_back(std::move(c));
        if (elements.size() > cap)
          throw Error(ErrorCode::CapExceeded,
                      "group order exceeds element cap " + std::to_string(cap));
      }
    }
  }
  std::sort(elements.begin(), elements.end());

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = elements.size();
  g->degree_ = degree;
  g->perms_ = std::move(elements);
  g->perm_index_.reserve(g->order_);
  for (std::size_t i = 0; i < g->order_; ++i)
    g->perm_index_.emplace(g->perms_[i], static_cast<ElementId>(i));
  g->identity_ = g->perm_index_.at(id);
  for (const auto& gen : generators) g->generators_.push_back(g->perm_index_.at(gen));
  g->generator_names_ = std::move(generator_names);

  const std::size_t n = g->order_;
  g->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g->inverse_[i] = g->perm_index_.at(invert(g->perms_[i]));
  if (n <= kTableLimit) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g->table_[a * n + b] =
            static_cast<std::uint16_t>(g->perm_index_.at(compose(g->perms_[a], g->perms_[b])));
  } else {
    // Sampled sanity check of the on-demand product against the inverse map.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 64; ++t) {
      auto a = static_cast<ElementId>(pick(rng));
      if (g->mul(a, g->inverse_[a]) != g->identity_)
        throw Error(ErrorCode::InvalidArgument, "inverse law failed");
    }
  }
  if (g->generators_.empty()) g->generators_.push_back(g->identity_);
  return g;
}

void FiniteGroup::finish_setup() {
  const std::size_t n = order_;
  inverse_.assign(n, kNoElement);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == identity_) {
        inverse_[a] = static_cast<ElementId>(b);
        break;
      }
  // Greedy generating set: least element not reachable by right
  // multiplication from the identity.
  std::vector<char> reached(n, 0);
  std::vector<ElementId> frontier{identity_};
  reached[identity_] = 1;
  std::size_t count = 1;
  for (std::size_t cand = 0; cand < n && count < n; ++cand) {
    if (reached[cand]) continue;
    generators_.push_back(static_cast<ElementId>(cand));
    // re-close from scratch with the enlarged generator list
    std::fill(reached.begin(), reached.end(), 0);
    frontier.assign(1, identity_);
    reached[identity_] = 1;
    count = 1;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (ElementId gen : generators_) {
        ElementId c = table_[frontier[i] * n + gen];
        if (!reached[c]) {
          reached[c] = 1;
          ++count;
          frontier.push_back(c);
        }
      }
  }
  if (generators_.empty()) generators_.push_back(identity_);
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return perm_index_.at(compose(perms_[a], perms_[b]));
}

ElementId FiniteGroup::power(ElementId a, std::uint64_t k) const {
  ElementId result = identity_;
  ElementId base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(ElementId a) const {
  std::uint64_t k = 1;
  for (ElementId x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<ElementId> FiniteGroup::find_permutation(const Permutation& perm) const {
  auto it = perm_index_.find(perm);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::label(ElementId a) const {
  if (is_permutation_group()) return format_cycles(perms_[a]);
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup close_subgroup(const GroupPtr& parent, std::span<const ElementId> seeds) {
  const FiniteGroup& g = *parent;
  std::unordered_set<ElementId> seen{g.identity()};
  std::vector<ElementId> elems{g.identity()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (ElementId s : seeds) {
      ElementId c = g.mul(elems[i], s);
      if (seen.insert(c).second) elems.push_back(c);
    }
  std::sort(elems.begin(), elems.end());
  Subgroup h(parent, std::move(elems), Subgroup::Unchecked{});
  h.compute_generators();
  return h;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members, Unchecked)
    : parent_(std::move(parent)), members_(std::move(members)) {}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw Error(ErrorCode::InvalidArgument, "subgroup without parent");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto x : members_)
    if (x >= parent_->order()) throw Error(ErrorCode::NotASubgroup, "member id out of range");
  if (!contains(parent_->identity()))
    throw Error(ErrorCode::NotASubgroup, "member set lacks the identity");
  compute_generators();
  // The greedy generators close to exactly the member set iff it is a subgroup.
  Subgroup closed = close_subgroup(parent_, generators_);
  if (closed.members_ != members_)
    throw Error(ErrorCode::NotASubgroup, "member set is not closed under multiplication");
}

void Subgroup::compute_generators() {
  generators_.clear();
  const FiniteGroup& g = *parent_;
  std::unordered_set<ElementId> cur{g.identity()};
  for (ElementId x : members_) {
    if (cur.count(x)) continue;
    generators_.push_back(x);
    std::vector<ElementId> elems{g.identity()};
    cur = {g.identity()};
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (ElementId s : generators_) {
        ElementId c = g.mul(elems[i], s);
        if (cur.insert(c).second) elems.push_back(c);
      }
    if (elems.size() > members_.size()) break;  // not closed; the caller detects it
  }
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const ElementId> gens) {
  for (auto x : gens)
    if (x >= parent->order()) throw Error(ErrorCode::InvalidArgument, "generator id out of range");
  return close_subgroup(parent, gens);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  Subgroup h(parent, std::move(all), Unchecked{});
  h.generators_.assign(parent->generators().begin(), parent->generators().end());
  return h;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementId e = parent->identity();
  Subgroup h(parent, std::vector<ElementId>{e}, Unchecked{});
  return h;
}

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

ElementId GroupMono::apply(ElementId x) const {
  auto m = source.members();
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x)
    throw Error(ErrorCode::InvalidArgument, "element outside the domain of the monomorphism");
  return images[static_cast<std::size_t>(it - m.begin())];
}

void GroupMono::validate() const {
  if (images.size() != source.order())
    throw Error(ErrorCode::InvalidArgument, "monomorphism image count mismatch");
  std::vector<ElementId> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidArgument, "map is not injective");
  for (auto y : images)
    if (!target.contains(y)) throw Error(ErrorCode::InvalidArgument, "image outside target");
  const FiniteGroup& sg = source.parent();
  const FiniteGroup& tg = target.parent();
  for (ElementId a : source.members())
    for (ElementId s : source.generators())
      if (apply(sg.mul(a, s)) != tg.mul(apply(a), apply(s)))
        throw Error(ErrorCode::InvalidArgument, "map is not a homomorphism");
}

// ---------------------------------------------------------------------------
// operations

std::vector<Subgroup> enumerate_subgroups(const Subgroup& H, std::size_t cap) {
  if (H.order() > cap)
    throw Error(ErrorCode::CapExceeded, "subgroup enumeration limited to order " +
                                            std::to_string(cap));
  const GroupPtr& parent = H.parent_ptr();
  const FiniteGroup& g = *parent;
  std::unordered_set<std::vector<ElementId>, VectorHash> seen;
  std::vector<Subgroup> found{Subgroup::trivial(parent)};
  seen.insert(found.front().member_vector());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup K = found[i];
    std::unordered_set<ElementId> covered(K.members().begin(), K.members().end());
    for (ElementId x : H.members()) {
      if (covered.count(x)) continue;
      for (ElementId k : K.members()) covered.insert(g.mul(x, k));  // <K,x> = <K,xk>
      std::vector<ElementId> gens(K.generators().begin(), K.generators().end());
      gens.push_back(x);
      Subgroup J = close_subgroup(parent, gens);
      if (seen.insert(J.member_vector()).second) found.push_back(std::move(J));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

void require_parent(const GroupPtr& G, const Subgroup& P) {
  if (P.parent_ptr() != G)
    throw Error(ErrorCode::NotASubgroup, "subgroup does not belong to the given group");
}

bool normalizes(const FiniteGroup& g, ElementId x, const Subgroup& P) {
  for (ElementId s : P.generators())
    if (!P.contains(g.conjugate(x, s))) return false;
  return true;
}

bool centralizes(const FiniteGroup& g, ElementId x, const Subgroup& P) {
  for (ElementId s : P.generators())
    if (g.mul(x, s) != g.mul(s, x)) return false;
  return true;
}

}  // namespace

Subgroup centralizer(const GroupPtr& G, const Subgroup& P) {
  require_parent(G, P);
  return centralizer_in(Subgroup::whole(G), P);
}

Subgroup normalizer(const GroupPtr& G, const Subgroup& P) {
  require_parent(G, P);
  return normalizer_in(Subgroup::whole(G), P);
}

Subgroup centralizer_in(const Subgroup& H, const Subgroup& P) {
  if (H.parent_ptr() != P.parent_ptr())
    throw Error(ErrorCode::NotASubgroup, "subgroups of different groups");
  std::vector<ElementId> out;
  for (ElementId x : H.members())
    if (centralizes(H.parent(), x, P)) out.push_back(x);
  return close_subgroup(H.parent_ptr(), out);
}

Subgroup normalizer_in(const Subgroup& H, const Subgroup& P) {
  if (H.parent_ptr() != P.parent_ptr())
    throw Error(ErrorCode::NotASubgroup, "subgroups of different groups");
  std::vector<ElementId> out;
  for (ElementId x : H.members())
    if (normalizes(H.parent(), x, P)) out.push_back(x);
  return close_subgroup(H.parent_ptr(), out);
}

Subgroup center(const Subgroup& P) { return centralizer_in(P, P); }

LocalData local_data(const GroupPtr& G, const Subgroup& P) {
  require_parent(G, P);
  return LocalData{centralizer(G, P), normalizer(G, P), center(P)};
}

std::vector<ElementId> transporter_set(const GroupPtr& G, const Subgroup& P,
                                       const Subgroup& Q) {
  require_parent(G, P);
  require_parent(G, Q);
  std::vector<ElementId> out;
  if (P.order() > Q.order() || Q.order() % P.order() != 0) return out;
  const FiniteGroup& g = *G;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId s : P.generators())
      if (!Q.contains(g.conjugate(x, s))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

Subgroup normal_closure(const Subgroup& H, std::span<const ElementId> seeds) {
  const FiniteGroup& g = H.parent();
  std::vector<ElementId> gens(seeds.begin(), seeds.end());
  Subgroup N = close_subgroup(H.parent_ptr(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (ElementId h : H.generators()) {
      for (ElementId n : N.generators()) {
        ElementId c = g.conjugate(h, n);
        if (!N.contains(c)) {
          gens.push_back(c);
          N = close_subgroup(H.parent_ptr(), gens);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return N;
}

namespace {

// Greedy largest normal subgroup whose order satisfies `keep`. An element x
// lies in that subgroup iff its normal closure does, so growing N one
// element at a time never discards a member.
template <class ElementOk, class OrderOk>
Subgroup largest_normal(const Subgroup& H, ElementOk element_ok, OrderOk order_ok) {
  const FiniteGroup& g = H.parent();
  Subgroup N = Subgroup::trivial(H.parent_ptr());
  std::unordered_set<ElementId> rejected;
  for (ElementId x : H.members()) {
    if (N.contains(x) || rejected.count(x)) continue;
    if (!element_ok(g.element_order(x))) continue;
    std::vector<ElementId> seeds(N.generators().begin(), N.generators().end());
    seeds.push_back(x);
    Subgroup M = normal_closure(H, seeds);
    if (order_ok(M.order())) {
      N = std::move(M);
    } else {
      // x fails for every larger N as well; so do its H-conjugates
      for (ElementId h : H.members()) rejected.insert(g.conjugate(h, x));
    }
  }
  return N;
}

}  // namespace

Subgroup p_prime_core(const Subgroup& H, unsigned p) {
  return largest_normal(
      H, [p](std::uint64_t ord) { return ord % p != 0; },
      [p](std::size_t ord) { return ord % p != 0; });
}

Subgroup p_core(const Subgroup& H, unsigned p) {
  return largest_normal(
      H, [p](std::uint64_t ord) { return is_power_of(ord, p); },
      [p](std::size_t ord) { return is_power_of(ord, p); });
}

Subgroup conjugate_subgroup(const Subgroup& P, ElementId g) {
  const FiniteGroup& G = P.parent();
  std::vector<ElementId> gens;
  for (ElementId s : P.generators()) gens.push_back(G.conjugate(g, s));
  return close_subgroup(P.parent_ptr(), gens);
}

Subgroup sylow_subgroup(const GroupPtr& G, unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  const FiniteGroup& g = *G;
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup P = Subgroup::trivial(G);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool extended = false;
    for (ElementId x : N.members()) {
      if (P.contains(x) || !P.contains(g.power(x, p))) continue;
      std::vector<ElementId> gens(P.generators().begin(), P.generators().end());
      gens.push_back(x);
      P = close_subgroup(G, gens);
      extended = true;
      break;
    }
    if (!extended) throw Error(ErrorCode::InvalidArgument, "Sylow search failed to extend");
  }
  // Least member set among the conjugates; one conjugator per coset of N_G(P).
  Subgroup N = normalizer(G, P);
  std::vector<char> covered(g.order(), 0);
  Subgroup best = P;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    for (ElementId n : N.members()) covered[g.mul(x, n)] = 1;
    Subgroup C = conjugate_subgroup(P, x);
    if (C.member_vector() < best.member_vector()) best = std::move(C);
  }
  return best;
}

InducedGroup induced_group(const Subgroup& H) {
  const FiniteGroup& g = H.parent();
  const std::size_t n = H.order();
  std::vector<ElementId> table(n * n);
  auto members = H.members();
  auto index = [&](ElementId x) {
    return static_cast<ElementId>(std::lower_bound(members.begin(), members.end(), x) -
                                  members.begin());
  };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.label(members[i]));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index(g.mul(members[i], members[j]));
  }
  InducedGroup out;
  out.group = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  out.embedding.assign(members.begin(), members.end());
  return out;
}

QuotientGroup quotient_group(const Subgroup& N, const Subgroup& K) {
  if (!K.is_subgroup_of(N)) throw Error(ErrorCode::NotASubgroup, "kernel is not inside N");
  const FiniteGroup& g = N.parent();
  for (ElementId x : N.generators())
    if (!normalizes(g, x, K)) throw Error(ErrorCode::InvalidArgument, "kernel is not normal");
  QuotientGroup out;
  for (ElementId x : N.members()) {
    if (out.coset_of.count(x)) continue;
    const auto id = static_cast<ElementId>(out.representatives.size());
    out.representatives.push_back(x);
    for (ElementId k : K.members()) out.coset_of.emplace(g.mul(x, k), id);
  }
  const std::size_t n = out.representatives.size();
  std::vector<ElementId> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(K.order() == 1 ? g.label(out.representatives[i])
                                    : g.label(out.representatives[i]) + "K");
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] =
          out.coset_of.at(g.mul(out.representatives[i], out.representatives[j]));
  }
  out.group = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  return out;
}

}  // namespace fusionkit
