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

// Finite groups with dense element ids, subgroups as sorted member sets, and
// the local-subgroup toolkit (Sylow, normalizer, centralizer, transporter,
// p-cores) used throughout the library.

#ifndef FUSIONKIT_GROUP_HPP
#define FUSIONKIT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace fusionkit {

using ElementId = std::uint32_t;
inline constexpr ElementId kNoElement = 0xFFFFFFFFu;

/// Images of the points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::uint64_t n) noexcept;
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept;
bool is_power_of(std::uint64_t n, std::uint64_t p) noexcept;

// ---------------------------------------------------------------------------

/// An explicitly enumerable finite group. Elements are the ids 0..order()-1.
///
/// Groups up to kTableLimit elements keep a dense multiplication table.
/// Larger permutation groups multiply on demand by composing permutations
/// and looking the product up.
class FiniteGroup {
 public:
  static constexpr std::size_t kTableLimit = 4096;
  static constexpr std::size_t kDefaultElementCap = 100000;

  /// Builds a group from a row-major table (table[a*n+b] = ab). The table is
  /// validated: identity, Latin square rows/columns, and Light's
  /// associativity test over a generating set.
  static std::shared_ptr<const FiniteGroup> from_table(
      std::size_t n, std::vector<ElementId> table,
      std::vector<std::string> labels = {});

  /// Closes the given permutations (0-based images) under composition.
  /// Elements are sorted lexicographically by image list, so id 0 is the
  /// identity. Product convention: (a*b)(x) = a(b(x)).
  static std::shared_ptr<const FiniteGroup> from_permutations(
      std::size_t degree, const std::vector<Permutation>& generators,
      std::vector<std::string> generator_names = {},
      std::size_t cap = kDefaultElementCap);

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return identity_; }
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  /// g x g^-1
  ElementId conjugate(ElementId g, ElementId x) const {
    return mul(mul(g, x), inverse_[g]);
  }
  ElementId power(ElementId a, std::uint64_t k) const;
  std::uint64_t element_order(ElementId a) const;

  std::span<const ElementId> generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_names() const noexcept {
    return generator_names_;
  }

  bool has_table() const noexcept { return !table_.empty(); }
  bool is_permutation_group() const noexcept { return degree_ > 0; }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(ElementId a) const { return perms_[a]; }
  std::optional<ElementId> find_permutation(const Permutation& perm) const;

  /// Human-readable element: cycle notation (1-based points) for permutation
  /// groups, the provided label or the numeric id otherwise.
  std::string label(ElementId a) const;

 private:
  FiniteGroup() = default;
  void finish_setup();

  std::size_t order_ = 0;
  ElementId identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> labels_;

  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, ElementId, VectorHash> perm_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

std::string format_cycles(const Permutation& perm);

/// A subgroup of a FiniteGroup: the sorted set of its member ids.
class Subgroup {
 public:
  /// Validates closure, identity and inverses; throws NotASubgroup.
  Subgroup(GroupPtr parent, std::vector<ElementId> members);

  static Subgroup generated_by(GroupPtr parent, std::span<const ElementId> gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  std::span<const ElementId> members() const noexcept { return members_; }
  const std::vector<ElementId>& member_vector() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId x) const;
  bool is_subgroup_of(const Subgroup& other) const;
  /// A deterministic generating set: greedily the least member not yet
  /// generated.
  std::span<const ElementId> generators() const noexcept { return generators_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  /// Canonical order: by order, then lexicographically by member set.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members_.size() != b.members_.size())
      return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, std::vector<ElementId> members, Unchecked);
  void compute_generators();

  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;

  friend Subgroup close_subgroup(const GroupPtr&, std::span<const ElementId>);
};

/// Closure of a set of elements of parent under multiplication.
Subgroup close_subgroup(const GroupPtr& parent, std::span<const ElementId> seeds);

/// A monomorphism between subgroups, possibly of different parents.
/// images[i] is the image of source.members()[i].
struct GroupMono {
  Subgroup source;
  Subgroup target;
  std::vector<ElementId> images;

  ElementId apply(ElementId x) const;
  /// Throws InvalidArgument unless the map is an injective homomorphism into
  /// target.
  void validate() const;
};

// ---------------------------------------------------------------------------
// operations

inline constexpr std::size_t kDefaultSubgroupCap = 512;

/// Every subgroup of H exactly once, sorted canonically. Throws CapExceeded
/// when |H| exceeds cap.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& H,
                                          std::size_t cap = kDefaultSubgroupCap);

/// The lexicographically least Sylow p-subgroup of G (trivial when p does
/// not divide |G|).
Subgroup sylow_subgroup(const GroupPtr& G, unsigned p);

struct LocalData {
  Subgroup centralizer;
  Subgroup normalizer;
  Subgroup center;
};

/// C_G(P), N_G(P) and Z(P). Throws NotASubgroup if P does not live in G.
LocalData local_data(const GroupPtr& G, const Subgroup& P);
Subgroup centralizer(const GroupPtr& G, const Subgroup& P);
Subgroup normalizer(const GroupPtr& G, const Subgroup& P);
Subgroup center(const Subgroup& P);
/// C_H(P) and N_H(P) for subgroups H, P of the same parent.
Subgroup centralizer_in(const Subgroup& H, const Subgroup& P);
Subgroup normalizer_in(const Subgroup& H, const Subgroup& P);

/// { g in G : g P g^-1 is contained in Q }, sorted.
std::vector<ElementId> transporter_set(const GroupPtr& G, const Subgroup& P,
                                       const Subgroup& Q);

/// Normal closure of seeds inside H.
Subgroup normal_closure(const Subgroup& H, std::span<const ElementId> seeds);

/// Largest normal subgroup of H of order coprime to p.
Subgroup p_prime_core(const Subgroup& H, unsigned p);
/// Largest normal p-subgroup of H.
Subgroup p_core(const Subgroup& H, unsigned p);

/// { g P g^-1 } as a subgroup.
Subgroup conjugate_subgroup(const Subgroup& P, ElementId g);

/// A subgroup as a standalone group. embedding[i] is the parent id of the
/// standalone element i (= H.members()[i]).
struct InducedGroup {
  GroupPtr group;
  std::vector<ElementId> embedding;
};
InducedGroup induced_group(const Subgroup& H);

/// N / K for a normal subgroup K of N (same parent). Quotient elements are
/// the cosets xK listed by their least member, in increasing order.
struct QuotientGroup {
  GroupPtr group;
  std::vector<ElementId> representatives;                  // quotient id -> least coset member
  std::unordered_map<ElementId, ElementId> coset_of;       // member of N -> quotient id
};
QuotientGroup quotient_group(const Subgroup& N, const Subgroup& K);

}  // namespace fusionkit

#endif  // FUSIONKIT_GROUP_HPP
