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

#include <cstdio>
#include <set>
#include <sstream>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

std::string serialize_fusion(const FusionSystem& F) {
  const SubgroupLattice& L = F.lattice();
  const FiniteGroup& S = *L.group();
  std::ostringstream out;
  out << "fusion 1\n";
  out << "p " << F.prime() << "\n";
  out << "order " << S.order() << "\n";
  out << "table\n";
  for (ElementId a = 0; a < S.order(); ++a) {
    for (ElementId b = 0; b < S.order(); ++b) out << (b ? " " : "") << S.mul(a, b);
    out << "\n";
  }
  out << "subgroups " << L.size() << "\n";
  for (SubgroupId id = 0; id < L.size(); ++id) {
    out << id << " :";
    for (ElementId x : L.at(id).members()) out << ' ' << x;
    out << "\n";
  }
  std::size_t count = 0;
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const std::size_t k = F.conjugacy_class(c).members.size();
    count += k * k * F.conjugacy_class(c).automorphisms.size();
  }
  out << "isomorphisms " << count << "\n";
  for (SubgroupId P = 0; P < L.size(); ++P)
    for (SubgroupId Q : F.conjugacy_class(F.class_of(P)).members)
      for (const Map& m : F.isomorphisms(P, Q)) {
        out << P << ' ' << Q << " :";
        auto src = L.at(P).members();
        for (std::size_t i = 0; i < m.size(); ++i)
          out << (i ? ", " : " ") << src[i] << "->" << m[i];
        out << "\n";
      }
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  std::string next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    fail("unexpected end of input");
  }
  bool at_end() {
    std::string rest;
    std::streampos pos = in_.tellg();
    while (std::getline(in_, rest))
      if (rest.find_first_not_of(" \t\r") != std::string::npos) {
        in_.clear();
        in_.seekg(pos);
        return false;
      }
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "fusion line " + std::to_string(line_no_) + ": " + msg);
  }
  std::uint64_t keyword_value(const std::string& keyword) {
    std::istringstream ls(next());
    std::string k;
    std::uint64_t v = 0;
    if (!(ls >> k >> v) || k != keyword) fail("expected '" + keyword + " <n>'");
    expect_end(ls);
    return v;
  }
  void expect_end(std::istringstream& ls) const {
    std::string extra;
    if (ls >> extra) fail("unexpected trailing text '" + extra + "'");
  }

 private:
  std::istringstream in_;
  std::size_t line_no_ = 0;
};

}  // namespace

FusionSystem parse_fusion(const std::string& text) {
  LineReader r(text);
  if (r.keyword_value("fusion") != 1) r.fail("unsupported fusion format version");
  const auto p = static_cast<unsigned>(r.keyword_value("p"));
  const std::uint64_t n = r.keyword_value("order");
  if (n == 0 || n > FiniteGroup::kTableLimit) r.fail("bad group order");
  if (r.next() != "table") r.fail("expected 'table'");
  std::vector<ElementId> table;
  for (std::uint64_t a = 0; a < n; ++a) {
    std::istringstream ls(r.next());
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t v;
      if (!(ls >> v) || v >= n) r.fail("bad table row");
      table.push_back(static_cast<ElementId>(v));
    }
    r.expect_end(ls);
  }
  GroupPtr S;
  try {
    S = FiniteGroup::from_table(n, std::move(table));
  } catch (const Error& e) {
    r.fail(std::string("invalid table: ") + e.what());
  }
  if (!is_prime(p) || !is_power_of(n, p)) r.fail("order is not a power of p");
  LatticePtr L = SubgroupLattice::create(Subgroup::whole(S), n);

  const std::uint64_t k = r.keyword_value("subgroups");
  if (k != L->size()) r.fail("subgroup count does not match the group");
  for (SubgroupId id = 0; id < k; ++id) {
    std::istringstream ls(r.next());
    std::uint64_t got;
    std::string colon;
    if (!(ls >> got >> colon) || got != id || colon != ":") r.fail("bad subgroup line");
    std::vector<ElementId> members;
    std::uint64_t x;
    while (ls >> x) members.push_back(static_cast<ElementId>(x));
    if (members != L->at(id).member_vector()) r.fail("subgroup list is not canonical");
  }

  const std::uint64_t m = r.keyword_value("isomorphisms");
  std::vector<Morphism> isos;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::string line = r.next();
    const auto colon = line.find(':');
    if (colon == std::string::npos) r.fail("missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::uint64_t P, Q;
    if (!(head >> P >> Q) || P >= L->size() || Q >= L->size()) r.fail("bad subgroup ids");
    r.expect_end(head);
    Morphism mor{static_cast<SubgroupId>(P), static_cast<SubgroupId>(Q), {}};
    std::string body = line.substr(colon + 1);
    std::istringstream items(body);
    std::string item;
    std::size_t idx = 0;
    auto src = L->at(mor.source).members();
    while (std::getline(items, item, ',')) {
      unsigned long long x = 0, y = 0;
      if (std::sscanf(item.c_str(), " %llu->%llu", &x, &y) != 2) r.fail("bad map entry");
      if (idx >= src.size() || x != src[idx]) r.fail("map entries must follow member order");
      mor.images.push_back(static_cast<ElementId>(y));
      ++idx;
    }
    if (idx != src.size()) r.fail("map does not cover the source");
    if (!L->is_monomorphism(mor.source, mor.images) || L->image(mor.source, mor.images) != mor.target)
      throw Error(ErrorCode::InvalidFusion, "listed map is not an isomorphism onto its target");
    isos.push_back(std::move(mor));
  }
  if (!r.at_end()) r.fail("trailing data");

  FusionSystem F = FusionSystem::from_isomorphisms(L, p, isos, /*include_inner=*/false);
  validate_fusion(F);
  // the listed maps must already be closed: nothing new may appear
  std::size_t total = 0;
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const std::size_t size = F.conjugacy_class(c).members.size();
    total += size * size * F.conjugacy_class(c).automorphisms.size();
  }
  std::set<Morphism> distinct(isos.begin(), isos.end());
  if (distinct.size() != isos.size())
    throw Error(ErrorCode::InvalidFusion, "duplicate morphism listed");
  if (total != isos.size())
    throw Error(ErrorCode::InvalidFusion, "listed isomorphisms are not closed under composition");
  return F;
}

}  // namespace fusionkit
