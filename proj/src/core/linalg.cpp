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

#include "fusionkit/linalg.hpp"

#include <algorithm>

#include "fusionkit/error.hpp"

namespace fusionkit {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
}

ModMatrix ModMatrix::from_rows(const std::vector<ModVector>& rows, std::size_t cols,
                               std::uint32_t p) {
  ModMatrix m(0, cols, p);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void ModMatrix::append_row(const ModVector& row) {
  if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  for (auto x : row) data_.push_back(x % p_);
  ++rows_;
}

ModVector ModMatrix::row(std::size_t r) const {
  return ModVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<std::size_t> ModMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t piv = lead;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != lead)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(piv, k), at(lead, k));
    const std::uint64_t inv = mod_inverse(at(lead, c), p_);
    for (std::size_t k = 0; k < cols_; ++k)
      at(lead, k) = static_cast<std::uint32_t>(at(lead, k) * inv % p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || at(r, c) == 0) continue;
      const std::uint64_t f = at(r, c);
      for (std::size_t k = 0; k < cols_; ++k)
        at(r, k) = static_cast<std::uint32_t>((at(r, k) + (p_ - f) * at(lead, k)) % p_);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix copy = *this;
  return copy.rref().size();
}

std::vector<ModVector> ModMatrix::nullspace() const {
  ModMatrix r = *this;
  const auto pivots = r.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p_ - r.at(i, free)) % p_;
    basis.push_back(std::move(v));
  }
  return echelon_basis(basis, cols_, p_);
}

std::vector<ModVector> echelon_basis(const std::vector<ModVector>& vectors,
                                     std::size_t cols, std::uint32_t p) {
  ModMatrix m = ModMatrix::from_rows(vectors, cols, p);
  const auto pivots = m.rref();
  std::vector<ModVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::vector<ModVector> hom_to_cyclic(const GroupPtr& group, std::uint32_t p) {
  const FiniteGroup& g = *group;
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  // Kernel of the universal map to an elementary abelian p-group: normal
  // closure of generator commutators and p-th powers.
  const std::size_t n = g.order();
  std::vector<ElementId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<ElementId>(i);
  Subgroup whole(group, all);
  std::vector<ElementId> seeds;
  auto gens = g.generators();
  for (ElementId a : gens) {
    seeds.push_back(g.power(a, p));
    for (ElementId b : gens)
      seeds.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
  }
  Subgroup K = normal_closure(whole, seeds);

  // Basis of G/K from greedily chosen representatives.
  std::vector<ElementId> basis;
  Subgroup W = K;
  for (ElementId x = 0; x < n; ++x) {
    if (W.contains(x)) continue;
    basis.push_back(x);
    std::vector<ElementId> ws(W.generators().begin(), W.generators().end());
    ws.push_back(x);
    W = close_subgroup(group, ws);
  }
  const std::size_t d = basis.size();
  if (d == 0) return {};

  // coordinates of every element: walk all exponent tuples
  std::vector<ModVector> coords(n);
  ModVector e(d, 0);
  while (true) {
    ElementId word = g.identity();
    for (std::size_t i = 0; i < d; ++i) word = g.mul(word, g.power(basis[i], e[i]));
    for (ElementId k : K.members()) coords[g.mul(word, k)] = e;
    std::size_t i = 0;
    while (i < d && ++e[i] == p) e[i++] = 0;
    if (i == d) break;
  }
  std::vector<ModVector> homs(d, ModVector(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) homs[i][x] = coords[x][i];
  return echelon_basis(homs, n, p);
}

}  // namespace fusionkit
