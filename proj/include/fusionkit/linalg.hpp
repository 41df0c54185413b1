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

#ifndef FUSIONKIT_LINALG_HPP
#define FUSIONKIT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit {

using ModVector = std::vector<std::uint32_t>;

/// Dense matrix over the prime field Z/p, row-major.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  static ModMatrix from_rows(const std::vector<ModVector>& rows, std::size_t cols,
                             std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void append_row(const ModVector& row);
  ModVector row(std::size_t r) const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of { x : A x = 0 }, in reduced echelon form.
  std::vector<ModVector> nullspace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Reduced row echelon basis of the span of the given vectors (zero rows
/// dropped). Two spans are equal iff their echelon bases are equal.
std::vector<ModVector> echelon_basis(const std::vector<ModVector>& vectors,
                                     std::size_t cols, std::uint32_t p);

/// Basis of Hom(G, Z/p), each homomorphism given by its value on every
/// element id of G, in reduced echelon form.
std::vector<ModVector> hom_to_cyclic(const GroupPtr& group, std::uint32_t p);

}  // namespace fusionkit

#endif  // FUSIONKIT_LINALG_HPP
