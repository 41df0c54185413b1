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

// Group definition files.
//
//   file       := { blank | comment } format body
//   comment    := '#' up to end of line (allowed anywhere)
//   format     := 'perm' | 'table'
//
//   perm body  := definition { (';' | newline) definition }
//   definition := name '=' cycles
//   name       := letter { letter | digit | '_' }
//   cycles     := '()' | cycle { cycle }
//   cycle      := '(' point { [','] point } ')'      points are 1-based
//
//   table body := n  followed by n*n element ids, row-major (row a, column b
//                 holds the id of a*b); ids are 0..n-1
//
// Generators are closed under composition; the degree is the largest point
// mentioned. Permutations compose right to left: (ab)(x) = a(b(x)).

#ifndef FUSIONKIT_GROUP_IO_HPP
#define FUSIONKIT_GROUP_IO_HPP

#include <filesystem>
#include <string_view>

#include "fusionkit/group.hpp"

namespace fusionkit {

/// Throws Error(ParseError) on malformed input and Error(CapExceeded) when
/// the closed group is larger than cap.
GroupPtr parse_group(std::string_view text,
                     std::size_t cap = FiniteGroup::kDefaultElementCap);

GroupPtr load_group(const std::filesystem::path& path,
                    std::size_t cap = FiniteGroup::kDefaultElementCap);

}  // namespace fusionkit

#endif  // FUSIONKIT_GROUP_IO_HPP
