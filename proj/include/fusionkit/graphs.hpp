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

// Serre graphs, finite graphs of groups and presentations of their
// fundamental groups.
//
// Edges are directed; every edge y has a reverse edge ybar with
// o(ybar) = t(y). A geometric edge is a pair {y, ybar}; the orientation
// keeps the smaller id of each pair. In a graph of groups every edge y
// carries a group G_y = G_ybar and a monomorphism a -> a^y into G_t(y).

#ifndef FUSIONKIT_GRAPHS_HPP
#define FUSIONKIT_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/linalg.hpp"

namespace fusionkit {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct SerreGraph {
  struct Edge {
    VertexId origin;
    VertexId terminus;
    EdgeId reverse;
  };
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// Appends y and ybar; returns the id of y.
  EdgeId add_edge(VertexId origin, VertexId terminus);
};

/// Throws FixedPointInvolution or MismatchedEndpoints (InvalidArgument for
/// ids out of range).
void validate_graph(const SerreGraph& Y);

/// The least edge of each geometric edge, ascending.
std::vector<EdgeId> orientation(const SerreGraph& Y);

/// Spanning tree found breadth-first from vertex 0, scanning edges in id
/// order. Returned as oriented edges, ascending. Throws Disconnected.
std::vector<EdgeId> maximal_tree(const SerreGraph& Y);

struct GraphOfGroups {
  SerreGraph graph;
  std::vector<GroupPtr> vertex_groups;
  std::vector<GroupPtr> edge_groups;                  // edge_groups[y] == edge_groups[ybar]
  std::vector<std::vector<ElementId>> edge_maps;      // edge_maps[y][a] = a^y in G_t(y)
};

/// Validates the graph, G_y = G_ybar, and that each edge map is an injective
/// homomorphism (InvalidArgument otherwise).
void validate_graph_of_groups(const GraphOfGroups& G);

// ---------------------------------------------------------------------------
// presentations
//
//   gen a, b, t;
//   rel a^2, b^2, t a t^-1 b^-1;
//
// Words are letters separated by spaces; a letter is a generator name with an
// optional power `^k` (k >= 1) or `^-1`. The empty word is written `1`.

struct Letter {
  std::uint32_t generator;
  std::int32_t exponent;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct GeneratorOrigin {
  enum class Kind { VertexElement, EdgeLetter };
  Kind kind;
  std::uint32_t index;  // vertex id or edge id
  ElementId element;    // vertex-group element; kNoElement for edge letters
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GeneratorOrigin> origins;  // parallel to generators; may be empty
  std::vector<Word> relators;
};

std::string format_presentation(const GroupPresentation& P);
/// Parses the format above (origins are left empty). Throws ParseError.
GroupPresentation parse_presentation(const std::string& text);

/// Generators: every non-identity element of each vertex group, then one
/// letter per oriented edge. Relators: x s (xs)^-1 for each element x and
/// each stored generator s of its vertex group, y a^y y^-1 (a^ybar)^-1 for
/// each oriented y and each generator a of G_y, and y for y in T. Throws
/// NotATree unless T (oriented or not) is a maximal tree.
GroupPresentation pi1_presentation(const GraphOfGroups& G, const std::vector<EdgeId>& tree);

struct SylowCheck {
  bool ok = true;
  std::vector<std::size_t> vertex_sylow_orders;
  std::vector<std::size_t> edge_sylow_orders;
  std::optional<VertexId> unreachable;  // first vertex with no good path
};

/// Hypothesis (ii): every vertex is reached from v0 by a loop-free directed
/// path whose edge maps carry a Sylow p-subgroup of G_y onto one of G_t(y).
SylowCheck check_sylow_hypotheses(const GraphOfGroups& G, unsigned p, VertexId v0);

/// Hom(pi_1(G, Y, T), Z/p). Each basis vector lists the values on every
/// element of G_0, G_1, ... in turn, then on every non-tree oriented edge
/// letter; the basis is in reduced echelon form.
struct HomBasis {
  std::vector<std::size_t> vertex_offset;  // start column of each vertex block
  std::vector<EdgeId> free_edges;          // non-tree oriented edges, ascending
  std::size_t columns = 0;
  std::vector<ModVector> basis;
};
HomBasis hom_mod_p(const GraphOfGroups& G, const std::vector<EdgeId>& tree, unsigned p);

}  // namespace fusionkit

#endif  // FUSIONKIT_GRAPHS_HPP
