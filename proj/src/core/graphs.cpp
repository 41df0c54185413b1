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

#include "fusionkit/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

EdgeId SerreGraph::add_edge(VertexId origin, VertexId terminus) {
  const auto y = static_cast<EdgeId>(edges.size());
  edges.push_back({origin, terminus, y + 1});
  edges.push_back({terminus, origin, y});
  return y;
}

void validate_graph(const SerreGraph& Y) {
  for (EdgeId y = 0; y < Y.edges.size(); ++y) {
    const auto& e = Y.edges[y];
    if (e.origin >= Y.vertex_count || e.terminus >= Y.vertex_count || e.reverse >= Y.edges.size())
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(y) + " refers to an unknown id");
    if (e.reverse == y)
      throw Error(ErrorCode::FixedPointInvolution, "edge " + std::to_string(y) + " is its own reverse");
    const auto& r = Y.edges[e.reverse];
    if (r.reverse != y)
      throw Error(ErrorCode::FixedPointInvolution, "reversal is not an involution at edge " + std::to_string(y));
    if (r.origin != e.terminus || r.terminus != e.origin)
      throw Error(ErrorCode::MismatchedEndpoints, "edge " + std::to_string(y) + " and its reverse disagree");
  }
}

std::vector<EdgeId> orientation(const SerreGraph& Y) {
  std::vector<EdgeId> out;
  for (EdgeId y = 0; y < Y.edges.size(); ++y)
    if (y < Y.edges[y].reverse) out.push_back(y);
  return out;
}

std::vector<EdgeId> maximal_tree(const SerreGraph& Y) {
  validate_graph(Y);
  if (Y.vertex_count == 0) return {};
  std::vector<bool> seen(Y.vertex_count, false);
  std::vector<VertexId> queue{0};
  seen[0] = true;
  std::vector<EdgeId> tree;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (EdgeId y = 0; y < Y.edges.size(); ++y) {
      const auto& e = Y.edges[y];
      if (e.origin != v || seen[e.terminus]) continue;
      seen[e.terminus] = true;
      queue.push_back(e.terminus);
      tree.push_back(std::min(y, e.reverse));
    }
  }
  if (queue.size() != Y.vertex_count)
    throw Error(ErrorCode::Disconnected, "vertex " +
                                             std::to_string(std::find(seen.begin(), seen.end(), false) - seen.begin()) +
                                             " is unreachable from vertex 0");
  std::sort(tree.begin(), tree.end());
  return tree;
}

void validate_graph_of_groups(const GraphOfGroups& G) {
  const SerreGraph& Y = G.graph;
  validate_graph(Y);
  if (G.vertex_groups.size() != Y.vertex_count || G.edge_groups.size() != Y.edges.size() ||
      G.edge_maps.size() != Y.edges.size())
    throw Error(ErrorCode::InvalidArgument, "group data does not match the graph");
  for (EdgeId y = 0; y < Y.edges.size(); ++y) {
    const GroupPtr& Gy = G.edge_groups[y];
    if (!Gy || Gy != G.edge_groups[Y.edges[y].reverse])
      throw Error(ErrorCode::InvalidArgument, "G_y and G_ybar differ at edge " + std::to_string(y));
    const GroupPtr& T = G.vertex_groups[Y.edges[y].terminus];
    const auto& m = G.edge_maps[y];
    if (m.size() != Gy->order())
      throw Error(ErrorCode::InvalidArgument, "edge map " + std::to_string(y) + " has the wrong length");
    std::vector<ElementId> images(m);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end() ||
        (!images.empty() && images.back() >= T->order()))
      throw Error(ErrorCode::InvalidArgument, "edge map " + std::to_string(y) + " is not injective");
    for (ElementId a = 0; a < Gy->order(); ++a)
      for (ElementId b : Gy->generators())
        if (m[Gy->mul(a, b)] != T->mul(m[a], m[b]))
          throw Error(ErrorCode::InvalidArgument, "edge map " + std::to_string(y) + " is not a homomorphism");
  }
}

// ---------------------------------------------------------------------------
// presentations

std::string format_presentation(const GroupPresentation& P) {
  std::ostringstream out;
  out << "gen";
  for (std::size_t i = 0; i < P.generators.size(); ++i) out << (i ? ", " : " ") << P.generators[i];
  out << ";\nrel";
  for (std::size_t r = 0; r < P.relators.size(); ++r) {
    out << (r ? ", " : " ");
    const Word& w = P.relators[r];
    if (w.empty()) out << '1';
    for (std::size_t i = 0; i < w.size();) {
      if (i) out << ' ';
      out << P.generators[w[i].generator];
      if (w[i].exponent < 0) {
        out << "^-1";
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (j - i > 1) out << '^' << (j - i);
      i = j;
    }
  }
  out << ";\n";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

/// Text of a `<keyword> ... ;` declaration.
std::string declaration(const std::string& text, std::size_t& pos, const std::string& keyword) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.compare(pos, keyword.size(), keyword) != 0)
    throw Error(ErrorCode::ParseError, "expected '" + keyword + "'");
  pos += keyword.size();
  const auto end = text.find(';', pos);
  if (end == std::string::npos) throw Error(ErrorCode::ParseError, "missing ';' after " + keyword);
  std::string body = text.substr(pos, end - pos);
  pos = end + 1;
  return body;
}

}  // namespace

GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation P;
  std::size_t pos = 0;
  const std::string gens = trim(declaration(text, pos, "gen"));
  std::unordered_map<std::string, std::uint32_t> index;
  if (!gens.empty())
    for (const std::string& name : split(gens, ',')) {
      if (!valid_name(name)) throw Error(ErrorCode::ParseError, "bad generator name '" + name + "'");
      if (!index.emplace(name, static_cast<std::uint32_t>(P.generators.size())).second)
        throw Error(ErrorCode::ParseError, "duplicate generator '" + name + "'");
      P.generators.push_back(name);
    }
  const std::string rels = trim(declaration(text, pos, "rel"));
  if (!trim(text.substr(pos)).empty()) throw Error(ErrorCode::ParseError, "trailing text");
  if (rels.empty()) return P;
  for (const std::string& rel : split(rels, ',')) {
    Word w;
    std::istringstream in(rel);
    std::string tok;
    bool any = false;
    while (in >> tok) {
      any = true;
      if (tok == "1") continue;
      const auto caret = tok.find('^');
      const std::string name = tok.substr(0, caret);
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::ParseError, "unknown generator '" + name + "'");
      if (caret == std::string::npos) {
        w.push_back({it->second, 1});
        continue;
      }
      const std::string power = tok.substr(caret + 1);
      if (power == "-1") {
        w.push_back({it->second, -1});
        continue;
      }
      if (power.empty() || !std::all_of(power.begin(), power.end(), [](char c) { return c >= '0' && c <= '9'; }) || power.size() > 6 ||
          std::stoul(power) == 0)
        throw Error(ErrorCode::ParseError, "bad power in '" + tok + "'");
      for (unsigned long k = std::stoul(power); k > 0; --k) w.push_back({it->second, 1});
    }
    if (!any) throw Error(ErrorCode::ParseError, "empty relator");
    P.relators.push_back(std::move(w));
  }
  return P;
}

namespace {

/// Geometric representatives of T; throws NotATree unless they span Y
/// without cycles.
std::vector<EdgeId> normalize_tree(const SerreGraph& Y, const std::vector<EdgeId>& tree) {
  std::vector<EdgeId> reps;
  for (EdgeId y : tree) {
    if (y >= Y.edges.size()) throw Error(ErrorCode::NotATree, "unknown edge " + std::to_string(y));
    reps.push_back(std::min(y, Y.edges[y].reverse));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<VertexId> parent(Y.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId y : reps) {
    const VertexId a = root(Y.edges[y].origin), b = root(Y.edges[y].terminus);
    if (a == b) throw Error(ErrorCode::NotATree, "edge " + std::to_string(y) + " closes a cycle");
    parent[a] = b;
  }
  if (Y.vertex_count > 0 && reps.size() + 1 != Y.vertex_count)
    throw Error(ErrorCode::NotATree, "edges do not span the graph");
  return reps;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

}  // namespace

GroupPresentation pi1_presentation(const GraphOfGroups& G, const std::vector<EdgeId>& tree) {
  validate_graph_of_groups(G);
  const SerreGraph& Y = G.graph;
  const auto tree_reps = normalize_tree(Y, tree);
  GroupPresentation P;
  std::vector<std::vector<std::uint32_t>> gen_of(Y.vertex_count);
  for (VertexId v = 0; v < Y.vertex_count; ++v) {
    const FiniteGroup& g = *G.vertex_groups[v];
    gen_of[v].assign(g.order(), UINT32_MAX);
    for (ElementId x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      gen_of[v][x] = static_cast<std::uint32_t>(P.generators.size());
      P.generators.push_back("v" + std::to_string(v) + "_" + std::to_string(x));
      P.origins.push_back({GeneratorOrigin::Kind::VertexElement, v, x});
    }
  }
  const auto A = orientation(Y);
  std::unordered_map<EdgeId, std::uint32_t> letter;
  for (EdgeId y : A) {
    letter[y] = static_cast<std::uint32_t>(P.generators.size());
    P.generators.push_back("y" + std::to_string(y));
    P.origins.push_back({GeneratorOrigin::Kind::EdgeLetter, y, kNoElement});
  }
  auto element = [&](Word& w, VertexId v, ElementId x, std::int32_t e) {
    if (gen_of[v][x] != UINT32_MAX) w.push_back({gen_of[v][x], e});
  };
  for (VertexId v = 0; v < Y.vertex_count; ++v) {
    const FiniteGroup& g = *G.vertex_groups[v];
    for (ElementId x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      for (ElementId s : g.generators()) {
        Word w;
        element(w, v, x, 1);
        element(w, v, s, 1);
        element(w, v, g.mul(x, s), -1);
        P.relators.push_back(std::move(w));
      }
    }
  }
  for (EdgeId y : A) {
    const EdgeId yb = Y.edges[y].reverse;
    const FiniteGroup& gy = *G.edge_groups[y];
    for (ElementId a : gy.generators()) {
      if (a == gy.identity()) continue;
      Word w{{letter[y], 1}};
      element(w, Y.edges[y].terminus, G.edge_maps[y][a], 1);
      w.push_back({letter[y], -1});
      element(w, Y.edges[yb].terminus, G.edge_maps[yb][a], -1);
      P.relators.push_back(std::move(w));
    }
  }
  for (EdgeId y : tree_reps) P.relators.push_back({{letter[y], 1}});
  return P;
}

SylowCheck check_sylow_hypotheses(const GraphOfGroups& G, unsigned p, VertexId v0) {
  validate_graph_of_groups(G);
  const SerreGraph& Y = G.graph;
  if (v0 >= Y.vertex_count) throw Error(ErrorCode::InvalidArgument, "unknown base vertex");
  SylowCheck out;
  for (const auto& g : G.vertex_groups) out.vertex_sylow_orders.push_back(p_part(g->order(), p));
  for (const auto& g : G.edge_groups) out.edge_sylow_orders.push_back(p_part(g->order(), p));
  // A monomorphism carries a Sylow of G_y onto a Sylow of G_t(y) exactly
  // when the Sylow orders agree, so good paths are paths of good edges and
  // a breadth-first search finds loop-free ones.
  std::vector<bool> reached(Y.vertex_count, false);
  std::vector<VertexId> queue{v0};
  reached[v0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (EdgeId y = 0; y < Y.edges.size(); ++y) {
      const auto& e = Y.edges[y];
      if (e.origin != queue[head] || reached[e.terminus]) continue;
      if (out.edge_sylow_orders[y] != out.vertex_sylow_orders[e.terminus]) continue;
      reached[e.terminus] = true;
      queue.push_back(e.terminus);
    }
  for (VertexId v = 0; v < Y.vertex_count; ++v)
    if (!reached[v]) {
      out.ok = false;
      out.unreachable = v;
      break;
    }
  return out;
}

HomBasis hom_mod_p(const GraphOfGroups& G, const std::vector<EdgeId>& tree, unsigned p) {
  validate_graph_of_groups(G);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  const SerreGraph& Y = G.graph;
  const auto tree_reps = normalize_tree(Y, tree);
  HomBasis out;
  for (EdgeId y : orientation(Y))
    if (!std::binary_search(tree_reps.begin(), tree_reps.end(), y)) out.free_edges.push_back(y);

  // unknowns: coefficients on a basis of Hom(G_v, Z/p) per vertex, then one
  // value per free edge letter
  std::vector<std::vector<ModVector>> vb(Y.vertex_count);
  std::vector<std::size_t> coeff_offset;
  std::size_t unknowns = 0;
  for (VertexId v = 0; v < Y.vertex_count; ++v) {
    vb[v] = hom_to_cyclic(G.vertex_groups[v], p);
    coeff_offset.push_back(unknowns);
    unknowns += vb[v].size();
    out.vertex_offset.push_back(out.columns);
    out.columns += G.vertex_groups[v]->order();
  }
  const std::size_t edge_unknowns = unknowns;
  unknowns += out.free_edges.size();
  out.columns += out.free_edges.size();

  // f_t(y)(a^y) = f_o(y)(a^ybar); edge letters cancel in an abelian target
  std::vector<ModVector> rows;
  for (EdgeId y : orientation(Y)) {
    const EdgeId yb = Y.edges[y].reverse;
    const VertexId t = Y.edges[y].terminus, o = Y.edges[yb].terminus;
    for (ElementId a : G.edge_groups[y]->generators()) {
      ModVector row(unknowns, 0);
      for (std::size_t i = 0; i < vb[t].size(); ++i)
        row[coeff_offset[t] + i] = (row[coeff_offset[t] + i] + vb[t][i][G.edge_maps[y][a]]) % p;
      for (std::size_t i = 0; i < vb[o].size(); ++i)
        row[coeff_offset[o] + i] = (row[coeff_offset[o] + i] + p - vb[o][i][G.edge_maps[yb][a]]) % p;
      rows.push_back(std::move(row));
    }
  }
  std::vector<ModVector> null;
  if (rows.empty()) {
    for (std::size_t i = 0; i < unknowns; ++i) {
      ModVector e(unknowns, 0);
      e[i] = 1;
      null.push_back(std::move(e));
    }
  } else {
    null = ModMatrix::from_rows(rows, unknowns, p).nullspace();
  }
  std::vector<ModVector> values;
  for (const ModVector& c : null) {
    ModVector val(out.columns, 0);
    for (VertexId v = 0; v < Y.vertex_count; ++v)
      for (std::size_t i = 0; i < vb[v].size(); ++i)
        for (std::size_t x = 0; x < vb[v][i].size(); ++x)
          val[out.vertex_offset[v] + x] =
              static_cast<std::uint32_t>((val[out.vertex_offset[v] + x] +
                                          std::uint64_t(c[coeff_offset[v] + i]) * vb[v][i][x]) % p);
    for (std::size_t j = 0; j < out.free_edges.size(); ++j)
      val[out.columns - out.free_edges.size() + j] = c[edge_unknowns + j];
    values.push_back(std::move(val));
  }
  out.basis = echelon_basis(values, out.columns, p);
  return out;
}

}  // namespace fusionkit
