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

#include "fusionkit/group_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out += c;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}

  void skip_space(bool newlines = true) {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           (newlines || s_[pos_] != '\n'))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  std::string word() {
    skip_space();
    std::string w;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      w += s_[pos_++];
    return w;
  }
  std::uint64_t number() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > 100000000ull) fail("number too large");
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i)
      if (s_[i] == '\n') ++line;
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

using Cycles = std::vector<std::vector<std::uint64_t>>;

Cycles parse_cycles(Cursor& cur) {
  Cycles cycles;
  cur.skip_space(false);
  if (cur.peek() != '(') cur.fail("expected '(' to start a cycle");
  while (cur.peek() == '(') {
    cur.get();
    std::vector<std::uint64_t> cycle;
    cur.skip_space();
    while (cur.peek() != ')') {
      std::uint64_t pt = cur.number();
      if (pt == 0) cur.fail("points are numbered from 1");
      cycle.push_back(pt);
      cur.skip_space();
      if (cur.peek() == ',') {
        cur.get();
        cur.skip_space();
      }
      if (cur.peek() == '\0') cur.fail("unterminated cycle");
    }
    cur.get();
    std::set<std::uint64_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) cur.fail("repeated point inside a cycle");
    cycles.push_back(std::move(cycle));
    cur.skip_space(false);
  }
  return cycles;
}

GroupPtr parse_perm_body(Cursor& cur, std::size_t cap) {
  std::vector<std::string> names;
  std::vector<Cycles> defs;
  while (!cur.done()) {
    std::string name = cur.word();
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      cur.fail("expected a generator name");
    for (const auto& n : names)
      if (n == name) cur.fail("duplicate generator name '" + name + "'");
    cur.skip_space(false);
    if (cur.get() != '=') cur.fail("expected '=' after generator name");
    defs.push_back(parse_cycles(cur));
    names.push_back(std::move(name));
    cur.skip_space(false);
    char c = cur.peek();
    if (c == ';' || c == '\n') {
      cur.get();
    } else if (c != '\0') {
      cur.fail("expected ';' or newline between definitions");
    }
  }
  if (names.empty()) cur.fail("perm group needs at least one generator");

  std::uint64_t degree = 1;
  for (const auto& cyc : defs)
    for (const auto& c : cyc)
      for (auto pt : c) degree = std::max(degree, pt);
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < defs.size(); ++g) {
    Permutation perm(degree);
    for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
    std::vector<char> touched(degree, 0);
    for (const auto& c : defs[g]) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t from = c[i] - 1;
        if (touched[from]++)
          throw Error(ErrorCode::ParseError,
                      "generator '" + names[g] + "': cycles are not disjoint");
        perm[from] = static_cast<std::uint32_t>(c[(i + 1) % c.size()] - 1);
      }
    }
    gens.push_back(std::move(perm));
  }
  return FiniteGroup::from_permutations(degree, gens, names, cap);
}

GroupPtr parse_table_body(Cursor& cur, std::size_t cap) {
  std::uint64_t n = cur.number();
  if (n == 0) cur.fail("table order must be positive");
  if (n > cap) throw Error(ErrorCode::CapExceeded, "table order exceeds element cap");
  if (n > FiniteGroup::kTableLimit)
    throw Error(ErrorCode::CapExceeded, "table groups are limited to 4096 elements");
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (std::uint64_t i = 0; i < n * n; ++i) {
    if (cur.done()) cur.fail("table has fewer than n^2 entries");
    std::uint64_t v = cur.number();
    if (v >= n) cur.fail("table entry out of range");
    table.push_back(static_cast<ElementId>(v));
  }
  if (!cur.done()) cur.fail("trailing data after table");
  try {
    return FiniteGroup::from_table(n, std::move(table));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument)
      throw Error(ErrorCode::ParseError, std::string("invalid group table: ") + e.what());
    throw;
  }
}

}  // namespace

GroupPtr parse_group(std::string_view text, std::size_t cap) {
  Cursor cur(strip_comments(text));
  if (cur.done()) throw Error(ErrorCode::ParseError, "empty group definition");
  std::string kind = cur.word();
  if (kind == "perm") return parse_perm_body(cur, cap);
  if (kind == "table") return parse_table_body(cur, cap);
  cur.fail("expected 'perm' or 'table', found '" + kind + "'");
}

GroupPtr load_group(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), cap);
}

}  // namespace fusionkit
