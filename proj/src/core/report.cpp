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

#include "fusionkit/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "fusionkit/error.hpp"
#include "fusionkit/local.hpp"

namespace fusionkit {

namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "fail"; }

std::string json_body(const Json& j) { return j.dump(2) + "\n"; }

FusionSystem build_fusion(const GroupPtr& G, const ReportOptions& o) {
  return fusion_of_group(G, sylow_subgroup(G, o.p), o.p, o.cap_subgroups);
}

std::vector<SubgroupId> collection_of(const FusionSystem& F, const ReportOptions& o) {
  return o.collection == Collection::Centric ? centric_collection(F) : centric_radical_collection(F);
}

const char* collection_name(Collection c) {
  return c == Collection::Centric ? "centric" : "centric-radical";
}

/// "<g1, g2>" in the labels of the ambient group.
std::string describe(const FusionSystem& F, SubgroupId P) {
  const auto& L = F.lattice();
  const FiniteGroup& G = L.sylow().parent();
  std::string out = "<";
  bool first = true;
  for (ElementId g : L.at(P).generators()) {
    if (g == L.group()->identity()) continue;
    out += (first ? "" : ", ") + G.label(L.to_parent(g));
    first = false;
  }
  return out + ">";
}

std::string format_vector(const ModVector& v) {
  std::string out;
  for (auto x : v) out += std::to_string(x);
  return out;
}

std::string format_map(const SubgroupLattice& L, SubgroupId P, const Map& m) {
  std::string out;
  const auto members = L.at(P).members();
  for (std::size_t i = 0; i < members.size(); ++i)
    out += (i ? ", " : "") + std::to_string(members[i]) + "->" + std::to_string(m[i]);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

RealizationDatum build_datum(const GroupPtr& G, const FusionSystem& F, RealizationKind kind,
                             const ReportOptions& o) {
  switch (kind) {
    case RealizationKind::Robinson:
      return robinson_tree(G, F, collection_of(F, o), o.variant);
    case RealizationKind::RobinsonOriginal:
      return robinson_tree(G, F, collection_of(F, o), RobinsonVariant::Original);
    case RealizationKind::LearyStancu:
      return leary_stancu_graph(F, o.collection == Collection::Centric ? centric_morphisms(F)
                                                                        : alperin_generators(F));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown construction");
}

std::string construction_label(RealizationKind kind, const ReportOptions& o) {
  std::string out(kind_name(kind));
  if (kind == RealizationKind::Robinson && o.variant == RobinsonVariant::Original) out += " (original variant)";
  return out;
}

std::string format_modulus(const FiniteField& F) {
  const auto& c = F.modulus();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

std::optional<RealizationKind> parse_kind(std::string_view name) {
  for (auto k : {RealizationKind::Robinson, RealizationKind::RobinsonOriginal, RealizationKind::LearyStancu})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Report analyze_report(const GroupPtr& G, const std::string& name, const ReportOptions& o) {
  const FusionSystem F = build_fusion(G, o);
  const auto sat = check_saturation(F);
  const auto classes = classify_subgroups(F);
  std::size_t cr = 0;
  for (const auto& c : classes) cr += c.centric && c.radical;
  const auto& L = F.lattice();

  Report r{sat.saturated, {}};
  if (o.format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "analyze";
    j["group"] = name;
    j["order"] = G->order();
    j["p"] = o.p;
    j["sylow_order"] = L.sylow().order();
    j["saturated"] = sat.saturated;
    j["violations"] = Json::array();
    for (const auto& v : sat.violations)
      j["violations"].push_back({{"axiom", std::string(1, v.axiom)}, {"subgroup", describe(F, v.subgroup)}, {"detail", v.detail}});
    j["class_count"] = classes.size();
    j["centric_radical_classes"] = cr;
    j["classes"] = Json::array();
    for (const auto& c : classes)
      j["classes"].push_back({{"representative", describe(F, c.representative)},
                              {"order", L.at(c.representative).order()},
                              {"members", c.class_size},
                              {"fully_normalized", c.fully_normalized},
                              {"fully_centralized", c.fully_centralized},
                              {"centric", c.centric},
                              {"radical", c.radical},
                              {"aut_order", c.aut_order}});
    r.body = json_body(j);
    return r;
  }
  std::ostringstream os;
  os << "group " << name << ": order " << G->order() << "\n"
     << "prime " << o.p << ": |S| = " << L.sylow().order() << "\n"
     << "saturated: " << yes_no(sat.saturated) << "\n";
  for (const auto& v : sat.violations)
    os << "  axiom (" << v.axiom << ") fails at " << describe(F, v.subgroup) << ": " << v.detail << "\n";
  os << "classes: " << classes.size() << "\n"
     << "centric-radical classes: " << cr << "\n"
     << std::left << std::setw(7) << "order" << std::setw(9) << "members" << std::setw(6) << "f.n."
     << std::setw(6) << "f.c." << std::setw(9) << "centric" << std::setw(9) << "radical" << std::setw(9)
     << "|Aut_F|"
     << "representative\n";
  for (const auto& c : classes)
    os << std::setw(7) << L.at(c.representative).order() << std::setw(9) << c.class_size << std::setw(6)
       << yes_no(c.fully_normalized) << std::setw(6) << yes_no(c.fully_centralized) << std::setw(9)
       << yes_no(c.centric) << std::setw(9) << yes_no(c.radical) << std::setw(9) << c.aut_order
       << describe(F, c.representative) << "\n";
  r.body = os.str();
  return r;
}

Report emit_report(const GroupPtr& G, const std::string& name, RealizationKind kind, const ReportOptions& o) {
  const FusionSystem F = build_fusion(G, o);
  const auto datum = build_datum(G, F, kind, o);
  const auto P = pi1_presentation(datum.graph, datum.tree);
  const std::string text = format_presentation(P);
  Report r;
  if (o.format == OutputFormat::Json) {
    const auto sum = summarize(datum);
    Json j;
    j["schema"] = 1;
    j["command"] = "emit";
    j["group"] = name;
    j["p"] = o.p;
    j["construction"] = kind_name(kind);
    j["variant"] = kind == RealizationKind::Robinson && o.variant == RobinsonVariant::Original ? "original"
                   : kind == RealizationKind::RobinsonOriginal                                 ? "original"
                   : kind == RealizationKind::Robinson                                         ? "quotient"
                                                                                               : "none";
    j["collection"] = collection_name(o.collection);
    j["vertex_orders"] = sum.vertex_orders;
    j["edge_orders"] = sum.edge_orders;
    j["generators"] = P.generators;
    j["relator_count"] = P.relators.size();
    j["presentation"] = text;
    r.body = json_body(j);
  } else {
    r.body = text.empty() || text.back() != '\n' ? text + "\n" : text;
  }
  return r;
}

Report verify_report(const GroupPtr& G, const std::string& name, RealizationKind kind, const ReportOptions& o) {
  const FusionSystem F = build_fusion(G, o);
  const auto datum = build_datum(G, F, kind, o);
  const auto sum = summarize(datum);
  const bool is_tree = kind != RealizationKind::LearyStancu;
  std::optional<SylowCheck> sylow;
  if (is_tree) sylow = check_sylow_hypotheses(datum.graph, o.p, datum.v0);
  const auto check = verify_realization(datum, F);
  const auto homs = hom_mod_p(datum.graph, datum.tree, o.p);
  const auto image = restrict_to_sylow(datum, homs, o.p);
  const auto stable = stable_h1(F);
  const bool equal = image == stable;

  Report r;
  r.passed = check.ok && equal && (!sylow || sylow->ok);
  std::string witness;
  if (check.witness) {
    const auto& w = *check.witness;
    witness = std::string(w.in_first ? "generated but not in F: " : "in F but not generated: ") +
              describe(F, w.source) + " -> " + describe(F, w.target) + " [" +
              format_map(F.lattice(), w.source, w.map) + "]";
  }

  if (o.format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["group"] = name;
    j["p"] = o.p;
    j["construction"] = construction_label(kind, o);
    j["collection"] = collection_name(o.collection);
    j["vertex_orders"] = sum.vertex_orders;
    j["edge_orders"] = sum.edge_orders;
    if (sylow) {
      j["sylow_check"] = {{"applicable", true},
                          {"ok", sylow->ok},
                          {"vertex_sylow_orders", sylow->vertex_sylow_orders},
                          {"edge_sylow_orders", sylow->edge_sylow_orders}};
      if (sylow->unreachable) j["sylow_check"]["unreachable"] = *sylow->unreachable;
    } else {
      j["sylow_check"] = {{"applicable", false}};
    }
    j["realization"] = {{"ok", check.ok}, {"detail", check.detail}};
    if (!witness.empty()) j["realization"]["witness"] = witness;
    Json fb = Json::array(), rb = Json::array();
    for (const auto& v : stable) fb.push_back(format_vector(v));
    for (const auto& v : image) rb.push_back(format_vector(v));
    j["stable_h1"] = {{"fusion_basis", fb}, {"restriction_basis", rb}, {"equal", equal}};
    j["verdict"] = pass_fail(r.passed);
    r.body = json_body(j);
    return r;
  }
  std::ostringstream os;
  os << "group " << name << ": order " << G->order() << ", prime " << o.p << "\n"
     << "construction: " << construction_label(kind, o) << ", collection " << collection_name(o.collection) << "\n"
     << "vertex orders: " << join(sum.vertex_orders) << "\n"
     << "edge orders: " << join(sum.edge_orders) << "\n";
  if (sylow) {
    os << "sylow hypotheses: " << pass_fail(sylow->ok);
    if (sylow->unreachable) os << " (vertex " << *sylow->unreachable << " unreachable)";
    os << "\n";
  } else {
    os << "sylow hypotheses: not applicable (not a tree)\n";
  }
  os << "realization: " << pass_fail(check.ok) << "\n";
  if (!witness.empty()) os << "  witness: " << witness << "\n";
  os << "stable h1 (fusion):";
  for (const auto& v : stable) os << " " << format_vector(v);
  os << "\nstable h1 (restriction):";
  for (const auto& v : image) os << " " << format_vector(v);
  os << "\nstable h1 equal: " << yes_no(equal) << "\n"
     << "verdict: " << pass_fail(r.passed) << "\n";
  r.body = os.str();
  return r;
}

Report linking_report(const GroupPtr& G, const std::string& name, const ReportOptions& o) {
  const FusionSystem F = build_fusion(G, o);
  const auto theta = canonical_signaliser(G, F);
  const auto L = linking_from_signaliser(G, F, theta);
  const auto violation = validate_linking_axioms(L, F);
  const auto& lat = F.lattice();

  struct Row {
    SubgroupId P;
    std::size_t z, aut_f, aut_l;
  };
  std::vector<Row> rows;
  std::size_t arrows = 0;
  for (SubgroupId P : L.objects())
    for (SubgroupId Q : L.objects()) arrows += L.arrows(P, Q).size();
  bool exact = true;
  for (std::size_t c = 0; c < F.class_count(); ++c) {
    const SubgroupId P = class_representative(F, c);
    if (!L.is_object(P)) continue;
    Row row{P, lat.at(lat.center(P)).order(), F.aut_order(P), L.aut_order(P)};
    exact &= row.aut_l == row.z * row.aut_f;
    rows.push_back(row);
  }
  Report r{!violation && exact, {}};

  if (o.format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "linking";
    j["group"] = name;
    j["p"] = o.p;
    j["objects"] = L.objects().size();
    j["arrows"] = arrows;
    j["axioms"] = {{"ok", !violation}};
    if (violation)
      j["axioms"]["violation"] = {{"axiom", std::string(1, violation->axiom)},
                                  {"P", describe(F, violation->P)},
                                  {"Q", describe(F, violation->Q)},
                                  {"detail", violation->detail}};
    j["classes"] = Json::array();
    for (const auto& row : rows)
      j["classes"].push_back({{"representative", describe(F, row.P)},
                              {"order", lat.at(row.P).order()},
                              {"center_order", row.z},
                              {"aut_f", row.aut_f},
                              {"aut_l", row.aut_l},
                              {"exact", row.aut_l == row.z * row.aut_f}});
    j["verdict"] = pass_fail(r.passed);
    r.body = json_body(j);
    return r;
  }
  std::ostringstream os;
  os << "group " << name << ": order " << G->order() << ", prime " << o.p << "\n"
     << "objects: " << L.objects().size() << "\n"
     << "arrows: " << arrows << "\n"
     << "axioms: " << pass_fail(!violation) << "\n";
  if (violation)
    os << "  axiom (" << violation->axiom << ") fails at " << describe(F, violation->P) << " -> "
       << describe(F, violation->Q) << ": " << violation->detail << "\n";
  os << std::left << std::setw(7) << "order" << std::setw(5) << "|Z|" << std::setw(9) << "|Aut_F|" << std::setw(9)
     << "|Aut_L|" << std::setw(7) << "exact"
     << "representative\n";
  for (const auto& row : rows)
    os << std::setw(7) << lat.at(row.P).order() << std::setw(5) << row.z << std::setw(9) << row.aut_f << std::setw(9)
       << row.aut_l << std::setw(7) << yes_no(row.aut_l == row.z * row.aut_f) << describe(F, row.P) << "\n";
  os << "verdict: " << pass_fail(r.passed) << "\n";
  r.body = os.str();
  return r;
}

Report solomon_report(unsigned q, unsigned m, const std::vector<std::string>& checks,
                      std::optional<CentralizerMode> mode, const ReportOptions& o) {
  for (const auto& c : checks)
    if (c != "quaternion" && c != "klein" && c != "centralizer")
      throw Error(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
  const auto P = build_solomon_pieces(q, m, o.cap_elements);
  const std::uint64_t n = P.sl2.size();
  const std::uint64_t h = n * n * n / 2;
  const auto center = center_of_s0(P);

  struct Row {
    std::string name;
    SolomonCheck result;
  };
  std::vector<Row> rows;
  for (const std::string c : {"quaternion", "klein", "centralizer"}) {
    if (std::find(checks.begin(), checks.end(), c) == checks.end()) continue;
    if (c == "quaternion") rows.push_back({c, check_quaternion_lemma(P)});
    if (c == "klein") rows.push_back({c, check_klein_uniqueness(P)});
    if (c == "centralizer") {
      const auto md = mode.value_or(h <= o.cap_elements ? CentralizerMode::Full : CentralizerMode::Coordinatewise);
      auto res = check_centralizer_in_h(P, md, o.jobs, o.cap_elements);
      res.detail = std::string(md == CentralizerMode::Full ? "full" : "coordinatewise") + "; " + res.detail;
      rows.push_back({c, res});
    }
  }
  Report r;
  for (const auto& row : rows) r.passed &= row.result.ok;

  if (o.format == OutputFormat::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "solomon-check";
    j["q"] = q;
    j["m"] = m;
    j["field_size"] = P.field.size();
    j["modulus"] = format_modulus(P.field);
    j["A"] = format_mat(P.A);
    j["B"] = format_mat(P.B);
    j["counts"] = {{"sl2", n},       {"C", P.C.size()},          {"Q", P.Q.size()},
                   {"S0", P.S0.size()}, {"U", P.U.size()},       {"omega_kernel", P.omega_kernel},
                   {"Z_S0", center.size()}, {"H", h}};
    j["z_in_U"] = std::binary_search(P.U.begin(), P.U.end(), P.z);
    j["checks"] = Json::array();
    for (const auto& row : rows) {
      Json c = {{"name", row.name}, {"ok", row.result.ok}, {"detail", row.result.detail}};
      if (!row.result.witness.empty()) c["witness"] = row.result.witness;
      j["checks"].push_back(c);
    }
    j["verdict"] = pass_fail(r.passed);
    r.body = json_body(j);
    return r;
  }
  std::ostringstream os;
  os << "solomon q=" << q << " m=" << m << "\n"
     << "field: " << P.field.size() << " elements, modulus " << format_modulus(P.field) << "\n"
     << "A = " << format_mat(P.A) << ", B = " << format_mat(P.B) << "\n"
     << "|SL2| = " << n << "\n"
     << "|C| = " << P.C.size() << "\n"
     << "|Q| = " << P.Q.size() << "\n"
     << "|S0| = " << P.S0.size() << "\n"
     << "|U| = " << P.U.size() << "\n"
     << "omega kernel = " << P.omega_kernel << "\n"
     << "|Z(S0)| = " << center.size() << "\n"
     << "z in U: " << yes_no(std::binary_search(P.U.begin(), P.U.end(), P.z)) << "\n"
     << std::left << std::setw(13) << "check" << std::setw(8) << "result"
     << "detail\n";
  for (const auto& row : rows) {
    os << std::setw(13) << row.name << std::setw(8) << pass_fail(row.result.ok) << row.result.detail << "\n";
    if (!row.result.witness.empty()) os << "  witness: " << row.result.witness << "\n";
  }
  os << "verdict: " << pass_fail(r.passed) << "\n";
  r.body = os.str();
  return r;
}

}  // namespace fusionkit
