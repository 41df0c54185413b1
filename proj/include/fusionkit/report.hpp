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

// Deterministic text and JSON reports for the command-line workflows.

#ifndef FUSIONKIT_REPORT_HPP
#define FUSIONKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/constructions.hpp"
#include "fusionkit/solomon.hpp"

namespace fusionkit {

enum class OutputFormat { Text, Json };
enum class Collection { CentricRadical, Centric };

struct ReportOptions {
  unsigned p = 2;
  Collection collection = Collection::CentricRadical;
  RobinsonVariant variant = RobinsonVariant::Quotient;
  OutputFormat format = OutputFormat::Text;
  std::size_t cap_subgroups = kDefaultSubgroupCap;
  std::size_t cap_elements = FiniteGroup::kDefaultElementCap;
  unsigned jobs = 1;
};

struct Report {
  bool passed = true;  // every mathematical check held
  std::string body;    // ends with a newline
};

/// Saturation and the class table of F_S(G).
Report analyze_report(const GroupPtr& G, const std::string& name, const ReportOptions& opts);

/// pi_1 presentation of a realization. For Robinson kinds the variant comes
/// from the kind; Leary-Stancu takes alperin_generators (centric-radical
/// collection) or every centric morphism (centric collection).
Report emit_report(const GroupPtr& G, const std::string& name, RealizationKind kind,
                   const ReportOptions& opts);

/// Realization verdict, Sylow hypotheses and the degree-1 comparison.
Report verify_report(const GroupPtr& G, const std::string& name, RealizationKind kind,
                     const ReportOptions& opts);

/// Canonical signaliser, linking axioms and |Aut_L(P)| = |Z(P)| |Aut_F(P)|.
Report linking_report(const GroupPtr& G, const std::string& name, const ReportOptions& opts);

/// checks: any of "quaternion", "klein", "centralizer". Without a mode the
/// centralizer check scans fully when |H| fits in cap_elements.
Report solomon_report(unsigned q, unsigned m, const std::vector<std::string>& checks,
                      std::optional<CentralizerMode> mode, const ReportOptions& opts);

/// Parses "robinson", "robinson-original" or "leary-stancu".
std::optional<RealizationKind> parse_kind(std::string_view name);

}  // namespace fusionkit

#endif  // FUSIONKIT_REPORT_HPP
