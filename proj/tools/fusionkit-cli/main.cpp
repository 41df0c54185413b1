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

// Command-line front end over the fusionkit C interface.
//
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 bad input or configuration.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "fusionkit/fusionkit.h"

namespace {

struct Config {
  unsigned p = 2;
  std::string collection = "centric-radical";
  std::string variant = "quotient";
  std::string format = "text";
  std::size_t cap_subgroups = 512;
  std::size_t cap_elements = 100000;
  unsigned jobs = 1;
  std::string output;
  std::vector<std::string> inputs;
  std::string construction = "robinson";
  unsigned q = 3, m = 1;
  std::string checks = "quaternion,klein,centralizer";
  std::string centralizer_mode = "auto";
};

struct Outcome {
  fk_status status = FK_OK;
  std::string report;
  std::string error;
};

using OptionsPtr = std::unique_ptr<fk_options, decltype(&fk_options_free)>;
using GroupHandle = std::unique_ptr<fk_group, decltype(&fk_group_free)>;

OptionsPtr make_options(const Config& c) {
  fk_options* raw = nullptr;
  if (fk_options_new(&raw) != FK_OK) throw std::runtime_error(fk_last_error());
  OptionsPtr opts(raw, fk_options_free);
  const bool ok = fk_options_set_prime(raw, c.p) == FK_OK &&
                  fk_options_set_collection(raw, c.collection == "centric" ? FK_CENTRIC : FK_CENTRIC_RADICAL) == FK_OK &&
                  fk_options_set_variant(raw, c.variant == "original" ? FK_VARIANT_ORIGINAL : FK_VARIANT_QUOTIENT) == FK_OK &&
                  fk_options_set_format(raw, c.format == "json" ? FK_FORMAT_JSON : FK_FORMAT_TEXT) == FK_OK &&
                  fk_options_set_caps(raw, c.cap_subgroups, c.cap_elements) == FK_OK &&
                  fk_options_set_jobs(raw, c.jobs) == FK_OK;
  if (!ok) throw std::invalid_argument(fk_last_error());
  return opts;
}

Outcome take(fk_status s, char* report) {
  Outcome out{s, report ? report : "", s == FK_OK ? "" : fk_last_error()};
  fk_string_free(report);
  return out;
}

Outcome run_one(const std::string& command, const Config& c, const fk_options* opts, const std::string& path) {
  fk_group* raw = nullptr;
  if (fk_status s = fk_group_load(path.c_str(), c.cap_elements, &raw); s != FK_OK)
    return {s, "", fk_last_error()};
  GroupHandle g(raw, fk_group_free);
  const std::string name = std::filesystem::path(path).stem().string();
  char* report = nullptr;
  fk_status s = FK_INTERNAL_ERROR;
  if (command == "analyze") s = fk_analyze(g.get(), name.c_str(), opts, &report);
  if (command == "emit") s = fk_emit(g.get(), name.c_str(), c.construction.c_str(), opts, &report);
  if (command == "verify") s = fk_verify(g.get(), name.c_str(), c.construction.c_str(), opts, &report);
  if (command == "linking") s = fk_linking(g.get(), name.c_str(), opts, &report);
  return take(s, report);
}

/// Inputs are processed by up to `jobs` workers; results keep input order.
std::vector<Outcome> run_inputs(const std::string& command, const Config& c, const fk_options* opts) {
  std::vector<Outcome> results(c.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < c.inputs.size();) results[i] = run_one(command, c, opts, c.inputs[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(c.inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int finish(const Config& c, const std::vector<Outcome>& results) {
  std::string out;
  const bool json = c.format == "json";
  const bool many = results.size() > 1;
  if (json && many) out += "[\n";
  bool first = true;
  int code = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& r = results[i];
    if (r.report.empty()) {
      std::cerr << "error: " << (i < c.inputs.size() ? c.inputs[i] + ": " : "") << r.error << "\n";
      code = std::max(code, r.status == FK_CHECK_FAILED ? 1 : 2);
      continue;
    }
    if (r.status == FK_CHECK_FAILED) code = std::max(code, 1);
    if (json && many) {
      out += (first ? "" : ",\n") + r.report.substr(0, r.report.size() - 1);
    } else {
      if (many && !first) out += "\n";
      if (many) out += "== " + std::filesystem::path(c.inputs[i]).stem().string() + " ==\n";
      out += r.report;
    }
    first = false;
  }
  if (json && many) out += "\n]\n";
  if (c.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f || !(f << out)) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return 2;
    }
  }
  return code;
}

void add_common(CLI::App* sub, Config& c, bool group_input) {
  sub->add_option("--p", c.p, "prime")->check(CLI::PositiveNumber);
  sub->add_option("--collection", c.collection, "subgroup collection")
      ->check(CLI::IsMember({"centric-radical", "centric"}));
  sub->add_option("--variant", c.variant, "Robinson edge groups")->check(CLI::IsMember({"quotient", "original"}));
  sub->add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--cap-subgroups", c.cap_subgroups, "subgroup enumeration cap")->check(CLI::PositiveNumber);
  sub->add_option("--cap-elements", c.cap_elements, "group element cap")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("-o,--output", c.output, "write the report to a file");
  if (group_input) sub->add_option("inputs", c.inputs, "group files")->required()->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: fusion systems, linking systems and their realizations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fk_version());
  Config c;

  auto* analyze = app.add_subcommand("analyze", "saturation and subgroup classes of F_S(G)");
  add_common(analyze, c, true);

  auto* emit = app.add_subcommand("emit", "presentation of a realizing graph of groups");
  emit->add_option("construction", c.construction, "robinson, robinson-original or leary-stancu")
      ->required()
      ->check(CLI::IsMember({"robinson", "robinson-original", "leary-stancu"}));
  add_common(emit, c, true);

  auto* verify = app.add_subcommand("verify", "realization, Sylow hypotheses and stable elements");
  verify->add_option("--construction", c.construction, "robinson, robinson-original or leary-stancu")
      ->check(CLI::IsMember({"robinson", "robinson-original", "leary-stancu"}));
  add_common(verify, c, true);

  auto* linking = app.add_subcommand("linking", "canonical signaliser and linking axioms");
  add_common(linking, c, true);

  auto* solomon = app.add_subcommand("solomon-check", "finite checks on the SL2 building blocks");
  solomon->add_option("--q", c.q, "odd prime")->required();
  solomon->add_option("--m", c.m, "field degree")->check(CLI::PositiveNumber);
  solomon->add_option("--checks", c.checks, "comma-separated: quaternion, klein, centralizer");
  solomon->add_option("--centralizer-mode", c.centralizer_mode, "auto, full or coordinatewise")
      ->check(CLI::IsMember({"auto", "full", "coordinatewise"}));
  add_common(solomon, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const auto opts = make_options(c);
    if (solomon->parsed()) {
      const fk_centralizer_mode mode = c.centralizer_mode == "full"             ? FK_CENTRALIZER_FULL
                                       : c.centralizer_mode == "coordinatewise" ? FK_CENTRALIZER_COORDINATEWISE
                                                                                : FK_CENTRALIZER_AUTO;
      char* report = nullptr;
      const fk_status s = fk_solomon_check(c.q, c.m, c.checks.c_str(), mode, opts.get(), &report);
      return finish(c, {take(s, report)});
    }
    const std::string command = app.get_subcommands().front()->get_name();
    return finish(c, run_inputs(command, c, opts.get()));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
