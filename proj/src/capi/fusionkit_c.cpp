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

#define FUSIONKIT_BUILDING
#include "fusionkit/fusionkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fusionkit/error.hpp"
#include "fusionkit/group_io.hpp"
#include "fusionkit/report.hpp"

struct fk_group {
  fusionkit::GroupPtr group;
};

struct fk_options {
  fusionkit::ReportOptions opts;
};

namespace {

thread_local std::string last_error;

fk_status status_of(fusionkit::ErrorCode code) {
  using fusionkit::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::CapExceeded:
    case ErrorCode::NotSylow:
    case ErrorCode::MismatchedSylow:
    case ErrorCode::NotOddPrime:
      return FK_INPUT_ERROR;
    default:
      return FK_CHECK_FAILED;
  }
}

fk_status fail(fk_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs body, translating exceptions into status codes.
template <class F>
fk_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fusionkit::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(FK_INTERNAL_ERROR, e.what());
  }
}

fk_status deliver(const fusionkit::Report& r, char** report) {
  *report = duplicate(r.body);
  if (r.passed) return FK_OK;
  last_error = "a check failed";
  return FK_CHECK_FAILED;
}

bool bad_args(const void* a, const void* b) { return a == nullptr || b == nullptr; }

}  // namespace

extern "C" {

const char* fk_version(void) { return "1.0.0"; }

const char* fk_last_error(void) { return last_error.c_str(); }

void fk_string_free(char* s) { std::free(s); }

fk_status fk_options_new(fk_options** out) {
  if (!out) return fail(FK_INPUT_ERROR, "null output pointer");
  return guarded([&] {
    *out = new fk_options();
    return FK_OK;
  });
}

void fk_options_free(fk_options* opts) { delete opts; }

fk_status fk_options_set_prime(fk_options* opts, unsigned p) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (!fusionkit::is_prime(p)) return fail(FK_INPUT_ERROR, "p must be prime");
  opts->opts.p = p;
  return FK_OK;
}

fk_status fk_options_set_collection(fk_options* opts, fk_collection c) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (c != FK_CENTRIC_RADICAL && c != FK_CENTRIC) return fail(FK_INPUT_ERROR, "unknown collection");
  opts->opts.collection = c == FK_CENTRIC ? fusionkit::Collection::Centric : fusionkit::Collection::CentricRadical;
  return FK_OK;
}

fk_status fk_options_set_variant(fk_options* opts, fk_variant v) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (v != FK_VARIANT_QUOTIENT && v != FK_VARIANT_ORIGINAL) return fail(FK_INPUT_ERROR, "unknown variant");
  opts->opts.variant = v == FK_VARIANT_ORIGINAL ? fusionkit::RobinsonVariant::Original
                                                : fusionkit::RobinsonVariant::Quotient;
  return FK_OK;
}

fk_status fk_options_set_format(fk_options* opts, fk_format f) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (f != FK_FORMAT_TEXT && f != FK_FORMAT_JSON) return fail(FK_INPUT_ERROR, "unknown format");
  opts->opts.format = f == FK_FORMAT_JSON ? fusionkit::OutputFormat::Json : fusionkit::OutputFormat::Text;
  return FK_OK;
}

fk_status fk_options_set_caps(fk_options* opts, size_t subgroups, size_t elements) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (subgroups == 0 || elements == 0) return fail(FK_INPUT_ERROR, "caps must be positive");
  opts->opts.cap_subgroups = subgroups;
  opts->opts.cap_elements = elements;
  return FK_OK;
}

fk_status fk_options_set_jobs(fk_options* opts, unsigned jobs) {
  if (!opts) return fail(FK_INPUT_ERROR, "null options");
  if (jobs == 0) return fail(FK_INPUT_ERROR, "jobs must be positive");
  opts->opts.jobs = jobs;
  return FK_OK;
}

fk_status fk_group_parse(const char* text, size_t element_cap, fk_group** out) {
  if (bad_args(text, out)) return fail(FK_INPUT_ERROR, "null argument");
  return guarded([&] {
    *out = new fk_group{fusionkit::parse_group(text, element_cap)};
    return FK_OK;
  });
}

fk_status fk_group_load(const char* path, size_t element_cap, fk_group** out) {
  if (bad_args(path, out)) return fail(FK_INPUT_ERROR, "null argument");
  return guarded([&] {
    *out = new fk_group{fusionkit::load_group(path, element_cap)};
    return FK_OK;
  });
}

void fk_group_free(fk_group* g) { delete g; }

size_t fk_group_order(const fk_group* g) { return g ? g->group->order() : 0; }

fk_status fk_analyze(const fk_group* g, const char* name, const fk_options* opts, char** report) {
  if (bad_args(g, opts) || bad_args(name, report)) return fail(FK_INPUT_ERROR, "null argument");
  *report = nullptr;
  return guarded([&] { return deliver(fusionkit::analyze_report(g->group, name, opts->opts), report); });
}

fk_status fk_emit(const fk_group* g, const char* name, const char* kind, const fk_options* opts, char** report) {
  if (bad_args(g, opts) || bad_args(name, report) || !kind) return fail(FK_INPUT_ERROR, "null argument");
  *report = nullptr;
  const auto k = fusionkit::parse_kind(kind);
  if (!k) return fail(FK_INPUT_ERROR, std::string("unknown construction '") + kind + "'");
  return guarded([&] { return deliver(fusionkit::emit_report(g->group, name, *k, opts->opts), report); });
}

fk_status fk_verify(const fk_group* g, const char* name, const char* kind, const fk_options* opts, char** report) {
  if (bad_args(g, opts) || bad_args(name, report) || !kind) return fail(FK_INPUT_ERROR, "null argument");
  *report = nullptr;
  const auto k = fusionkit::parse_kind(kind);
  if (!k) return fail(FK_INPUT_ERROR, std::string("unknown construction '") + kind + "'");
  return guarded([&] { return deliver(fusionkit::verify_report(g->group, name, *k, opts->opts), report); });
}

fk_status fk_linking(const fk_group* g, const char* name, const fk_options* opts, char** report) {
  if (bad_args(g, opts) || bad_args(name, report)) return fail(FK_INPUT_ERROR, "null argument");
  *report = nullptr;
  return guarded([&] { return deliver(fusionkit::linking_report(g->group, name, opts->opts), report); });
}

fk_status fk_solomon_check(unsigned q, unsigned m, const char* checks, fk_centralizer_mode mode,
                           const fk_options* opts, char** report) {
  if (bad_args(checks, opts) || !report) return fail(FK_INPUT_ERROR, "null argument");
  *report = nullptr;
  std::optional<fusionkit::CentralizerMode> md;
  switch (mode) {
    case FK_CENTRALIZER_AUTO:
      break;
    case FK_CENTRALIZER_FULL:
      md = fusionkit::CentralizerMode::Full;
      break;
    case FK_CENTRALIZER_COORDINATEWISE:
      md = fusionkit::CentralizerMode::Coordinatewise;
      break;
    default:
      return fail(FK_INPUT_ERROR, "unknown centralizer mode");
  }
  std::vector<std::string> list;
  std::string item;
  for (const char* c = checks;; ++c) {
    if (*c == ',' || *c == '\0') {
      if (!item.empty()) list.push_back(item);
      item.clear();
      if (*c == '\0') break;
    } else if (*c != ' ') {
      item += *c;
    }
  }
  if (list.empty()) return fail(FK_INPUT_ERROR, "no checks requested");
  return guarded([&] { return deliver(fusionkit::solomon_report(q, m, list, md, opts->opts), report); });
}

}  // extern "C"
