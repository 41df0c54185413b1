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

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>
#include <thread>

#include "fusionkit/fusionkit.h"

namespace {

const std::string kCorpus = FUSIONKIT_CORPUS_DIR;

struct Options {
  fk_options* raw = nullptr;
  Options() { EXPECT_EQ(fk_options_new(&raw), FK_OK); }
  ~Options() { fk_options_free(raw); }
};

struct Group {
  fk_group* raw = nullptr;
  explicit Group(const std::string& file) {
    EXPECT_EQ(fk_group_load((kCorpus + "/" + file).c_str(), 100000, &raw), FK_OK) << fk_last_error();
  }
  ~Group() { fk_group_free(raw); }
};

/// Takes ownership of a report string.
std::string take(char* s) {
  std::string out = s ? s : "";
  fk_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, LoadAndParseGroups) {
  Group s4("s4.grp");
  EXPECT_EQ(fk_group_order(s4.raw), 24u);
  fk_group* g = nullptr;
  EXPECT_EQ(fk_group_parse("perm\na = (1 2 3)\n", 1000, &g), FK_OK) << fk_last_error();
  EXPECT_EQ(fk_group_order(g), 3u);
  fk_group_free(g);
  EXPECT_EQ(fk_group_order(nullptr), 0u);
}

TEST(CApi, InputErrorsSetTheLastError) {
  fk_group* g = nullptr;
  EXPECT_EQ(fk_group_parse("nonsense", 1000, &g), FK_INPUT_ERROR);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(fk_last_error()).find("ParseError"), std::string::npos);
  EXPECT_EQ(fk_group_load("/nonexistent/file.grp", 1000, &g), FK_INPUT_ERROR);
  EXPECT_EQ(fk_group_load((kCorpus + "/s5.grp").c_str(), 10, &g), FK_INPUT_ERROR);
  EXPECT_NE(std::string(fk_last_error()).find("CapExceeded"), std::string::npos);
  EXPECT_EQ(fk_group_parse(nullptr, 1000, &g), FK_INPUT_ERROR);
}

TEST(CApi, OptionSettersValidate) {
  Options o;
  EXPECT_EQ(fk_options_set_prime(o.raw, 4), FK_INPUT_ERROR);
  EXPECT_EQ(fk_options_set_prime(o.raw, 3), FK_OK);
  EXPECT_EQ(fk_options_set_jobs(o.raw, 0), FK_INPUT_ERROR);
  EXPECT_EQ(fk_options_set_caps(o.raw, 0, 10), FK_INPUT_ERROR);
  EXPECT_EQ(fk_options_set_format(o.raw, static_cast<fk_format>(7)), FK_INPUT_ERROR);
  EXPECT_EQ(fk_options_set_collection(nullptr, FK_CENTRIC), FK_INPUT_ERROR);
  EXPECT_EQ(fk_options_new(nullptr), FK_INPUT_ERROR);
}

TEST(CApi, AnalyzeS4) {
  Options o;
  Group s4("s4.grp");
  char* report = nullptr;
  ASSERT_EQ(fk_analyze(s4.raw, "s4", o.raw, &report), FK_OK);
  const std::string text = take(report);
  EXPECT_NE(text.find("saturated: yes"), std::string::npos);
  EXPECT_NE(text.find("centric-radical classes: 2"), std::string::npos);
}

TEST(CApi, VerifyJsonSchema) {
  Options o;
  fk_options_set_format(o.raw, FK_FORMAT_JSON);
  Group s4("s4.grp");
  for (const char* kind : {"robinson", "robinson-original", "leary-stancu"}) {
    char* report = nullptr;
    ASSERT_EQ(fk_verify(s4.raw, "s4", kind, o.raw, &report), FK_OK) << kind;
    auto j = nlohmann::json::parse(take(report));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_TRUE(j["realization"]["ok"].get<bool>());
    EXPECT_TRUE(j["stable_h1"]["equal"].get<bool>());
    EXPECT_EQ(j["stable_h1"]["fusion_basis"], j["stable_h1"]["restriction_basis"]);
    EXPECT_EQ(j["stable_h1"]["fusion_basis"].size(), 1u);
  }
  char* report = nullptr;
  auto j = (fk_verify(s4.raw, "s4", "robinson", o.raw, &report), nlohmann::json::parse(take(report)));
  EXPECT_EQ(j["vertex_orders"], nlohmann::json({8, 24}));
  EXPECT_TRUE(j["sylow_check"]["ok"].get<bool>());
}

TEST(CApi, EmitIsDeterministic) {
  Options o;
  Group g("gl2_3.grp");
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(fk_emit(g.raw, "gl2_3", "robinson", o.raw, &a), FK_OK);
  ASSERT_EQ(fk_emit(g.raw, "gl2_3", "robinson", o.raw, &b), FK_OK);
  const std::string ta = take(a), tb = take(b);
  EXPECT_EQ(ta, tb);
  EXPECT_EQ(ta.rfind("gen ", 0), 0u);
  char* c = nullptr;
  EXPECT_EQ(fk_emit(g.raw, "gl2_3", "hnn", o.raw, &c), FK_INPUT_ERROR);
  EXPECT_EQ(c, nullptr);
}

TEST(CApi, LinkingReport) {
  Options o;
  fk_options_set_format(o.raw, FK_FORMAT_JSON);
  Group g("a6.grp");
  char* report = nullptr;
  ASSERT_EQ(fk_linking(g.raw, "a6", o.raw, &report), FK_OK);
  auto j = nlohmann::json::parse(take(report));
  EXPECT_TRUE(j["axioms"]["ok"].get<bool>());
  for (const auto& row : j["classes"]) EXPECT_TRUE(row["exact"].get<bool>());
}

TEST(CApi, SolomonCheck) {
  Options o;
  fk_options_set_format(o.raw, FK_FORMAT_JSON);
  char* report = nullptr;
  ASSERT_EQ(fk_solomon_check(3, 1, "quaternion, klein,centralizer", FK_CENTRALIZER_FULL, o.raw, &report), FK_OK);
  auto j = nlohmann::json::parse(take(report));
  EXPECT_EQ(j["counts"]["S0"], 256);
  EXPECT_EQ(j["counts"]["omega_kernel"], 2);
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(fk_solomon_check(3, 1, "klein,bogus", FK_CENTRALIZER_AUTO, o.raw, &report), FK_INPUT_ERROR);
  EXPECT_EQ(fk_solomon_check(2, 1, "klein", FK_CENTRALIZER_AUTO, o.raw, &report), FK_INPUT_ERROR);
  EXPECT_EQ(fk_solomon_check(3, 1, "", FK_CENTRALIZER_AUTO, o.raw, &report), FK_INPUT_ERROR);
}

TEST(CApi, SubgroupCapIsAnInputError) {
  Options o;
  fk_options_set_caps(o.raw, 3, 100000);
  Group g("s4.grp");
  char* report = nullptr;
  EXPECT_EQ(fk_analyze(g.raw, "s4", o.raw, &report), FK_INPUT_ERROR);
  EXPECT_EQ(report, nullptr);
}

TEST(CApi, LastErrorIsPerThread) {
  fk_group* g = nullptr;
  ASSERT_EQ(fk_group_parse("nonsense", 1000, &g), FK_INPUT_ERROR);
  std::string other = "unset";
  std::thread([&] { other = fk_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(fk_last_error()), "");
}
