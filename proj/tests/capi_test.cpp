/* Copyright 2026 The listind Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "listind/listind.h"

namespace {

namespace fs = std::filesystem;

std::string take(char* s) {
  std::string out = s ? s : "";
  li_string_free(s);
  return out;
}

struct Model {
  explicit Model(const char* selector) { status = li_model_create(selector, &handle); }
  ~Model() { li_model_destroy(handle); }
  li_model* handle = nullptr;
  li_status status;
};

struct Report {
  ~Report() { li_report_destroy(handle); }
  std::string json() const {
    char* s = nullptr;
    EXPECT_EQ(li_report_json(handle, &s), LI_OK);
    return take(s);
  }
  std::string text() const {
    char* s = nullptr;
    EXPECT_EQ(li_report_text(handle, &s), LI_OK);
    return take(s);
  }
  int expected() const {
    int e = -1;
    EXPECT_EQ(li_report_expected(handle, &e), LI_OK);
    return e;
  }
  li_report* handle = nullptr;
};

li_options quick() {
  li_options o;
  li_options_default(&o);
  o.samples = 500;
  return o;
}

TEST(CApi, Defaults) {
  li_options o;
  li_options_default(&o);
  EXPECT_EQ(o.seed, 0u);
  EXPECT_EQ(o.budget, 200u);
  EXPECT_EQ(o.bound, 3u);
  EXPECT_EQ(o.samples, 10000u);
  EXPECT_STREQ(li_status_name(LI_OK), "ok");
  EXPECT_STREQ(li_status_name(LI_ERR_IO), "io");
}

TEST(CApi, Ordinals) {
  char* out = nullptr;
  ASSERT_EQ(li_ordinal_eval("w*2+3 - w", &out), LI_OK);
  EXPECT_EQ(take(out), "w + 3");
  ASSERT_EQ(li_ordinal_eval("divmod(w^2, w)", &out), LI_OK);
  EXPECT_EQ(take(out), "(w, 0)");
  EXPECT_EQ(li_ordinal_eval("1 - 2", &out), LI_ERR_DOMAIN);
  EXPECT_NE(std::string(li_last_error()), "");
  EXPECT_EQ(li_ordinal_eval("w +", &out), LI_ERR_PARSE);
  EXPECT_EQ(li_ordinal_eval(nullptr, &out), LI_ERR_ARGUMENT);
}

TEST(CApi, Lists) {
  char* out = nullptr;
  ASSERT_EQ(li_list_normalize("[0,1]~N(2)", &out), LI_OK);
  EXPECT_EQ(take(out), "N(0)");
  ASSERT_EQ(li_list_normalize("N(0).rep(N(0))", &out), LI_OK);
  EXPECT_EQ(take(out), "rep(N(0))");
  EXPECT_EQ(li_list_normalize("[1,", &out), LI_ERR_PARSE);
}

TEST(CApi, Models) {
  Model m("m1:3");
  ASSERT_EQ(m.status, LI_OK);
  char* name = nullptr;
  ASSERT_EQ(li_model_name(m.handle, &name), LI_OK);
  EXPECT_EQ(take(name), "m1:3");
  li_model* bad = nullptr;
  EXPECT_EQ(li_model_create("m1:0", &bad), LI_ERR_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(li_model_create("m7", &bad), LI_ERR_ARGUMENT);
  li_model_destroy(nullptr);
}

TEST(CApi, Eval) {
  Model m2("m2"), m1("m1:2");
  int v = -1;
  ASSERT_EQ(li_eval(m2.handle, "Y ++ X = X", "Y=N(0); X=rep(N(0))", &v), LI_OK);
  EXPECT_EQ(v, 1);
  ASSERT_EQ(li_eval(m1.handle, "A(X)", "X=N(0)", &v), LI_OK);
  EXPECT_EQ(v, 0);
  ASSERT_EQ(li_eval(m1.handle, "A(X)", "X=[1]", &v), LI_OK);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(li_eval(m1.handle, "X ++ X = X", "X=[1]", &v), LI_ERR_PARSE);
  EXPECT_EQ(li_eval(m1.handle, "A(X)", "", &v), LI_ERR_EVAL);
  EXPECT_EQ(li_eval(m1.handle, "A(X)", "X=rep(N(0))", &v), LI_ERR_EVAL);
  EXPECT_EQ(li_eval(m1.handle, "A(x)", "x=1", &v), LI_ERR_SORT);
  EXPECT_EQ(li_eval(m1.handle, "A(X) &", "X=[1]", &v), LI_ERR_PARSE);
  EXPECT_EQ(li_eval(nullptr, "A(X)", "X=[1]", &v), LI_ERR_ARGUMENT);
}

TEST(CApi, Axioms) {
  Model m2("m2");
  const li_options o = quick();
  Report r;
  ASSERT_EQ(li_check_axioms(m2.handle, &o, &r.handle), LI_OK);
  EXPECT_EQ(r.expected(), 1);
  const std::string json = r.json();
  EXPECT_NE(json.find("\"all_passed\": true"), std::string::npos);
  EXPECT_NE(json.find("\"L1.2\""), std::string::npos);
  EXPECT_FALSE(r.text().empty());
  int falsified = 0;
  EXPECT_EQ(li_report_instance_falsified(r.handle, &falsified), LI_ERR_ARGUMENT);
}

TEST(CApi, Induction) {
  Model m1("m1:3");
  const li_options o = quick();
  Report hit, miss;
  ASSERT_EQ(li_check_induction(m1.handle, "A(X)", nullptr, 3, &o, &hit.handle), LI_OK);
  EXPECT_EQ(hit.expected(), 1);
  int falsified = 0;
  ASSERT_EQ(li_report_instance_falsified(hit.handle, &falsified), LI_OK);
  EXPECT_EQ(falsified, 1);
  EXPECT_NE(hit.json().find("\"verdict\": \"axiom instance falsified\""), std::string::npos);

  ASSERT_EQ(li_check_induction(m1.handle, "A(X)", "X", 2, &o, &miss.handle), LI_OK);
  EXPECT_EQ(miss.expected(), 1);
  ASSERT_EQ(li_report_instance_falsified(miss.handle, &falsified), LI_OK);
  EXPECT_EQ(falsified, 0);

  li_report* r = nullptr;
  EXPECT_EQ(li_check_induction(m1.handle, "A(X)", "X", 0, &o, &r), LI_ERR_ARGUMENT);
  EXPECT_EQ(li_check_induction(m1.handle, "forall X. A(X)", "X", 1, &o, &r), LI_ERR_ARGUMENT);
  EXPECT_EQ(r, nullptr);
}

TEST(CApi, ReportsAreReproducible) {
  Model m2("m2");
  li_options o = quick();
  o.seed = 9;
  Report a, b;
  ASSERT_EQ(li_check_induction(m2.handle, "X ++ [1] = cons(2, X)", "X", 2, &o, &a.handle), LI_OK);
  ASSERT_EQ(li_check_induction(m2.handle, "X ++ [1] = cons(2, X)", "X", 2, &o, &b.handle), LI_OK);
  EXPECT_EQ(a.json(), b.json());
  EXPECT_EQ(a.expected(), 1);
}

TEST(CApi, Certificates) {
  Model m1("m1:3"), m2("m2");
  const li_options o = quick();
  for (const auto& [model, name] : {std::pair{m1.handle, "big-step"},
                                    std::pair{m2.handle, "right-cancellation"},
                                    std::pair{m2.handle, "right-decomposition"}}) {
    Report r;
    ASSERT_EQ(li_certificate(model, name, &o, &r.handle), LI_OK) << name;
    EXPECT_EQ(r.expected(), 1) << name;
    EXPECT_NE(r.json().find("\"valid\": true"), std::string::npos) << name;
  }
  li_report* r = nullptr;
  EXPECT_EQ(li_certificate(m2.handle, "big-step", &o, &r), LI_ERR_ARGUMENT);
  EXPECT_EQ(li_certificate(m1.handle, "right-cancellation", &o, &r), LI_ERR_ARGUMENT);
  EXPECT_EQ(li_certificate(m1.handle, "nope", &o, &r), LI_ERR_ARGUMENT);
  Model one("m1:1");
  EXPECT_EQ(li_certificate(one.handle, "big-step", &o, &r), LI_ERR_ARGUMENT);
}

TEST(CApi, Emit) {
  const fs::path dir = fs::temp_directory_path() / "listind_capi_emit";
  fs::remove_all(dir);
  const uint64_t ms[] = {1, 2, 3};
  char* paths = nullptr;
  ASSERT_EQ(li_emit_benchmarks("tptp", ms, 3, dir.c_str(), &paths), LI_OK);
  const std::string listing = take(paths);
  EXPECT_NE(listing.find("big_step_m3.p"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "big_step_m2.p"));
  EXPECT_EQ(li_emit_benchmarks("cnf", ms, 3, dir.c_str(), &paths), LI_ERR_ARGUMENT);
  const fs::path blocker = dir / "file";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(li_emit_benchmarks("smtlib2", ms, 1, (blocker / "sub").c_str(), &paths), LI_ERR_IO);
  fs::remove_all(dir);
}

}  // namespace
