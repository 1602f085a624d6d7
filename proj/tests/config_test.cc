/* Copyright 2026 The ruledcodes Authors.

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


#include "ruledcodes/config.h"

#include "gtest/gtest.h"

namespace ruledcodes {
namespace {

const char* kDemo = R"({
  "field": {"p": 5, "m": 1},
  "curve": {"type": "elliptic", "a": [0, 0, 0, 0, 1]},
  "surface": {"variant": "decomposable", "delta": [{"degree": 2, "index": 0}]},
  "code": {"family": "surface", "a": 1, "beta": [{"degree": 3, "index": 0}]}
})";

std::string ErrorOf(const std::string& text) {
  try {
    Instantiate(ParseConfig(text));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string Replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(Config, ParsesDemo) {
  const ExperimentConfig c = ParseConfig(kDemo);
  EXPECT_EQ(c.p, 5);
  EXPECT_EQ(c.surface, "decomposable");
  ASSERT_EQ(c.beta.size(), 1u);
  EXPECT_EQ(c.beta[0].point.degree, 3);
  const Experiment e = Instantiate(c);
  EXPECT_EQ(e.beta.degree(), 3);
  EXPECT_EQ(e.surface->twist(), 2);
  const LinearCode code = BuildConfiguredCode(e);
  EXPECT_EQ(code.n(), 36);
  EXPECT_EQ(code.k(), 4);
}

TEST(Config, FieldPreciseDiagnostics) {
  EXPECT_NE(ErrorOf(Replace(kDemo, "\"p\": 5", "\"p\": 6")).find("field.p"), std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "\"type\": \"elliptic\"", "\"type\": \"hyper\"")).find("curve.type"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "\"degree\": 3, \"index\": 0", "\"degree\": 3, \"index\": 99"))
                .find("code.beta[0].index"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "\"m\": 1", "\"m\": 1, \"q\": 5")).find("field.q: unknown field"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "[0, 0, 0, 0, 1]", "[0, 0, 0, 0, 0]")).find("discriminant"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "[0, 0, 0, 0, 1]", "[0, 0, 0, 0, 9]")).find("curve.a[4]"),
            std::string::npos);
  EXPECT_NE(ErrorOf("{\"field\": ").find("malformed JSON"), std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kDemo, "\"degree\": 2, \"index\": 0", "\"degree\": 1, \"index\": 0"))
                .find("surface"),
            std::string::npos);
}

TEST(Config, RationalBetaIsRejectedAtBuild) {
  const Experiment e = Instantiate(
      ParseConfig(Replace(kDemo, "\"degree\": 3, \"index\": 0", "\"degree\": 1, \"index\": 0")));
  EXPECT_THROW(BuildConfiguredCode(e), ConfigError);
}

TEST(Config, ElmDefaultsToPrimitiveFiber) {
  const std::string elm = Replace(
      kDemo, R"("variant": "decomposable", "delta": [{"degree": 2, "index": 0}])",
      R"("variant": "elm", "center": {"degree": 2, "index": 0})");
  const Experiment e = Instantiate(ParseConfig(elm));
  EXPECT_EQ(e.surface->fiber_coord(), e.curve.ext(2)->primitive());
  EXPECT_EQ(BuildConfiguredCode(e).info().condition_rank, 2);
}

}  // namespace
}  // namespace ruledcodes
