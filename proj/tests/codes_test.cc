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


#include "ruledcodes/codes.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "ruledcodes/analysis.h"

namespace ruledcodes {
namespace {

Curve DemoCurve() { return Curve::Elliptic(FieldSpec::Create(5, 1), {0, 0, 0, 0, 1}); }

struct Demo {
  Curve c = DemoCurve();
  ClosedPoint p2 = c.ClosedPoints(2).front();
  ClosedPoint p3 = c.ClosedPoints(3).front();
};

TEST(Prs, Parameters) {
  const LinearCode c = BuildPrs(FieldSpec::Create(2, 2), 2);
  const ExactResult r = ExactParameters(c);
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.d, 3);
  const ExactResult rep = ExactParameters(BuildPrs(FieldSpec::Create(2, 2), 0));
  EXPECT_EQ(rep.k, 1);
  EXPECT_EQ(rep.d, 5);
  const ExactResult mds = ExactParameters(BuildPrs(FieldSpec::Create(5, 1), 1));
  EXPECT_EQ(mds.n, 6);
  EXPECT_EQ(mds.k, 2);
  EXPECT_EQ(mds.d, 5);
  EXPECT_THROW(BuildPrs(FieldSpec::Create(5, 1), 6), std::invalid_argument);
  EXPECT_THROW(BuildPrs(FieldSpec::Create(5, 1), -1), std::invalid_argument);
}

TEST(Prs, InfinityColumnIsTopCoefficient) {
  const LinearCode c = BuildPrs(FieldSpec::Create(7, 1), 3);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(c.generator().at(i, 7), i == 3 ? 1u : 0u);
}

TEST(CurveCode, Examples) {
  Curve line = Curve::ProjectiveLine(FieldSpec::Create(5, 1));
  const ClosedPoint q2 = line.ClosedPoints(2).front();
  const LinearCode c1 = BuildCurveCode(line, Divisor::Of(q2, 2));
  const ExactResult r1 = ExactParameters(c1);
  EXPECT_EQ(r1.n, 6);
  EXPECT_EQ(r1.k, 5);
  EXPECT_GE(r1.d, 2);

  Demo d;
  const ExactResult r2 = ExactParameters(BuildCurveCode(d.c, Divisor::Of(d.p3)));
  EXPECT_EQ(r2.n, 6);
  EXPECT_EQ(r2.k, 3);
  EXPECT_GE(r2.d, 3);

  const ExactResult r3 = ExactParameters(BuildCurveCode(d.c, Divisor()));
  EXPECT_EQ(r3.k, 1);
  EXPECT_EQ(r3.d, 6);
}

TEST(CurveCode, Errors) {
  Demo d;
  const ClosedPoint rational = d.c.RationalPoints().front();
  EXPECT_THROW(BuildCurveCode(d.c, Divisor::Of(rational)), std::invalid_argument);
  EXPECT_THROW(BuildCurveCode(d.c, Divisor::Of(d.p3, 2)), std::invalid_argument);
  EXPECT_THROW(BuildCurveCode(d.c, Divisor::Of(d.p3, -1)), std::invalid_argument);
}

TEST(DecomposableCode, TwistTwoDemo) {
  Demo d;
  const RuledSurface s = RuledSurface::Decomposable(d.c, Divisor::Of(d.p2));
  const LinearCode code = BuildDecomposableCode(s, 1, Divisor::Of(d.p3));
  EXPECT_EQ(code.n(), 36);
  EXPECT_EQ(code.k(), 4);
  EXPECT_EQ(code.info().section_dim, 4);
  EXPECT_EQ(code.k(), s.EulerChar({1, 3}));
  const ExactResult r = ExactParameters(code);
  EXPECT_EQ(r.codewords_checked, 156u);
  EXPECT_GE(r.d, BoundFamcodes2(5, 6, 1, 2, 1, 3).d_lower);
  EXPECT_TRUE(GriesmerCheck(r.n, r.k, r.d, 5).ok);
  EXPECT_TRUE(SingletonCheck(r.n, r.k, r.d));
}

TEST(DecomposableCode, DimensionIsSumOfBlocks) {
  // Each block is L(beta - i delta) of degree b - 2i on an elliptic curve.
  Demo d;
  const RuledSurface s = RuledSurface::Decomposable(d.c, Divisor::Of(d.p2));
  const ClosedPoint p5 = d.c.ClosedPoints(5).front();
  for (int a = 0; a <= 3; ++a) {
    const LinearCode code = BuildDecomposableCode(s, a, Divisor::Of(p5));
    int expected = 0;
    for (int i = 0; i <= a; ++i) expected += std::max(5 - 2 * i, 0);
    EXPECT_EQ(code.k(), expected) << a;
    EXPECT_GE(code.k(), s.EulerChar({a, 5}));
  }
}

TEST(DecomposableCode, ZeroDegreeIsPullback) {
  Demo d;
  const RuledSurface s = RuledSurface::Decomposable(d.c, Divisor::Of(d.p2));
  const LinearCode code = BuildDecomposableCode(s, 0, Divisor::Of(d.p3));
  ASSERT_EQ(code.k(), 3);
  for (int r = 0; r < code.k(); ++r) {
    for (int p = 0; p < 6; ++p) {
      for (int u = 1; u < 6; ++u) {
        EXPECT_EQ(code.generator().at(r, p * 6 + u), code.generator().at(r, p * 6));
      }
    }
  }
}

TEST(DecomposableCode, TrivialTwistEqualsProduct) {
  Demo d;
  const RuledSurface s = RuledSurface::Trivial(d.c);
  for (int a = 0; a <= 2; ++a) {
    const LinearCode surf = BuildDecomposableCode(s, a, Divisor::Of(d.p3));
    const LinearCode prod = BuildProductCode(d.c, a, Divisor::Of(d.p3));
    EXPECT_EQ(prod.k(), (a + 1) * 3);
    EXPECT_TRUE(RowSpaceEqual(d.c.field(), surf.generator(), prod.generator())) << a;
  }
}

TEST(ElmCode, Demo) {
  Demo d;
  const RuledSurface s = RuledSurface::Elm(d.c, d.p2, d.c.ext(2)->primitive());
  const LinearCode code = BuildElmCode(s, 1, Divisor::Of(d.p3));
  EXPECT_EQ(code.info().condition_rank, 2);
  EXPECT_EQ(code.info().section_dim, 4);
  EXPECT_EQ(code.k(), 4);
  EXPECT_EQ(code.n(), 36);
  const ExactResult r = ExactParameters(code);
  EXPECT_GE(r.d, BoundFamcodes1(5, 6, 1, 2, 1, 3).d_lower);
  // Sections of the elm surface are sections of C x P^1 first.
  const LinearCode prod = BuildProductCode(d.c, 1, Divisor::Of(d.p3));
  EXPECT_TRUE(RowSpaceContains(d.c.field(), prod.generator(), code.generator()));
}

TEST(ElmCode, ConditionRankAndDimension) {
  Demo d;
  const RuledSurface s = RuledSurface::Elm(d.c, d.p2, d.c.ext(2)->primitive());
  const ClosedPoint p5 = d.c.ClosedPoints(5).front();
  for (int a = 0; a <= 2; ++a) {
    const LinearCode code = BuildElmCode(s, a, Divisor::Of(p5));
    EXPECT_LE(code.info().condition_rank, 2 * a * (a + 1) / 2);
    EXPECT_EQ(code.info().section_dim, (a + 1) * 5 - code.info().condition_rank);
    EXPECT_GE(code.k(), s.EulerChar({a, 5}));
  }
  EXPECT_EQ(BuildElmCode(s, 0, Divisor::Of(p5)).info().condition_rank, 0);
  EXPECT_THROW(BuildElmCode(s, 1, Divisor::Of(d.p2)), std::invalid_argument);
}

TEST(ProductCode, RepetitionAndDimensions) {
  Demo d;
  const LinearCode rep = BuildProductCode(d.c, 0, Divisor());
  EXPECT_EQ(rep.n(), 36);
  EXPECT_EQ(rep.k(), 1);
  EXPECT_EQ(ExactParameters(rep).d, 36);
  const LinearCode p = BuildProductCode(d.c, 1, Divisor::Of(d.p3));
  EXPECT_EQ(p.k(), 6);
  const ExactResult r = ExactParameters(p);
  EXPECT_GE(r.d, (5 + 1 - 1) * 3);
}

TEST(Unisecant, Bounds) {
  Demo d;
  const RuledSurface s = RuledSurface::Decomposable(d.c, Divisor::Of(d.p2));
  const UnisecantCode u = BuildUnisecant(s, Divisor::Of(d.p3));
  EXPECT_EQ(u.k_lower, 4);
  EXPECT_EQ(u.d_lower, 15);
  EXPECT_TRUE(u.s_a_exact);
  const ExactResult r = ExactParameters(u.code);
  EXPECT_GE(r.k, u.k_lower);
  EXPECT_GE(r.d, u.d_lower);

  const ClosedPoint q2b = d.c.ClosedPoints(2).back();
  const UnisecantCode p = BuildUnisecant(RuledSurface::Trivial(d.c), Divisor::Of(q2b));
  EXPECT_EQ(p.k_lower, 4);
  EXPECT_EQ(p.d_lower, 20);
  EXPECT_THROW(BuildUnisecant(s, Divisor()), std::invalid_argument);
}

TEST(Unisecant, ElmUsesCertifiedLowerBound) {
  Demo d;
  const RuledSurface s = RuledSurface::Elm(d.c, d.p2, d.c.ext(2)->primitive());
  const UnisecantCode u = BuildUnisecant(s, Divisor::Of(d.p3));
  EXPECT_FALSE(u.s_a_exact);
  EXPECT_EQ(u.s_a, 2);
  EXPECT_EQ(u.k_lower, 4);
  EXPECT_EQ(u.d_lower, 25);
  const ExactResult r = ExactParameters(u.code);
  EXPECT_GE(r.k, u.k_lower);
  EXPECT_GE(r.d, u.d_lower);
}

TEST(Codes, ColumnScalingPreservesWeights) {
  Demo d;
  const RuledSurface s = RuledSurface::Decomposable(d.c, Divisor::Of(d.p2));
  const LinearCode code = BuildDecomposableCode(s, 1, Divisor::Of(d.p3));
  std::mt19937 rng(3);
  std::uniform_int_distribution<Elem> nz(1, 4);
  Matrix g = code.generator();
  for (int j = 0; j < g.cols(); ++j) {
    const Elem sc = nz(rng);
    for (int i = 0; i < g.rows(); ++i) g.at(i, j) = d.c.field().mul(g.at(i, j), sc);
  }
  const LinearCode scaled(code.field_ptr(), g, code.points(), code.info());
  EXPECT_EQ(ExactParameters(scaled).d, ExactParameters(code).d);
}

TEST(Codes, GeneratorRoundTrip) {
  Demo d;
  const LinearCode code = BuildCurveCode(d.c, Divisor::Of(d.p3));
  std::stringstream ss;
  WriteGenerator(ss, code);
  const auto [q, m] = ReadGenerator(ss);
  EXPECT_EQ(q, 5u);
  EXPECT_EQ(m, code.generator());
  std::stringstream bad("2 3 5\n1 2 3\n4 9 0\n");
  EXPECT_THROW(ReadGenerator(bad), std::invalid_argument);
  std::stringstream idx;
  WritePointIndex(idx, code);
  EXPECT_NE(idx.str().find("inf"), std::string::npos);
}

}  // namespace
}  // namespace ruledcodes
