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


#include "ruledcodes/locality.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"

namespace ruledcodes {
namespace {

Curve DemoCurve() { return Curve::Elliptic(FieldSpec::Create(5, 1), {0, 0, 0, 0, 1}); }

struct Demo {
  Curve c = DemoCurve();
  ClosedPoint p2 = c.ClosedPoints(2).front();
  ClosedPoint p3 = c.ClosedPoints(3).front();
  RuledSurface dec = RuledSurface::Decomposable(c, Divisor::Of(p2));
  RuledSurface elm = RuledSurface::Elm(c, p2, c.ext(2)->primitive());
};

// Every codeword, by enumerating all messages.
std::vector<std::vector<Elem>> AllCodewords(const LinearCode& code) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> msg(code.k(), 0);
  for (;;) {
    out.push_back(code.Encode(msg));
    int pos = code.k() - 1;
    while (pos >= 0 && msg[pos] + 1 == code.field().size()) msg[pos--] = 0;
    if (pos < 0) break;
    ++msg[pos];
  }
  return out;
}

TEST(Fiber, DecomposableDemoRanks) {
  // The one function in L(beta - delta) vanishes at the rational point P with
  // P ~ beta - delta, so the fiber over P keeps only the constant forms.
  Demo d;
  const LinearCode code = BuildDecomposableCode(d.dec, 1, Divisor::Of(d.p3));
  const std::vector<CurveFunction> top =
      RiemannRochBasis(d.c, Divisor::Of(d.p3) - Divisor::Of(d.p2));
  ASSERT_EQ(top.size(), 1u);
  const auto base = d.c.RationalPoints();
  int deficient = 0;
  for (int b = 0; b < 6; ++b) {
    const FiberRestriction fr = RestrictToFiber(code, b);
    EXPECT_EQ(fr.code.n(), 6);
    const bool zero = Evaluate(d.c, top[0], base[b]) == 0;
    EXPECT_EQ(fr.rank, zero ? 1 : 2) << b;
    EXPECT_EQ(fr.equals_prs, !zero) << b;
    deficient += zero;
  }
  EXPECT_EQ(deficient, 1);
  EXPECT_THROW(RestrictToFiber(code, 6), std::invalid_argument);
}

TEST(Fiber, DegreeZeroIsRepetition) {
  Demo d;
  const LinearCode code = BuildDecomposableCode(d.dec, 0, Divisor::Of(d.p3));
  const FiberRestriction fr = RestrictToFiber(code, 2);
  EXPECT_EQ(fr.rank, 1);
  EXPECT_TRUE(fr.equals_prs);
}

TEST(Fiber, SmallBetaDropsRank) {
  // L(beta - delta) = 0 for a second degree-2 point not equivalent to delta.
  Demo d;
  ClosedPoint other;
  for (const ClosedPoint& p : d.c.ClosedPoints(2)) {
    if (RiemannRochBasis(d.c, Divisor::Of(p) - Divisor::Of(d.p2)).empty()) other = p;
  }
  ASSERT_NE(other, d.p2);
  const LinearCode code = BuildDecomposableCode(d.dec, 1, Divisor::Of(other));
  const FiberRestriction fr = RestrictToFiber(code, 0);
  EXPECT_EQ(fr.rank, 1);
  EXPECT_FALSE(fr.equals_prs);
  // Still a subcode of PRS(1), so recovery goes through.
  const auto sets = RecoverySets(code);
  const std::vector<Elem> w = code.Encode({1, 3});
  for (const auto& per : sets) {
    for (const RecoverySet& r : per) EXPECT_EQ(Recover(code.field(), w, r), w[r.target]);
  }
}

TEST(Fiber, NonPrsFiberIsRejected) {
  Demo d;
  const LinearCode code = BuildDecomposableCode(d.dec, 1, Divisor::Of(d.p3));
  Matrix g = code.generator();
  g.at(0, 3) = d.c.field().add(g.at(0, 3), 1);
  const LinearCode bad(code.field_ptr(), g, code.points(), code.info());
  EXPECT_THROW(RecoverySets(bad), std::domain_error);
}

TEST(Fiber, RankNeverExceedsDegreePlusOne) {
  Demo d;
  const ClosedPoint p5 = d.c.ClosedPoints(5).front();
  for (int a = 0; a <= 3; ++a) {
    for (const LinearCode& code : {BuildDecomposableCode(d.dec, a, Divisor::Of(p5)),
                                   BuildElmCode(d.elm, a, Divisor::Of(p5))}) {
      for (int b = 0; b < 6; ++b) EXPECT_LE(RestrictToFiber(code, b).rank, a + 1);
    }
  }
}

TEST(Section, ContainedInCurveCodes) {
  Demo d;
  const Divisor beta = Divisor::Of(d.c.ClosedPoints(5).front());
  for (int a = 0; a <= 2; ++a) {
    const LinearCode dec = BuildDecomposableCode(d.dec, a, beta);
    const LinearCode elm = BuildElmCode(d.elm, a, beta);
    for (int u = 0; u <= 5; ++u) {
      const SectionRestriction sd = RestrictToSection(dec, d.dec, beta, u);
      EXPECT_TRUE(sd.contained) << a << " " << u;
      EXPECT_EQ(sd.target.degree(), u == 5 ? 5 - 2 * a : 5);
      EXPECT_TRUE(RestrictToSection(elm, d.elm, beta, u).contained) << a << " " << u;
    }
  }
}

TEST(Section, DegreeZeroMatchesCurveCode) {
  Demo d;
  const Divisor beta = Divisor::Of(d.p3);
  const LinearCode code = BuildDecomposableCode(d.dec, 0, beta);
  const LinearCode curve = BuildCurveCode(d.c, beta);
  for (int u : {0, 5}) {
    const SectionRestriction s = RestrictToSection(code, d.dec, beta, u);
    EXPECT_TRUE(RowSpaceEqual(d.c.field(), s.code.generator(), curve.generator()));
  }
}

TEST(Lagrange, MatchesDirectEvaluation) {
  std::mt19937 rng(5);
  for (auto [p, m] : {std::pair{5, 1}, {2, 2}, {7, 1}, {3, 2}}) {
    FieldPtr f = FieldSpec::Create(p, m);
    const int q = static_cast<int>(f->size());
    std::uniform_int_distribution<Elem> el(0, f->size() - 1);
    for (int it = 0; it < 100; ++it) {
      const int a = static_cast<int>(rng() % std::min(q, 4));
      std::vector<int> pts(q + 1);
      for (int i = 0; i <= q; ++i) pts[i] = i;
      std::shuffle(pts.begin(), pts.end(), rng);
      const int target = pts[0];
      const std::vector<int> helpers(pts.begin() + 1, pts.begin() + 2 + a);
      const std::vector<Elem> coeffs = ProjectiveLagrange(*f, target, helpers);
      std::vector<Elem> poly(a + 1);
      for (Elem& c : poly) c = el(rng);
      auto value = [&](int u) {
        if (u == q) return poly[a];
        Elem acc = 0;
        for (int i = a; i >= 0; --i) acc = f->add(f->mul(acc, static_cast<Elem>(u)), poly[i]);
        return acc;
      };
      Elem acc = 0;
      for (size_t j = 0; j < helpers.size(); ++j) {
        acc = f->add(acc, f->mul(coeffs[j], value(helpers[j])));
      }
      EXPECT_EQ(acc, value(target));
    }
  }
}

TEST(Lagrange, LinearInterpolationExample) {
  FieldPtr f = FieldSpec::Create(5, 1);
  // F(2) = -F(0) + 2 F(1) for linear F.
  EXPECT_EQ(ProjectiveLagrange(*f, 2, {0, 1}), (std::vector<Elem>{4, 2}));
  // The leading coefficient is F(1) - F(0).
  EXPECT_EQ(ProjectiveLagrange(*f, 5, {0, 1}), (std::vector<Elem>{4, 1}));
}

TEST(RecoverySets, DemoRoundTripExhaustive) {
  Demo d;
  for (const LinearCode& code : {BuildDecomposableCode(d.dec, 1, Divisor::Of(d.p3)),
                                 BuildElmCode(d.elm, 1, Divisor::Of(d.p3))}) {
    const auto sets = RecoverySets(code);
    ASSERT_EQ(sets.size(), 36u);
    const auto words = AllCodewords(code);
    EXPECT_EQ(words.size(), 625u);
    for (int col = 0; col < 36; ++col) {
      ASSERT_EQ(sets[col].size(), 2u);
      std::set<int> used;
      for (const RecoverySet& r : sets[col]) {
        EXPECT_EQ(r.target, col);
        EXPECT_EQ(r.helpers.size(), 2u);
        for (int h : r.helpers) {
          EXPECT_NE(h, col);
          EXPECT_TRUE(used.insert(h).second);
          EXPECT_EQ(code.points()[h].base_index, code.points()[col].base_index);
        }
        for (const auto& w : words) EXPECT_EQ(Recover(code.field(), w, r), w[col]);
      }
    }
  }
}

TEST(RecoverySets, Availability) {
  Curve line4 = Curve::ProjectiveLine(FieldSpec::Create(2, 2));
  const LinearCode c4 =
      BuildDecomposableCode(RuledSurface::Trivial(line4), 1, Divisor::Of(line4.ClosedPoints(2).front()));
  for (const auto& s : RecoverySets(c4)) EXPECT_EQ(s.size(), 2u);

  Curve line3 = Curve::ProjectiveLine(FieldSpec::Create(3, 1));
  const LinearCode full = BuildDecomposableCode(RuledSurface::Trivial(line3), 3, Divisor());
  for (const auto& s : RecoverySets(full)) EXPECT_TRUE(s.empty());

  Demo d;
  const LinearCode rep = BuildDecomposableCode(d.dec, 0, Divisor::Of(d.p3));
  const auto sets = RecoverySets(rep);
  EXPECT_EQ(sets[0].size(), 5u);
  for (const RecoverySet& r : sets[0]) EXPECT_EQ(r.coeffs, (std::vector<Elem>{1}));
}

TEST(Recover, ErasedHelperThrows) {
  Demo d;
  const LinearCode code = BuildDecomposableCode(d.dec, 1, Divisor::Of(d.p3));
  const auto sets = RecoverySets(code);
  const std::vector<Elem> w = code.Encode({1, 2, 3, 4});
  std::vector<bool> erased(36, false);
  erased[0] = true;
  EXPECT_EQ(Recover(code.field(), w, sets[0][0], erased), w[0]);
  erased[sets[0][0].helpers[0]] = true;
  EXPECT_THROW(Recover(code.field(), w, sets[0][0], erased), std::invalid_argument);
}

TEST(Recover, JsonRecords) {
  Demo d;
  const LinearCode code = BuildDecomposableCode(d.dec, 1, Divisor::Of(d.p3));
  const auto j = nlohmann::json::parse(RecoverySetsJson(RecoverySets(code)));
  ASSERT_EQ(j.size(), 72u);
  EXPECT_EQ(j[0]["target"], 0);
  EXPECT_EQ(j[0]["helpers"].size(), 2u);
  EXPECT_EQ(j[0]["coefficients"].size(), 2u);
}

}  // namespace
}  // namespace ruledcodes
