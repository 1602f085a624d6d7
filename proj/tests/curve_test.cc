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

#include "ruledcodes/curve.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace ruledcodes {
namespace {

Curve DemoCurve() { return Curve::Elliptic(FieldSpec::Create(5, 1), {0, 0, 0, 0, 1}); }

// Count solutions of the Weierstrass equation by trying every (x, y).
long long BrutePoints(const Curve& c, int d) {
  FieldPtr e = c.ext(d);
  long long n = 1;
  for (Elem x = 0; x < e->size(); ++x) {
    for (Elem y = 0; y < e->size(); ++y) {
      if (c.OnCurve(*e, {false, x, y})) ++n;
    }
  }
  return n;
}

TEST(Curve, Construction) {
  auto f5 = FieldSpec::Create(5, 1);
  EXPECT_EQ(Curve::ProjectiveLine(f5).genus(), 0);
  Curve e = DemoCurve();
  EXPECT_EQ(e.genus(), 1);
  EXPECT_EQ(e.discriminant(), 3u);  // -432 mod 5
  EXPECT_THROW(Curve::Elliptic(f5, {0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST(Curve, RationalPoints) {
  auto f5 = FieldSpec::Create(5, 1);
  EXPECT_EQ(Curve::ProjectiveLine(f5).N(), 6);
  Curve e = DemoCurve();
  std::vector<ClosedPoint> pts = e.RationalPoints();
  ASSERT_EQ(pts.size(), 6u);
  std::vector<ClosedPoint> expected = {{1, false, 0, 1}, {1, false, 0, 4}, {1, false, 2, 2},
                                       {1, false, 2, 3}, {1, false, 4, 0}, {1, true, 0, 0}};
  EXPECT_EQ(pts, expected);
  EXPECT_EQ(Curve::Elliptic(f5, {0, 0, 0, 1, 0}).N(), 4);
  EXPECT_EQ(e.ClassNumber(), 6);
  EXPECT_EQ(Curve::Elliptic(f5, {0, 0, 0, 1, 0}).ClassNumber(), 4);
  EXPECT_EQ(Curve::ProjectiveLine(f5).ClassNumber(), 1);
}

TEST(Curve, PointCountsMatchBruteForce) {
  std::vector<Curve> curves = {
      DemoCurve(),
      Curve::Elliptic(FieldSpec::Create(2, 2), {0, 0, 1, 0, 0}),   // y^2 + y = x^3 over F_4
      Curve::Elliptic(FieldSpec::Create(2, 1), {1, 0, 0, 0, 1}),   // y^2 + xy = x^3 + 1
      Curve::Elliptic(FieldSpec::Create(3, 1), {0, 1, 0, 0, 2}),   // y^2 = x^3 + x^2 + 2
  };
  for (const Curve& c : curves) {
    for (int d = 1; d <= 3; ++d) {
      if (c.ext(d)->size() > 200) continue;
      EXPECT_EQ(c.CountPoints(d), BrutePoints(c, d)) << c.describe() << " d=" << d;
    }
  }
}

TEST(Curve, ClosedPointCountsSumToExtensionCounts) {
  std::vector<Curve> curves = {DemoCurve(), Curve::ProjectiveLine(FieldSpec::Create(5, 1)),
                               Curve::Elliptic(FieldSpec::Create(2, 2), {0, 0, 1, 0, 0})};
  for (const Curve& c : curves) {
    for (int d = 1; d <= 4; ++d) {
      if (c.ext(d)->size() > 1000) continue;
      long long total = 0;
      for (int e = 1; e <= d; ++e) {
        if (d % e == 0) total += e * static_cast<long long>(c.ClosedPoints(e).size());
      }
      const long long expected = c.kind() == CurveKind::kProjectiveLine
                                     ? static_cast<long long>(c.ext(d)->size()) + 1
                                     : c.CountPoints(d);
      EXPECT_EQ(total, expected) << c.describe() << " d=" << d;
      for (const ClosedPoint& p : c.ClosedPoints(d)) {
        EXPECT_TRUE(c.IsValid(p));
        EXPECT_EQ(static_cast<int>(c.Conjugates(p).size()), d);
      }
    }
  }
  EXPECT_EQ(Curve::ProjectiveLine(FieldSpec::Create(5, 1)).ClosedPoints(2).size(), 10u);
  EXPECT_EQ(DemoCurve().CountPoints(2), 36);
  EXPECT_EQ(DemoCurve().ClosedPoints(2).size(), 15u);
  EXPECT_EQ(DemoCurve().ClosedPoints(1), DemoCurve().RationalPoints());
}

TEST(Curve, HasseBound) {
  for (int p : {2, 3, 5, 7}) {
    auto f = FieldSpec::Create(p, 1);
    for (Elem a4 = 0; a4 < f->size(); ++a4) {
      for (Elem a6 = 0; a6 < f->size(); ++a6) {
        for (Elem a1 = 0; a1 < 2; ++a1) {
          try {
            Curve c = Curve::Elliptic(f, {a1, 0, 1, a4, a6});
            const double n = c.N();
            EXPECT_LE(std::abs(n - (p + 1.0)), 2.0 * std::sqrt(p) + 1e-9);
          } catch (const std::invalid_argument&) {
          }
        }
      }
    }
  }
}

TEST(GroupLaw, IdentityInverseDoubling) {
  Curve c = DemoCurve();
  const FieldSpec& f = c.field();
  GeomPoint o{true, 0, 0};
  GeomPoint p{false, 0, 1};
  EXPECT_EQ(c.Add(f, p, o), p);
  EXPECT_TRUE(c.Add(f, p, c.Negate(f, p)).infinity);
  GeomPoint d = c.Add(f, p, p);
  EXPECT_TRUE(c.OnCurve(f, d));
  // (0,1) has order 3 on y^2 = x^3 + 1: its double is (0,-1).
  EXPECT_EQ(d, (GeomPoint{false, 0, 4}));
  EXPECT_THROW(c.Add(f, p, {false, 1, 1}), std::invalid_argument);
}

TEST(GroupLaw, AssociativeOnRandomTriples) {
  std::vector<Curve> curves = {DemoCurve(),
                               Curve::Elliptic(FieldSpec::Create(2, 2), {0, 0, 1, 0, 0}),
                               Curve::Elliptic(FieldSpec::Create(2, 1), {1, 0, 0, 0, 1})};
  std::mt19937 rng(11);
  for (const Curve& c : curves) {
    FieldPtr e = c.ext(2);
    std::vector<GeomPoint> pts{{true, 0, 0}};
    for (Elem x = 0; x < e->size(); ++x) {
      for (Elem y = 0; y < e->size(); ++y) {
        if (c.OnCurve(*e, {false, x, y})) pts.push_back({false, x, y});
      }
    }
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 300; ++i) {
      const GeomPoint a = pts[pick(rng)], b = pts[pick(rng)], d = pts[pick(rng)];
      EXPECT_EQ(c.Add(*e, c.Add(*e, a, b), d), c.Add(*e, a, c.Add(*e, b, d)));
      EXPECT_EQ(c.Add(*e, a, b), c.Add(*e, b, a));
    }
    // Group order annihilates every point.
    for (const GeomPoint& a : pts) {
      EXPECT_TRUE(c.Multiply(*e, a, static_cast<long long>(pts.size())).infinity);
    }
  }
}

TEST(GroupLaw, PrincipalDivisorsSumToZero) {
  Curve c = DemoCurve();
  const ClosedPoint o{1, true, 0, 0};
  // div(x) = (0,1) + (0,-1) - 2O and div(y + 1) = 3(0,-1) - 3O.
  Divisor div_x = Divisor::Of({1, false, 0, 1}) + Divisor::Of({1, false, 0, 4}) - Divisor::Of(o, 2);
  EXPECT_TRUE(c.IsPrincipal(div_x));
  Divisor div_y1 = Divisor::Of({1, false, 0, 4}, 3) - Divisor::Of(o, 3);
  EXPECT_TRUE(c.IsPrincipal(div_y1));
  EXPECT_FALSE(c.IsPrincipal(Divisor::Of({1, false, 0, 1}) - Divisor::Of(o)));
  // P - S - O is principal when S is the sum of the conjugates of P.
  for (const ClosedPoint& p : c.ClosedPoints(2)) {
    FieldPtr e = c.ext(2);
    GeomPoint s = c.Add(*e, p.geom(), c.Conjugates(p)[1]);
    Divisor d = Divisor::Of(p) - Divisor::Of(o, 2);
    if (!s.infinity) {
      d = d - Divisor::Of(c.ClosedPointOf(1, {false, *e->restrict_to_base(s.x),
                                               *e->restrict_to_base(s.y)}));
      d = d + Divisor::Of(o);
    }
    EXPECT_EQ(d.degree(), 0);
    EXPECT_TRUE(c.IsPrincipal(d));
  }
}

TEST(Divisor, Arithmetic) {
  ClosedPoint p{1, false, 0, 1}, q{2, false, 7, 3};
  Divisor d = Divisor::Of(p, 2) + Divisor::Of(q, -1);
  EXPECT_EQ(d.degree(), 0);
  EXPECT_FALSE(d.is_effective());
  EXPECT_EQ(d.positive_part(), Divisor::Of(p, 2));
  EXPECT_EQ(d.negative_part(), Divisor::Of(q));
  EXPECT_TRUE((d - d).empty());
  EXPECT_EQ((d * 3).degree(), 0);
}

}  // namespace
}  // namespace ruledcodes
