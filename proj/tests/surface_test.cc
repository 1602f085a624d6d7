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


#include "ruledcodes/surface.h"

#include <random>

#include "gtest/gtest.h"

namespace ruledcodes {
namespace {

Curve DemoCurve() { return Curve::Elliptic(FieldSpec::Create(5, 1), {0, 0, 0, 0, 1}); }

RuledSurface TwistTwo() {
  Curve c = DemoCurve();
  const ClosedPoint p = c.ClosedPoints(2).front();
  return RuledSurface::Decomposable(c, Divisor::Of(p));
}

RuledSurface ElmDemo() {
  Curve c = DemoCurve();
  const ClosedPoint x = c.ClosedPoints(2).front();
  return RuledSurface::Elm(c, x, c.ext(2)->primitive());
}

TEST(Intersection, BasicProducts) {
  const RuledSurface s = TwistTwo();
  EXPECT_EQ(s.Intersect({0, 1}, {0, 1}), 0);
  EXPECT_EQ(s.Intersect({1, 0}, {0, 1}), 1);
  EXPECT_EQ(s.Intersect({1, 0}, {1, 0}), -2);
  EXPECT_EQ(s.Intersect({1, 2}, {1, 3}), 3);
}

TEST(Intersection, SymmetricBilinearUnimodular) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const RuledSurface& s : {TwistTwo(), ElmDemo(), RuledSurface::Trivial(DemoCurve())}) {
    for (int it = 0; it < 200; ++it) {
      const NumClass x{d(rng), d(rng)}, y{d(rng), d(rng)}, z{d(rng), d(rng)};
      const long long l = d(rng);
      EXPECT_EQ(s.Intersect(x, y), s.Intersect(y, x));
      EXPECT_EQ(s.Intersect({x.a + l * z.a, x.b + l * z.b}, y),
                s.Intersect(x, y) + l * s.Intersect(z, y));
    }
    const long long det = s.Intersect({1, 0}, {1, 0}) * s.Intersect({0, 1}, {0, 1}) -
                          s.Intersect({1, 0}, {0, 1}) * s.Intersect({0, 1}, {1, 0});
    EXPECT_EQ(det, -1);
  }
}

TEST(Canonical, SelfIntersection) {
  const RuledSurface product = RuledSurface::Trivial(DemoCurve());
  EXPECT_EQ(product.CanonicalClass(), (NumClass{-2, 0}));
  const RuledSurface s = TwistTwo();
  const NumClass k = s.CanonicalClass();
  EXPECT_EQ(k, (NumClass{-2, -2}));
  EXPECT_EQ(s.Intersect(k, k), 0);
  // K^2 = 8(1 - g) on every geometrically ruled surface.
  EXPECT_EQ(ElmDemo().Intersect(ElmDemo().CanonicalClass(), ElmDemo().CanonicalClass()), 0);
  const RuledSurface line =
      RuledSurface::Trivial(Curve::ProjectiveLine(FieldSpec::Create(5, 1)));
  EXPECT_EQ(line.Intersect(line.CanonicalClass(), line.CanonicalClass()), 8);
}

TEST(Canonical, AdjunctionOnFibreAndSection) {
  // 2p_a - 2 = D.(D + K): a fibre is a P^1, a section is a copy of C.
  for (const RuledSurface& s : {TwistTwo(), ElmDemo()}) {
    const NumClass k = s.CanonicalClass();
    const NumClass f{0, 1}, sec{1, 0};
    EXPECT_EQ(s.Intersect(f, {f.a + k.a, f.b + k.b}), -2);
    EXPECT_EQ(s.Intersect(sec, {sec.a + k.a, sec.b + k.b}), 2 * s.genus() - 2);
  }
}

TEST(EulerChar, ExamplesAndTwoPaths) {
  EXPECT_EQ(ElmDemo().EulerChar({1, 3}), 4);
  EXPECT_EQ(TwistTwo().EulerChar({1, 3}), 4);
  EXPECT_EQ(TwistTwo().EulerChar({0, 5}), 5);
  for (const RuledSurface& s : {TwistTwo(), ElmDemo(), RuledSurface::Trivial(DemoCurve())}) {
    for (long long a = -3; a <= 6; ++a) {
      for (long long b = -5; b <= 12; ++b) {
        EXPECT_EQ(s.EulerChar({a, b}), s.EulerCharByIntersection({a, b})) << a << " " << b;
      }
    }
  }
}

TEST(Surface, RationalPoints) {
  const RuledSurface s = TwistTwo();
  const auto pts = s.RationalPoints();
  ASSERT_EQ(pts.size(), 36u);
  EXPECT_EQ(pts[5].fiber, 5u);  // infinity last within a fibre
  EXPECT_EQ(pts[6].base_index, 1);
  EXPECT_EQ(ElmDemo().RationalPoints().size(), 36u);
  const Curve line = Curve::ProjectiveLine(FieldSpec::Create(2, 2));
  EXPECT_EQ(RuledSurface::Trivial(line).RationalPoints().size(), 25u);
}

TEST(Surface, ValidatesConstruction) {
  Curve c = DemoCurve();
  const ClosedPoint rational = c.RationalPoints().front();
  EXPECT_THROW(RuledSurface::Decomposable(c, Divisor::Of(rational)), std::invalid_argument);
  const ClosedPoint p2 = c.ClosedPoints(2).front();
  EXPECT_THROW(RuledSurface::Decomposable(c, Divisor::Of(p2, -1)), std::invalid_argument);
  // A fibre coordinate already in F_q is rejected.
  EXPECT_THROW(RuledSurface::Elm(c, p2, c.ext(2)->embed(3)), std::invalid_argument);
}

TEST(ElmClassMap, Examples) {
  ElmClassImage c0 = ElmClassMap(1, 0, 0, 2);
  EXPECT_EQ(c0.cls, (NumClass{1, 2}));
  EXPECT_EQ(c0.self_intersection, 2);
  EXPECT_EQ(ElmClassMap(1, 0, 1, 2).self_intersection, -2);
  ElmClassImage fibre = ElmClassMap(0, 4, 0, 3);
  EXPECT_EQ(fibre.cls, (NumClass{0, 4}));
  EXPECT_EQ(fibre.self_intersection, 0);
  EXPECT_THROW(ElmClassMap(1, 0, 2, 2), std::invalid_argument);
}

TEST(ElmClassMap, SelfIntersectionMatchesLattice) {
  // The image class squared in the lattice with S^2 = -d agrees with the
  // transformed self-intersection.
  const RuledSurface s = ElmDemo();
  for (long long a = 0; a <= 4; ++a) {
    for (long long b = -3; b <= 5; ++b) {
      for (long long m = 0; m <= a; ++m) {
        const ElmClassImage img = ElmClassMap(a, b, m, 2);
        EXPECT_EQ(s.Intersect(img.cls, img.cls), img.self_intersection);
        EXPECT_EQ(ElmInverseSelfIntersection(a, img.self_intersection, m, 2), 2 * a * b);
      }
    }
  }
}

TEST(Segre, Decomposable) {
  EXPECT_EQ(SegreDecomposable(TwistTwo()).s_a, -2);
  EXPECT_EQ(SegreDecomposable(TwistTwo()).s_g, -2);
  EXPECT_EQ(SegreDecomposable(RuledSurface::Trivial(DemoCurve())).s_a, 0);
  EXPECT_THROW(SegreDecomposable(ElmDemo()), std::invalid_argument);
  // Consistent with the upper bound and the parity congruence.
  const SegreInvariants inv = SegreDecomposable(TwistTwo());
  EXPECT_LE(inv.s_a, SegreUpperBounds(1, 6, 5).bound);
  EXPECT_EQ(((inv.s_a - TwistTwo().deg_e()) % 2 + 2) % 2, 0);
}

TEST(Segre, SevenPointTwist) {
  Curve c = Curve::ProjectiveLine(FieldSpec::Create(2, 1));
  const ClosedPoint p7 = c.ClosedPoints(7).front();
  const RuledSurface s = RuledSurface::Decomposable(c, Divisor::Of(p7));
  EXPECT_EQ(SegreDecomposable(s).s_a, -7);
}

TEST(Segre, ElmLowerBound) {
  const SegreLowerBound lb = SegreLowerBoundElm(ElmDemo(), 1);
  EXPECT_EQ(lb.e_x, 2);
  EXPECT_EQ(lb.d_star, 1);
  EXPECT_EQ(lb.bound, 2);
  EXPECT_EQ(lb.functions_checked, 5u);

  Curve line = Curve::ProjectiveLine(FieldSpec::Create(5, 1));
  const ClosedPoint x = line.ClosedPoints(2).front();
  const RuledSurface s = RuledSurface::Elm(line, x, line.ext(2)->primitive());
  const SegreLowerBound l0 = SegreLowerBoundElm(s, 0);
  EXPECT_EQ(l0.d_star, 0);
  EXPECT_LE(l0.bound, 2);
  EXPECT_THROW(SegreLowerBoundElm(TwistTwo(), 1), std::invalid_argument);
}

TEST(Segre, ElmLineDegreeOneHitsEveryPoint) {
  // On P^1 a Mobius map sends any degree-2 point to any degree-2 value, so
  // the search stops below degree 1.
  Curve line = Curve::ProjectiveLine(FieldSpec::Create(3, 1));
  const ClosedPoint x = line.ClosedPoints(2).front();
  const RuledSurface s = RuledSurface::Elm(line, x, line.ext(2)->primitive());
  const SegreLowerBound lb = SegreLowerBoundElm(s, 2);
  EXPECT_EQ(lb.d_star, 0);
  EXPECT_EQ(lb.bound, 0);
}

TEST(Segre, UpperBounds) {
  EXPECT_EQ(SegreUpperBounds(1, 6, 5).bound, 2);
  EXPECT_EQ(SegreUpperBounds(1, 6, 5).t, -1);
  EXPECT_EQ(SegreUpperBounds(3, 6, 2).bound, 5);
  EXPECT_EQ(SegreUpperBounds(3, 6, 2).t, 0);
  for (long long n = 1; n < 40; ++n) EXPECT_LE(SegreUpperBounds(1, n, 5).bound, 2);
  // t = 1 needs N > max{10, 7} over F_2.
  EXPECT_EQ(SegreUpperBounds(4, 11, 2).t, 1);
  EXPECT_EQ(SegreUpperBounds(4, 11, 2).bound, 5);
}

}  // namespace
}  // namespace ruledcodes
