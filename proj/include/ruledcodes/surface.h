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

#ifndef RULEDCODES_SURFACE_H_
#define RULEDCODES_SURFACE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "ruledcodes/curve.h"

namespace ruledcodes {

// Numerical class aS + bf.
struct NumClass {
  long long a = 0;
  long long b = 0;

  bool operator==(const NumClass&) const = default;
  std::string ToString() const;
};

enum class SurfaceVariant { kDecomposable, kElm };

// A rational point of the surface: a rational base point and a fiber
// coordinate in P^1(F_q), with q standing for the point at infinity.
struct SurfacePoint {
  int base_index = 0;
  ClosedPoint base;
  Elem fiber = 0;
};

// Either P(O + O(-delta)) over a curve, or the elementary transform of
// C x P^1 centered at a point x of degree d >= 2. For the latter the section
// class is S = C0 - E with S^2 = -d.
class RuledSurface {
 public:
  // delta must be effective with no rational point in its support.
  static RuledSurface Decomposable(Curve curve, Divisor delta);
  // The fiber coordinate lies in F_{q^d} but not in F_q.
  static RuledSurface Elm(Curve curve, ClosedPoint base_point, Elem fiber_coord);
  // C x P^1, the decomposable surface with delta = 0.
  static RuledSurface Trivial(Curve curve) { return Decomposable(std::move(curve), Divisor()); }

  SurfaceVariant variant() const { return variant_; }
  const Curve& curve() const { return curve_; }
  const Divisor& delta() const { return delta_; }
  const ClosedPoint& base_point() const { return base_point_; }
  Elem fiber_coord() const { return fiber_coord_; }
  // e = deg delta for decomposable surfaces, d = deg x for elm surfaces.
  int twist() const { return twist_; }
  // deg E = S^2.
  int deg_e() const { return -twist_; }
  int genus() const { return curve_.genus(); }

  long long Intersect(const NumClass& c1, const NumClass& c2) const;
  NumClass CanonicalClass() const;
  // (a+1)(b+1-g) - c a(a+1)/2 with c = twist().
  long long EulerChar(const NumClass& d) const;
  // D.(D-K)/2 + 1 - g through the intersection form.
  long long EulerCharByIntersection(const NumClass& d) const;

  // Base points in curve order, fibers 0..q-1, infinity last.
  std::vector<SurfacePoint> RationalPoints() const;

  std::string describe() const;

 private:
  RuledSurface(Curve curve) : curve_(std::move(curve)) {}

  SurfaceVariant variant_ = SurfaceVariant::kDecomposable;
  Curve curve_;
  Divisor delta_;
  ClosedPoint base_point_;
  Elem fiber_coord_ = 0;
  int twist_ = 0;
};

struct ElmClassImage {
  NumClass cls;
  long long self_intersection = 0;
};

// Image on elm_x(C x P^1) of a curve of class a'C0 + b'f with multiplicity m
// at x, x of degree d.
ElmClassImage ElmClassMap(long long a, long long b, long long m, long long d);
// Self-intersection after the inverse transform, whose center has
// multiplicity a - m on the image curve.
long long ElmInverseSelfIntersection(long long a, long long self_intersection, long long m,
                                     long long d);

struct SegreInvariants {
  long long s_g = 0;
  long long s_a = 0;
};
SegreInvariants SegreDecomposable(const RuledSurface& s);

struct SegreLowerBound {
  int bound = 0;
  // Largest d* <= dmax with no function of degree <= d* through x; -1 when
  // even a constant passes.
  int d_star = -1;
  int e_x = 0;
  std::size_t functions_checked = 0;
};
SegreLowerBound SegreLowerBoundElm(const RuledSurface& s, int dmax,
                                   std::size_t cap = 5'000'000);

struct SegreUpperBound {
  long long bound = 0;
  // Largest t >= 0 with N > max{(t+1)(q^2+1), t(q^2+q+1)}, or -1.
  long long t = -1;
};
SegreUpperBound SegreUpperBounds(long long g, long long n, long long q);

}  // namespace ruledcodes

#endif  // RULEDCODES_SURFACE_H_
