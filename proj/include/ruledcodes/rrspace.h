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

#ifndef RULEDCODES_RRSPACE_H_
#define RULEDCODES_RRSPACE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ruledcodes/curve.h"
#include "ruledcodes/poly.h"

namespace ruledcodes {

// An element (A(x) + B(x) y) / Den(x) of the function field, with Den monic
// and gcd(A, B, Den) = 1. B is zero on the projective line. Since 1, y is a
// basis of the function field over F_q(x), this form is unique.
class CurveFunction {
 public:
  CurveFunction() : den_{1} {}
  static CurveFunction Constant(Elem c);
  static CurveFunction X();
  static CurveFunction Y();
  static CurveFunction FromParts(const FieldSpec& f, Poly a, Poly b, Poly den);

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return a_.empty() && b_.empty(); }
  bool is_constant() const { return b_.empty() && a_.size() <= 1 && den_.size() == 1; }

  // "r(x) + s(x)*y" style text with integer-encoded coefficients.
  std::string ToString() const;

  bool operator==(const CurveFunction&) const = default;
  auto operator<=>(const CurveFunction&) const = default;

 private:
  Poly a_;
  Poly b_;
  Poly den_;
};

CurveFunction FnAdd(const Curve& c, const CurveFunction& f, const CurveFunction& g);
CurveFunction FnSub(const Curve& c, const CurveFunction& f, const CurveFunction& g);
CurveFunction FnMul(const Curve& c, const CurveFunction& f, const CurveFunction& g);
CurveFunction FnScale(const Curve& c, const CurveFunction& f, Elem s);
// Sum of coeffs[i] * basis[i].
CurveFunction FnCombine(const Curve& c, const std::vector<CurveFunction>& basis,
                        const std::vector<Elem>& coeffs);

// Local coordinates x(t), y(t) at the representative of p over F_{q^deg p},
// each with absolute precision at least prec. The uniformizer is x - x0 at
// affine points off the 2-torsion, y - y0 at affine 2-torsion points, x/y at
// the elliptic origin and 1/x at infinity on the line.
struct LocalCoordinates {
  Series x;
  Series y;
};
LocalCoordinates LocalCoords(const Curve& c, const ClosedPoint& p, int prec);

// Laurent expansion of f at p with absolute precision at least prec.
Series Expand(const Curve& c, const CurveFunction& f, const ClosedPoint& p, int prec);

// Valuation at p; equal across the orbit. Throws on the zero function.
int OrderAt(const Curve& c, const CurveFunction& f, const ClosedPoint& p);

// First k coefficients of f in the local uniformizer at p, over F_{q^deg p}.
// Throws std::domain_error if f has a pole at p.
std::vector<Elem> TaylorCoeffs(const Curve& c, const CurveFunction& f, const ClosedPoint& p,
                               int k);

// f(p) over F_{q^deg p}; throws std::domain_error at a pole.
Elem Evaluate(const Curve& c, const CurveFunction& f, const ClosedPoint& p);

// Basis of L(D). Genus at most 1.
std::vector<CurveFunction> RiemannRochBasis(const Curve& c, const Divisor& d);

// Checks div(f) + D >= 0 by valuations. The candidate poles are the zeros of
// the denominator; the answer is nullopt when those are not all located
// inside supp D and its negation.
std::optional<bool> InRiemannRochSpace(const Curve& c, const CurveFunction& f, const Divisor& d);

// All elements of the span of a basis, in lexicographic coefficient order.
std::vector<CurveFunction> SpanElements(const Curve& c, const std::vector<CurveFunction>& basis);

// Effective divisors of the given degree, in a deterministic order.
std::vector<Divisor> EffectiveDivisors(const Curve& c, int degree, std::size_t cap);

// Every function whose pole divisor has degree at most dmax, deduplicated and
// sorted. Throws CapExceededError past `cap` enumerated functions.
std::vector<CurveFunction> FunctionsUpToDegree(const Curve& c, int dmax,
                                               std::size_t cap = 5'000'000);

}  // namespace ruledcodes

#endif  // RULEDCODES_RRSPACE_H_
