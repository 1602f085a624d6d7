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

#ifndef RULEDCODES_POLY_H_
#define RULEDCODES_POLY_H_

#include <string>
#include <utility>
#include <vector>

#include "ruledcodes/gf.h"

namespace ruledcodes {

// Univariate polynomial, coefficients low degree first, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<Elem>;

namespace poly {

void Trim(Poly& a);
int Degree(const Poly& a);  // -1 for zero
Elem Leading(const Poly& a);
Poly Constant(Elem c);
Poly X();
Poly Add(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Sub(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Mul(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Scale(const FieldSpec& f, const Poly& a, Elem c);
Poly Pow(const FieldSpec& f, const Poly& a, int e);
std::pair<Poly, Poly> DivMod(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Gcd(const FieldSpec& f, Poly a, Poly b);  // monic
Poly Monic(const FieldSpec& f, const Poly& a);
// Evaluate a polynomial over the base field of `ext` at a point of `ext`.
Elem EvalLifted(const FieldSpec& ext, const Poly& a, Elem x);
Elem Eval(const FieldSpec& f, const Poly& a, Elem x);
// Coefficients lifted from the base field into `ext`.
Poly Lift(const FieldSpec& ext, const Poly& a);
// Minimal polynomial over the base field of an element of `ext`, returned
// with base-field coefficients.
Poly MinimalPolynomial(const FieldSpec& ext, Elem x);
std::string ToString(const Poly& a, const char* var = "x");

}  // namespace poly

// Truncated Laurent series sum_{i} c[i] t^(val + i) + O(t^prec) over a field.
// `prec` is the absolute precision; coefficients past it are unknown.
struct Series {
  int val = 0;
  int prec = 0;
  std::vector<Elem> c;

  static Series Zero(int prec);
  static Series Constant(const FieldSpec& f, Elem v, int prec);
  // t^k
  static Series Monomial(int k, int prec);

  // Lowest exponent with a nonzero known coefficient, or nullopt if every
  // known coefficient is zero.
  std::optional<int> order() const;
  Elem coeff(int exponent) const;
  void Normalize();
};

Series SeriesAdd(const FieldSpec& f, const Series& a, const Series& b);
Series SeriesSub(const FieldSpec& f, const Series& a, const Series& b);
Series SeriesMul(const FieldSpec& f, const Series& a, const Series& b);
Series SeriesScale(const FieldSpec& f, const Series& a, Elem c);
// Requires a known nonzero leading coefficient.
Series SeriesInverse(const FieldSpec& f, const Series& a);
Series SeriesTruncate(const Series& a, int prec);
// Horner evaluation of a base-field polynomial at a series over `ext`.
Series SeriesPolyEval(const FieldSpec& ext, const Poly& p, const Series& x, int prec);

}  // namespace ruledcodes

#endif  // RULEDCODES_POLY_H_
