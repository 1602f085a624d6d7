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

#ifndef RULEDCODES_CURVE_H_
#define RULEDCODES_CURVE_H_

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ruledcodes/gf.h"

namespace ruledcodes {

enum class CurveKind { kProjectiveLine, kElliptic };

// A geometric point with coordinates in some extension F_{q^d}. On the
// projective line only x is used.
struct GeomPoint {
  bool infinity = false;
  Elem x = 0;
  Elem y = 0;

  bool operator==(const GeomPoint&) const = default;
};

// A Galois orbit of geometric points, stored through its canonical
// representative (least (x, y) encoding) over F_{q^degree}.
struct ClosedPoint {
  int degree = 1;
  bool infinity = false;
  Elem x = 0;
  Elem y = 0;

  GeomPoint geom() const { return {infinity, x, y}; }

  // Degree first, then affine points by (x, y), the point at infinity last.
  std::strong_ordering operator<=>(const ClosedPoint& o) const;
  bool operator==(const ClosedPoint& o) const = default;
};

class Divisor {
 public:
  Divisor() = default;
  static Divisor Of(const ClosedPoint& p, int n = 1);

  int degree() const;
  int multiplicity(const ClosedPoint& p) const;
  bool empty() const { return terms_.empty(); }
  bool is_effective() const;
  const std::map<ClosedPoint, int>& terms() const { return terms_; }

  Divisor positive_part() const;
  Divisor negative_part() const;  // returned with positive coefficients

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator*(int k) const;
  bool operator==(const Divisor& o) const = default;

  std::string ToString() const;

 private:
  void Set(const ClosedPoint& p, int n);
  std::map<ClosedPoint, int> terms_;
};

// Projective line or a long Weierstrass elliptic curve
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over a base field F_q.
class Curve {
 public:
  static Curve ProjectiveLine(FieldPtr field);
  // Throws std::invalid_argument when the discriminant vanishes.
  static Curve Elliptic(FieldPtr field, const std::array<Elem, 5>& a);

  CurveKind kind() const { return kind_; }
  int genus() const { return kind_ == CurveKind::kElliptic ? 1 : 0; }
  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Elem q() const { return field_->size(); }
  // a1, a2, a3, a4, a6.
  const std::array<Elem, 5>& coefficients() const { return a_; }
  Elem discriminant() const;

  // F_{q^d}, cached for the lifetime of the curve.
  FieldPtr ext(int d) const;

  bool OnCurve(const FieldSpec& ext, const GeomPoint& p) const;
  // Coefficient i lifted into ext.
  Elem Coeff(const FieldSpec& ext, int i) const;

  // Number of points over F_{q^d}.
  long long CountPoints(int d) const;
  std::vector<ClosedPoint> RationalPoints() const;
  // One representative per Frobenius orbit of exact size d, sorted.
  std::vector<ClosedPoint> ClosedPoints(int d) const;
  // Number of rational points N.
  int N() const;
  long long ClassNumber() const;

  // The orbit of a closed point in F_{q^deg}.
  std::vector<GeomPoint> Conjugates(const ClosedPoint& p) const;
  // Brings a geometric point over F_{q^d} to its closed point.
  ClosedPoint ClosedPointOf(int d, const GeomPoint& p) const;
  bool IsValid(const ClosedPoint& p) const;

  // Chord-tangent group law over ext; the point at infinity is the identity.
  GeomPoint Add(const FieldSpec& ext, const GeomPoint& p, const GeomPoint& r) const;
  GeomPoint Negate(const FieldSpec& ext, const GeomPoint& p) const;
  GeomPoint Multiply(const FieldSpec& ext, const GeomPoint& p, long long k) const;
  // Sum in E(F_q) of the divisor's points; each closed point contributes the
  // sum of its conjugates.
  GeomPoint DivisorSum(const Divisor& d) const;
  // A degree-0 divisor on an elliptic curve is principal iff its sum is O.
  bool IsPrincipal(const Divisor& d) const;

  std::string describe() const;

 private:
  Curve() = default;
  struct Cache {
    std::mutex mu;
    std::map<int, FieldPtr> ext;
    std::map<int, std::vector<ClosedPoint>> closed;
  };

  CurveKind kind_ = CurveKind::kProjectiveLine;
  FieldPtr field_;
  std::array<Elem, 5> a_{};
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace ruledcodes

#endif  // RULEDCODES_CURVE_H_
