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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ruledcodes/rrspace.h"

namespace ruledcodes {

std::string NumClass::ToString() const {
  std::ostringstream os;
  os << a << "S" << (b < 0 ? "" : "+") << b << "f";
  return os.str();
}

RuledSurface RuledSurface::Decomposable(Curve curve, Divisor delta) {
  if (!delta.is_effective() && !delta.empty()) {
    throw std::invalid_argument("delta must be effective");
  }
  for (const auto& [p, n] : delta.terms()) {
    if (p.degree < 2) throw std::invalid_argument("delta support contains a rational point");
    if (!curve.IsValid(p)) throw std::invalid_argument("delta point is not on the curve");
  }
  RuledSurface s(std::move(curve));
  s.variant_ = SurfaceVariant::kDecomposable;
  s.delta_ = std::move(delta);
  s.twist_ = s.delta_.degree();
  return s;
}

RuledSurface RuledSurface::Elm(Curve curve, ClosedPoint base_point, Elem fiber_coord) {
  if (!curve.IsValid(base_point)) throw std::invalid_argument("center is not a closed point");
  FieldPtr e = curve.ext(base_point.degree);
  if (!e->in_range(fiber_coord)) throw std::invalid_argument("fiber coordinate out of range");
  if (e->frobenius_orbit(fiber_coord).size() < 2) {
    throw std::invalid_argument("fiber coordinate of the center must not be rational");
  }
  RuledSurface s(std::move(curve));
  s.variant_ = SurfaceVariant::kElm;
  s.base_point_ = base_point;
  s.fiber_coord_ = fiber_coord;
  s.twist_ = base_point.degree;
  return s;
}

long long RuledSurface::Intersect(const NumClass& c1, const NumClass& c2) const {
  return c1.a * c2.a * deg_e() + c1.a * c2.b + c2.a * c1.b;
}

NumClass RuledSurface::CanonicalClass() const {
  return {-2, 2LL * genus() - 2 + deg_e()};
}

long long RuledSurface::EulerChar(const NumClass& d) const {
  return (d.a + 1) * (d.b + 1 - genus()) - twist_ * d.a * (d.a + 1) / 2;
}

long long RuledSurface::EulerCharByIntersection(const NumClass& d) const {
  const NumClass k = CanonicalClass();
  const long long twice = Intersect(d, {d.a - k.a, d.b - k.b});
  if (twice % 2 != 0) throw std::logic_error("odd D.(D-K)");
  return twice / 2 + 1 - genus();
}

std::vector<SurfacePoint> RuledSurface::RationalPoints() const {
  std::vector<SurfacePoint> out;
  const std::vector<ClosedPoint> base = curve_.RationalPoints();
  const Elem q = curve_.q();
  for (size_t i = 0; i < base.size(); ++i) {
    for (Elem u = 0; u <= q; ++u) out.push_back({static_cast<int>(i), base[i], u});
  }
  return out;
}

std::string RuledSurface::describe() const {
  std::ostringstream os;
  if (variant_ == SurfaceVariant::kDecomposable) {
    os << "P(O + O(-delta)), deg delta = " << twist_;
  } else {
    os << "elm of C x P1 at a point of degree " << twist_;
  }
  os << " over " << curve_.describe();
  return os.str();
}

ElmClassImage ElmClassMap(long long a, long long b, long long m, long long d) {
  if (a < 0 || m < 0 || m > a) throw std::invalid_argument("multiplicity out of range");
  return {{a, b + d * (a - m)}, 2 * a * b + a * d * (a - 2 * m)};
}

long long ElmInverseSelfIntersection(long long a, long long self_intersection, long long m,
                                     long long d) {
  if (a < 0 || m < 0 || m > a) throw std::invalid_argument("multiplicity out of range");
  const long long m_inv = a - m;
  return self_intersection + a * d * (a - 2 * m_inv);
}

SegreInvariants SegreDecomposable(const RuledSurface& s) {
  if (s.variant() != SurfaceVariant::kDecomposable) {
    throw std::invalid_argument("segre_decomposable needs a decomposable surface");
  }
  return {-s.twist(), -s.twist()};
}

SegreLowerBound SegreLowerBoundElm(const RuledSurface& s, int dmax, std::size_t cap) {
  if (s.variant() != SurfaceVariant::kElm) {
    throw std::invalid_argument("segre lower bound needs an elm surface");
  }
  const Curve& c = s.curve();
  const ClosedPoint& x = s.base_point();
  SegreLowerBound out;
  out.e_x = x.degree;
  for (int d = 0; d <= dmax; ++d) {
    const std::vector<CurveFunction> fs = FunctionsUpToDegree(c, d, cap);
    out.functions_checked = fs.size();
    bool through = false;
    for (const CurveFunction& f : fs) {
      try {
        if (Evaluate(c, f, x) == s.fiber_coord()) {
          through = true;
          break;
        }
      } catch (const std::domain_error&) {
        // Pole at the base point: the graph meets the fiber at infinity.
      }
    }
    if (through) break;
    out.d_star = d;
  }
  out.bound = std::min(out.e_x, 2 * (out.d_star + 1) - out.e_x);
  return out;
}

SegreUpperBound SegreUpperBounds(long long g, long long n, long long q) {
  auto qualifies = [&](long long t) {
    return n > std::max((t + 1) * (q * q + 1), t * (q * q + q + 1));
  };
  SegreUpperBound out;
  out.bound = 2 * g;
  if (!qualifies(0)) return out;
  long long t = 0;
  while (qualifies(t + 1)) ++t;
  out.t = t;
  out.bound = std::min(2 * g, 2 * (g - t) - 1);
  return out;
}

}  // namespace ruledcodes
