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

#include "ruledcodes/rrspace.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ruledcodes/linalg.h"

namespace ruledcodes {

CurveFunction CurveFunction::Constant(Elem c) {
  CurveFunction f;
  f.a_ = poly::Constant(c);
  return f;
}

CurveFunction CurveFunction::X() {
  CurveFunction f;
  f.a_ = poly::X();
  return f;
}

CurveFunction CurveFunction::Y() {
  CurveFunction f;
  f.b_ = {1};
  return f;
}

CurveFunction CurveFunction::FromParts(const FieldSpec& f, Poly a, Poly b, Poly den) {
  poly::Trim(a);
  poly::Trim(b);
  poly::Trim(den);
  if (den.empty()) throw std::domain_error("function with zero denominator");
  CurveFunction out;
  if (a.empty() && b.empty()) return out;
  const Poly g = poly::Gcd(f, poly::Gcd(f, a, b), den);
  if (poly::Degree(g) > 0) {
    a = poly::DivMod(f, a, g).first;
    b = poly::DivMod(f, b, g).first;
    den = poly::DivMod(f, den, g).first;
  }
  const Elem lead_inv = f.inv(den.back());
  out.a_ = poly::Scale(f, a, lead_inv);
  out.b_ = poly::Scale(f, b, lead_inv);
  out.den_ = poly::Scale(f, den, lead_inv);
  return out;
}

std::string CurveFunction::ToString() const {
  std::ostringstream os;
  if (b_.empty()) {
    os << poly::ToString(a_);
  } else {
    os << "(" << poly::ToString(a_) << ") + (" << poly::ToString(b_) << ")*y";
  }
  if (den_ != Poly{1}) os << " / (" << poly::ToString(den_) << ")";
  return os.str();
}

namespace {

// x^3 + a2 x^2 + a4 x + a6 and a1 x + a3.
Poly CubicPart(const Curve& c) {
  const auto& a = c.coefficients();
  Poly p = {a[4], a[3], a[1], 1};
  poly::Trim(p);
  return p;
}

Poly LinearPart(const Curve& c) {
  const auto& a = c.coefficients();
  Poly p = {a[2], a[0]};
  poly::Trim(p);
  return p;
}

}  // namespace

CurveFunction FnAdd(const Curve& c, const CurveFunction& f, const CurveFunction& g) {
  const FieldSpec& k = c.field();
  Poly a = poly::Add(k, poly::Mul(k, f.a(), g.den()), poly::Mul(k, g.a(), f.den()));
  Poly b = poly::Add(k, poly::Mul(k, f.b(), g.den()), poly::Mul(k, g.b(), f.den()));
  return CurveFunction::FromParts(k, a, b, poly::Mul(k, f.den(), g.den()));
}

CurveFunction FnScale(const Curve& c, const CurveFunction& f, Elem s) {
  const FieldSpec& k = c.field();
  return CurveFunction::FromParts(k, poly::Scale(k, f.a(), s), poly::Scale(k, f.b(), s), f.den());
}

CurveFunction FnSub(const Curve& c, const CurveFunction& f, const CurveFunction& g) {
  return FnAdd(c, f, FnScale(c, g, c.field().neg(1)));
}

CurveFunction FnMul(const Curve& c, const CurveFunction& f, const CurveFunction& g) {
  const FieldSpec& k = c.field();
  // y^2 = cubic - linear * y.
  const Poly bb = poly::Mul(k, f.b(), g.b());
  Poly a = poly::Add(k, poly::Mul(k, f.a(), g.a()), poly::Mul(k, bb, CubicPart(c)));
  Poly b = poly::Add(k, poly::Mul(k, f.a(), g.b()), poly::Mul(k, f.b(), g.a()));
  b = poly::Sub(k, b, poly::Mul(k, bb, LinearPart(c)));
  return CurveFunction::FromParts(k, a, b, poly::Mul(k, f.den(), g.den()));
}

CurveFunction FnCombine(const Curve& c, const std::vector<CurveFunction>& basis,
                        const std::vector<Elem>& coeffs) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("basis/coefficient mismatch");
  CurveFunction acc;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) acc = FnAdd(c, acc, FnScale(c, basis[i], coeffs[i]));
  }
  return acc;
}

namespace {

Series Affine(Elem x0, int prec) {
  Series s{0, prec, std::vector<Elem>(std::max(prec, 0), 0)};
  if (prec > 0) s.c[0] = x0;
  if (prec > 1) s.c[1] = 1;
  return s;
}

// Solves G(s, v) = 0 for v with v(0) = v0 given dG/dv(0) = g0 != 0, one
// coefficient at a time.
Series SolveCoordinate(const FieldSpec& e, const Series& s, Elem v0, Elem g0, int prec,
                       const std::function<Series(const Series&, const Series&)>& g) {
  Series v = Series::Constant(e, v0, prec);
  const Elem g0_inv = e.inv(g0);
  for (int k = 1; k < prec; ++k) {
    const Series r = g(s, v);
    v.c[k] = e.neg(e.mul(r.coeff(k), g0_inv));
  }
  return v;
}

}  // namespace

LocalCoordinates LocalCoords(const Curve& c, const ClosedPoint& p, int prec) {
  FieldPtr ext = c.ext(p.degree);
  const FieldSpec& e = *ext;
  if (c.kind() == CurveKind::kProjectiveLine) {
    if (p.infinity) {
      Series x{-1, prec, std::vector<Elem>(std::max(prec + 1, 0), 0)};
      if (!x.c.empty()) x.c[0] = 1;
      return {x, Series::Zero(prec)};
    }
    return {Affine(p.x, prec), Series::Zero(prec)};
  }
  const Elem a1 = c.Coeff(e, 0), a2 = c.Coeff(e, 1), a3 = c.Coeff(e, 2), a4 = c.Coeff(e, 3),
             a6 = c.Coeff(e, 4);
  auto k = [&](Elem v, int pr) { return Series::Constant(e, v, pr); };
  if (p.infinity) {
    // w = 1/y as a series in z = x/y:
    //   w + a1 z w + a3 w^2 = z^3 + a2 z^2 w + a4 z w^2 + a6 w^3.
    const int work = prec + 8;
    const Series z = Series::Monomial(1, work);
    auto phi = [&](const Series& zz, const Series& w) {
      const Series w2 = SeriesMul(e, w, w);
      const Series zw = SeriesMul(e, zz, w);
      Series r = SeriesAdd(e, w, SeriesScale(e, zw, a1));
      r = SeriesAdd(e, r, SeriesScale(e, w2, a3));
      r = SeriesSub(e, r, SeriesMul(e, zz, SeriesMul(e, zz, zz)));
      r = SeriesSub(e, r, SeriesScale(e, SeriesMul(e, zz, zw), a2));
      r = SeriesSub(e, r, SeriesScale(e, SeriesMul(e, zz, w2), a4));
      r = SeriesSub(e, r, SeriesScale(e, SeriesMul(e, w2, w), a6));
      return r;
    };
    const Series w = SolveCoordinate(e, z, 0, 1, work, phi);
    const Series y = SeriesInverse(e, w);
    const Series x = SeriesMul(e, z, y);
    return {SeriesTruncate(x, prec), SeriesTruncate(y, prec)};
  }
  auto curve_eq = [&](const Series& x, const Series& y) {
    Series r = SeriesMul(e, y, y);
    r = SeriesAdd(e, r, SeriesScale(e, SeriesMul(e, x, y), a1));
    r = SeriesAdd(e, r, SeriesScale(e, y, a3));
    const Series x2 = SeriesMul(e, x, x);
    r = SeriesSub(e, r, SeriesMul(e, x2, x));
    r = SeriesSub(e, r, SeriesScale(e, x2, a2));
    r = SeriesSub(e, r, SeriesScale(e, x, a4));
    r = SeriesSub(e, r, k(a6, x.prec));
    return r;
  };
  const Elem fy = e.add(e.add(e.mul(e.from_int(2), p.y), e.mul(a1, p.x)), a3);
  if (fy != 0) {
    const Series x = Affine(p.x, prec);
    const Series y = SolveCoordinate(e, x, p.y, fy, prec, curve_eq);
    return {x, y};
  }
  // 2-torsion: y - y0 is a uniformizer and dG/dx is nonzero.
  Elem fx = e.mul(a1, p.y);
  fx = e.sub(fx, e.mul(e.from_int(3), e.mul(p.x, p.x)));
  fx = e.sub(fx, e.mul(e.from_int(2), e.mul(a2, p.x)));
  fx = e.sub(fx, a4);
  const Series y = Affine(p.y, prec);
  auto swapped = [&](const Series& yy, const Series& xx) { return curve_eq(xx, yy); };
  const Series x = SolveCoordinate(e, y, p.x, fx, prec, swapped);
  return {x, y};
}

namespace {

struct NumDen {
  Series num;
  Series den;
};

NumDen ExpandParts(const Curve& c, const CurveFunction& f, const ClosedPoint& p, int work) {
  FieldPtr ext = c.ext(p.degree);
  const FieldSpec& e = *ext;
  const LocalCoordinates lc = LocalCoords(c, p, work);
  Series num = SeriesPolyEval(e, f.a(), lc.x, work);
  if (!f.b().empty()) {
    num = SeriesAdd(e, num, SeriesMul(e, SeriesPolyEval(e, f.b(), lc.x, work), lc.y));
  }
  return {num, SeriesPolyEval(e, f.den(), lc.x, work)};
}

}  // namespace

Series Expand(const Curve& c, const CurveFunction& f, const ClosedPoint& p, int prec) {
  FieldPtr ext = c.ext(p.degree);
  int work = std::max(prec, 0) + 8;
  for (int attempt = 0; attempt < 64; ++attempt) {
    NumDen nd = ExpandParts(c, f, p, work);
    if (!nd.den.order()) {
      work *= 2;
      continue;
    }
    Series r = SeriesMul(*ext, nd.num, SeriesInverse(*ext, nd.den));
    if (r.prec >= prec) return SeriesTruncate(r, prec);
    work += (prec - r.prec) + 8;
  }
  throw std::logic_error("series expansion did not reach the requested precision");
}

int OrderAt(const Curve& c, const CurveFunction& f, const ClosedPoint& p) {
  if (f.is_zero()) throw std::domain_error("order of the zero function");
  if (p.infinity) {
    const int dden = poly::Degree(f.den());
    if (c.kind() == CurveKind::kProjectiveLine) return dden - poly::Degree(f.a());
    int num = std::numeric_limits<int>::max();
    if (!f.a().empty()) num = -2 * poly::Degree(f.a());
    if (!f.b().empty()) num = std::min(num, -2 * poly::Degree(f.b()) - 3);
    return num + 2 * dden;
  }
  for (int work = 8;; work *= 2) {
    NumDen nd = ExpandParts(c, f, p, work);
    auto on = nd.num.order();
    auto od = nd.den.order();
    if (on && od) return *on - *od;
    if (work > (1 << 16)) throw std::logic_error("valuation search did not terminate");
  }
}

std::vector<Elem> TaylorCoeffs(const Curve& c, const CurveFunction& f, const ClosedPoint& p,
                               int k) {
  if (f.is_zero()) return std::vector<Elem>(std::max(k, 0), 0);
  if (OrderAt(c, f, p) < 0) throw std::domain_error("function has a pole at the point");
  const Series s = Expand(c, f, p, k);
  std::vector<Elem> out(std::max(k, 0));
  for (int j = 0; j < k; ++j) out[j] = s.coeff(j);
  return out;
}

Elem Evaluate(const Curve& c, const CurveFunction& f, const ClosedPoint& p) {
  if (f.is_zero()) return 0;
  FieldPtr ext = c.ext(p.degree);
  const FieldSpec& e = *ext;
  if (p.infinity) {
    const int ord = OrderAt(c, f, p);
    if (ord < 0) throw std::domain_error("function has a pole at the point");
    if (ord > 0) return 0;
    return e.div(poly::Leading(f.a()), poly::Leading(f.den()));
  }
  const Elem dv = poly::EvalLifted(e, f.den(), p.x);
  if (dv != 0) {
    Elem nv = poly::EvalLifted(e, f.a(), p.x);
    if (!f.b().empty()) nv = e.add(nv, e.mul(poly::EvalLifted(e, f.b(), p.x), p.y));
    return e.div(nv, dv);
  }
  return TaylorCoeffs(c, f, p, 1)[0];
}

namespace {

struct Monomial {
  int i;
  int j;
};

std::vector<Monomial> MonomialsUpTo(const Curve& c, int pole) {
  std::vector<Monomial> out;
  if (c.kind() == CurveKind::kProjectiveLine) {
    for (int i = 0; i <= pole; ++i) out.push_back({i, 0});
    return out;
  }
  for (int order = 0; order <= pole; ++order) {
    if (order % 2 == 0) out.push_back({order / 2, 0});
    if (order >= 3 && order % 2 == 1) out.push_back({(order - 3) / 2, 1});
  }
  return out;
}

std::set<ClosedPoint> CheckSet(const Curve& c, const Divisor& d) {
  std::set<ClosedPoint> s;
  for (const auto& [p, n] : d.terms()) {
    if (p.infinity) continue;
    s.insert(p);
    if (c.kind() == CurveKind::kElliptic) {
      FieldPtr e = c.ext(p.degree);
      s.insert(c.ClosedPointOf(p.degree, c.Negate(*e, p.geom())));
    }
  }
  return s;
}

}  // namespace

std::vector<CurveFunction> RiemannRochBasis(const Curve& c, const Divisor& d) {
  const FieldSpec& k = c.field();
  for (const auto& [p, n] : d.terms()) {
    if (!c.IsValid(p)) throw std::invalid_argument("divisor point is not a canonical closed point");
  }
  if (d.degree() < 0) return {};
  if (c.kind() == CurveKind::kElliptic && d.degree() == 0 && !c.IsPrincipal(d)) return {};

  // f in L(D) iff g = f H is a polynomial in x, y with bounded pole at
  // infinity and prescribed vanishing on the check set.
  Poly h = {1};
  for (const auto& [p, n] : d.terms()) {
    if (p.infinity || n <= 0) continue;
    FieldPtr e = c.ext(p.degree);
    h = poly::Mul(k, h, poly::Pow(k, poly::MinimalPolynomial(*e, p.x), n));
  }
  const ClosedPoint inf{1, true, 0, 0};
  const int per_degree = c.kind() == CurveKind::kElliptic ? 2 : 1;
  const int pole = d.multiplicity(inf) + per_degree * poly::Degree(h);
  if (pole < 0) return {};
  const std::vector<Monomial> monos = MonomialsUpTo(c, pole);

  Matrix conditions(0, static_cast<int>(monos.size()));
  CurveFunction hf;
  hf = CurveFunction::FromParts(k, h, {}, {1});
  for (const ClosedPoint& q : CheckSet(c, d)) {
    const int r = OrderAt(c, hf, q) - d.multiplicity(q);
    if (r <= 0) continue;
    FieldPtr ext = c.ext(q.degree);
    const FieldSpec& e = *ext;
    const LocalCoordinates lc = LocalCoords(c, q, r);
    const std::vector<Elem> basis = e.base_basis();
    std::vector<std::vector<Elem>> columns;
    Series xp = Series::Constant(e, 1, r);
    std::vector<Series> xpow;
    for (const Monomial& m : monos) {
      while (static_cast<int>(xpow.size()) <= m.i) {
        xpow.push_back(xp);
        xp = SeriesMul(e, xp, lc.x);
      }
    }
    for (const Monomial& m : monos) {
      Series s = xpow[m.i];
      if (m.j == 1) s = SeriesMul(e, s, lc.y);
      std::vector<Elem> col(r);
      for (int t = 0; t < r; ++t) col[t] = s.coeff(t);
      columns.push_back(std::move(col));
    }
    for (int t = 0; t < r; ++t) {
      for (Elem b : basis) {
        std::vector<Elem> row(monos.size());
        for (size_t m = 0; m < monos.size(); ++m) {
          row[m] = e.trace_to_base(e.mul(b, columns[m][t]));
        }
        conditions.append_row(row);
      }
    }
  }

  std::vector<std::vector<Elem>> kernel;
  if (conditions.rows() == 0) {
    for (size_t m = 0; m < monos.size(); ++m) {
      std::vector<Elem> v(monos.size(), 0);
      v[m] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = NullSpace(k, conditions);
  }
  if (kernel.empty()) return {};
  Matrix km(0, static_cast<int>(monos.size()));
  for (const auto& v : kernel) km.append_row(v);
  const EchelonForm ef = ReducedRowEchelon(k, km);

  std::vector<CurveFunction> out;
  for (int r = 0; r < ef.reduced.rows(); ++r) {
    Poly a, b;
    for (size_t m = 0; m < monos.size(); ++m) {
      const Elem v = ef.reduced.at(r, static_cast<int>(m));
      if (v == 0) continue;
      Poly& target = monos[m].j == 0 ? a : b;
      if (static_cast<int>(target.size()) <= monos[m].i) target.resize(monos[m].i + 1, 0);
      target[monos[m].i] = v;
    }
    out.push_back(CurveFunction::FromParts(k, a, b, h));
  }
  return out;
}

std::optional<bool> InRiemannRochSpace(const Curve& c, const CurveFunction& f, const Divisor& d) {
  if (f.is_zero()) return true;
  const std::set<ClosedPoint> check = CheckSet(c, d);
  const CurveFunction den = CurveFunction::FromParts(c.field(), f.den(), {}, {1});
  int located = 0;
  for (const ClosedPoint& q : check) located += OrderAt(c, den, q) * q.degree;
  const int per_degree = c.kind() == CurveKind::kElliptic ? 2 : 1;
  if (located != per_degree * poly::Degree(f.den())) return std::nullopt;
  for (const ClosedPoint& q : check) {
    if (OrderAt(c, f, q) + d.multiplicity(q) < 0) return false;
  }
  const ClosedPoint inf{1, true, 0, 0};
  return OrderAt(c, f, inf) + d.multiplicity(inf) >= 0;
}

std::vector<CurveFunction> SpanElements(const Curve& c, const std::vector<CurveFunction>& basis) {
  const Elem q = c.q();
  std::vector<CurveFunction> out;
  std::vector<Elem> coeffs(basis.size(), 0);
  while (true) {
    out.push_back(FnCombine(c, basis, coeffs));
    size_t i = coeffs.size();
    while (i > 0) {
      --i;
      if (++coeffs[i] < q) break;
      coeffs[i] = 0;
      if (i == 0) return out;
    }
    if (coeffs.empty()) return out;
  }
}

std::vector<Divisor> EffectiveDivisors(const Curve& c, int degree, std::size_t cap) {
  std::vector<ClosedPoint> pts;
  for (int e = 1; e <= degree; ++e) {
    auto ce = c.ClosedPoints(e);
    pts.insert(pts.end(), ce.begin(), ce.end());
  }
  std::vector<Divisor> out;
  std::function<void(size_t, int, Divisor)> rec = [&](size_t start, int left, Divisor acc) {
    if (left == 0) {
      if (out.size() >= cap) throw CapExceededError("too many effective divisors");
      out.push_back(acc);
      return;
    }
    for (size_t i = start; i < pts.size(); ++i) {
      if (pts[i].degree > left) continue;
      rec(i, left - pts[i].degree, acc + Divisor::Of(pts[i]));
    }
  };
  if (degree >= 0) rec(0, degree, Divisor());
  return out;
}

std::vector<CurveFunction> FunctionsUpToDegree(const Curve& c, int dmax, std::size_t cap) {
  std::set<CurveFunction> found;
  for (Elem v = 0; v < c.q(); ++v) found.insert(CurveFunction::Constant(v));
  if (dmax >= 1) {
    std::size_t enumerated = 0;
    for (const Divisor& d : EffectiveDivisors(c, dmax, cap)) {
      const std::vector<CurveFunction> basis = RiemannRochBasis(c, d);
      double size = 1;
      for (size_t i = 0; i < basis.size(); ++i) size *= c.q();
      if (enumerated + size > cap) {
        throw CapExceededError("function enumeration exceeds the cap of " + std::to_string(cap));
      }
      enumerated += static_cast<std::size_t>(size);
      for (CurveFunction& f : SpanElements(c, basis)) found.insert(std::move(f));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace ruledcodes
