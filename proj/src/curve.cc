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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ruledcodes {

std::strong_ordering ClosedPoint::operator<=>(const ClosedPoint& o) const {
  if (auto c = degree <=> o.degree; c != 0) return c;
  if (auto c = infinity <=> o.infinity; c != 0) return c;
  if (auto c = x <=> o.x; c != 0) return c;
  return y <=> o.y;
}

Divisor Divisor::Of(const ClosedPoint& p, int n) {
  Divisor d;
  d.Set(p, n);
  return d;
}

void Divisor::Set(const ClosedPoint& p, int n) {
  if (n == 0) {
    terms_.erase(p);
  } else {
    terms_[p] = n;
  }
}

int Divisor::degree() const {
  int total = 0;
  for (const auto& [p, n] : terms_) total += n * p.degree;
  return total;
}

int Divisor::multiplicity(const ClosedPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Divisor Divisor::positive_part() const {
  Divisor d;
  for (const auto& [p, n] : terms_) {
    if (n > 0) d.Set(p, n);
  }
  return d;
}

Divisor Divisor::negative_part() const {
  Divisor d;
  for (const auto& [p, n] : terms_) {
    if (n < 0) d.Set(p, -n);
  }
  return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor d = *this;
  for (const auto& [p, n] : o.terms_) d.Set(p, d.multiplicity(p) + n);
  return d;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + o * -1; }

Divisor Divisor::operator*(int k) const {
  Divisor d;
  for (const auto& [p, n] : terms_) d.Set(p, n * k);
  return d;
}

std::string Divisor::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, n] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (n != 1) os << n << "*";
    if (p.infinity) {
      os << "[inf]";
    } else {
      os << "[d" << p.degree << ":" << p.x << "," << p.y << "]";
    }
  }
  return os.str();
}

Curve Curve::ProjectiveLine(FieldPtr field) {
  if (!field || !field->is_base()) throw std::invalid_argument("curve needs a base field");
  Curve c;
  c.kind_ = CurveKind::kProjectiveLine;
  c.field_ = std::move(field);
  return c;
}

Curve Curve::Elliptic(FieldPtr field, const std::array<Elem, 5>& a) {
  if (!field || !field->is_base()) throw std::invalid_argument("curve needs a base field");
  for (Elem v : a) {
    if (!field->in_range(v)) throw std::invalid_argument("curve coefficient out of range");
  }
  Curve c;
  c.kind_ = CurveKind::kElliptic;
  c.field_ = std::move(field);
  c.a_ = a;
  if (c.discriminant() == 0) {
    throw std::invalid_argument("singular Weierstrass equation: discriminant is 0");
  }
  return c;
}

Elem Curve::discriminant() const {
  if (kind_ != CurveKind::kElliptic) return 1;
  const FieldSpec& f = *field_;
  const auto [a1, a2, a3, a4, a6] = a_;
  auto k = [&](long long v) { return f.from_int(v); };
  const Elem b2 = f.add(f.mul(a1, a1), f.mul(k(4), a2));
  const Elem b4 = f.add(f.mul(k(2), a4), f.mul(a1, a3));
  const Elem b6 = f.add(f.mul(a3, a3), f.mul(k(4), a6));
  Elem b8 = f.mul(f.mul(a1, a1), a6);
  b8 = f.add(b8, f.mul(k(4), f.mul(a2, a6)));
  b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
  b8 = f.add(b8, f.mul(a2, f.mul(a3, a3)));
  b8 = f.sub(b8, f.mul(a4, a4));
  Elem d = f.neg(f.mul(f.mul(b2, b2), b8));
  d = f.sub(d, f.mul(k(8), f.pow(b4, 3)));
  d = f.sub(d, f.mul(k(27), f.mul(b6, b6)));
  d = f.add(d, f.mul(k(9), f.mul(b2, f.mul(b4, b6))));
  return d;
}

FieldPtr Curve::ext(int d) const {
  if (d < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (d == 1) return field_;
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->ext[d];
  if (!slot) slot = field_->Extend(d);
  return slot;
}

Elem Curve::Coeff(const FieldSpec& ext, int i) const { return ext.embed(a_[i]); }

bool Curve::OnCurve(const FieldSpec& e, const GeomPoint& p) const {
  if (p.infinity || kind_ == CurveKind::kProjectiveLine) return true;
  const Elem a1 = Coeff(e, 0), a2 = Coeff(e, 1), a3 = Coeff(e, 2), a4 = Coeff(e, 3),
             a6 = Coeff(e, 4);
  const Elem x = p.x, y = p.y;
  Elem lhs = e.add(e.mul(y, y), e.mul(e.add(e.mul(a1, x), a3), y));
  Elem rhs = e.add(e.mul(e.add(e.mul(e.add(x, a2), x), a4), x), a6);
  return lhs == rhs;
}

namespace {

// All affine points over ext, sorted by (x, y).
std::vector<GeomPoint> AffinePoints(const Curve& c, const FieldSpec& e) {
  std::vector<GeomPoint> pts;
  const Elem size = e.size();
  if (c.kind() == CurveKind::kProjectiveLine) {
    pts.reserve(size);
    for (Elem x = 0; x < size; ++x) pts.push_back({false, x, 0});
    return pts;
  }
  const Elem a1 = c.Coeff(e, 0), a2 = c.Coeff(e, 1), a3 = c.Coeff(e, 2), a4 = c.Coeff(e, 3),
             a6 = c.Coeff(e, 4);
  const bool char2 = e.characteristic() == 2;
  // Odd characteristic: square -> one root. Characteristic 2: w^2 + w -> w.
  std::vector<std::int64_t> table(size, -1);
  for (Elem s = 0; s < size; ++s) {
    const Elem v = char2 ? e.add(e.mul(s, s), s) : e.mul(s, s);
    if (table[v] < 0) table[v] = s;
  }
  const Elem half = char2 ? 0 : e.inv(e.from_int(2));
  for (Elem x = 0; x < size; ++x) {
    const Elem lin = e.add(e.mul(a1, x), a3);
    const Elem r = e.add(e.mul(e.add(e.mul(e.add(x, a2), x), a4), x), a6);
    std::vector<Elem> ys;
    if (char2) {
      if (lin == 0) {
        ys.push_back(e.pow(r, size / 2));
      } else {
        const Elem v = e.div(r, e.mul(lin, lin));
        if (table[v] >= 0) {
          const Elem w = static_cast<Elem>(table[v]);
          ys.push_back(e.mul(lin, w));
          ys.push_back(e.mul(lin, e.add(w, 1)));
        }
      }
    } else {
      const Elem disc = e.add(e.mul(lin, lin), e.mul(e.from_int(4), r));
      if (table[disc] >= 0) {
        const Elem s = static_cast<Elem>(table[disc]);
        ys.push_back(e.mul(e.sub(s, lin), half));
        if (s != 0) ys.push_back(e.mul(e.sub(e.neg(s), lin), half));
      }
    }
    std::sort(ys.begin(), ys.end());
    for (Elem y : ys) pts.push_back({false, x, y});
  }
  return pts;
}

GeomPoint Frob(const FieldSpec& e, const GeomPoint& p) {
  if (p.infinity) return p;
  return {false, e.frobenius(p.x), e.frobenius(p.y)};
}

bool Less(const GeomPoint& a, const GeomPoint& b) {
  if (a.infinity != b.infinity) return b.infinity;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace

long long Curve::CountPoints(int d) const {
  FieldPtr e = ext(d);
  return static_cast<long long>(AffinePoints(*this, *e).size()) + 1;
}

std::vector<ClosedPoint> Curve::ClosedPoints(int d) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->closed.find(d); it != cache_->closed.end()) return it->second;
  }
  FieldPtr e = ext(d);
  std::vector<ClosedPoint> out;
  for (const GeomPoint& p : AffinePoints(*this, *e)) {
    int size = 1;
    bool least = true;
    for (GeomPoint cur = Frob(*e, p); !(cur == p); cur = Frob(*e, cur)) {
      ++size;
      if (Less(cur, p)) least = false;
    }
    if (size == d && least) out.push_back({d, false, p.x, p.y});
  }
  if (d == 1) out.push_back({1, true, 0, 0});
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->closed[d] = out;
  return out;
}

std::vector<ClosedPoint> Curve::RationalPoints() const {
  std::vector<ClosedPoint> pts = ClosedPoints(1);
  if (kind_ == CurveKind::kElliptic) {
    const double bound = 2.0 * std::sqrt(static_cast<double>(q()));
    const double n = static_cast<double>(pts.size());
    if (std::abs(n - (q() + 1.0)) > bound + 1e-9) throw std::logic_error("Hasse bound violated");
  }
  return pts;
}

int Curve::N() const { return static_cast<int>(RationalPoints().size()); }

long long Curve::ClassNumber() const {
  return kind_ == CurveKind::kElliptic ? N() : 1;
}

std::vector<GeomPoint> Curve::Conjugates(const ClosedPoint& p) const {
  FieldPtr e = ext(p.degree);
  std::vector<GeomPoint> orbit{p.geom()};
  for (GeomPoint cur = Frob(*e, p.geom()); !(cur == p.geom()); cur = Frob(*e, cur)) {
    orbit.push_back(cur);
  }
  return orbit;
}

ClosedPoint Curve::ClosedPointOf(int d, const GeomPoint& p) const {
  if (p.infinity) return {1, true, 0, 0};
  FieldPtr e = ext(d);
  if (!OnCurve(*e, p)) throw std::invalid_argument("point is not on the curve");
  GeomPoint best = p;
  int size = 1;
  for (GeomPoint cur = Frob(*e, p); !(cur == p); cur = Frob(*e, cur)) {
    ++size;
    if (Less(cur, best)) best = cur;
  }
  if (size != d) {
    if (size == 1) {
      auto x = e->restrict_to_base(best.x);
      auto y = e->restrict_to_base(best.y);
      return {1, false, *x, *y};
    }
    throw std::invalid_argument("point is defined over a proper subfield");
  }
  return {d, false, best.x, best.y};
}

bool Curve::IsValid(const ClosedPoint& p) const {
  if (p.infinity) return p.degree == 1;
  if (p.degree < 1) return false;
  FieldPtr e = ext(p.degree);
  if (!e->in_range(p.x) || !e->in_range(p.y)) return false;
  if (kind_ == CurveKind::kProjectiveLine && p.y != 0) return false;
  if (!OnCurve(*e, p.geom())) return false;
  try {
    return ClosedPointOf(p.degree, p.geom()) == p;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

GeomPoint Curve::Negate(const FieldSpec& e, const GeomPoint& p) const {
  if (kind_ != CurveKind::kElliptic) throw std::invalid_argument("group law needs an elliptic curve");
  if (p.infinity) return p;
  const Elem a1 = Coeff(e, 0), a3 = Coeff(e, 2);
  return {false, p.x, e.sub(e.neg(p.y), e.add(e.mul(a1, p.x), a3))};
}

GeomPoint Curve::Add(const FieldSpec& e, const GeomPoint& p, const GeomPoint& r) const {
  if (kind_ != CurveKind::kElliptic) throw std::invalid_argument("group law needs an elliptic curve");
  if (!OnCurve(e, p) || !OnCurve(e, r)) throw std::invalid_argument("point is not on the curve");
  if (p.infinity) return r;
  if (r.infinity) return p;
  const Elem a1 = Coeff(e, 0), a2 = Coeff(e, 1), a3 = Coeff(e, 2), a4 = Coeff(e, 3),
             a6 = Coeff(e, 4);
  Elem lambda, nu;
  if (p.x == r.x) {
    if (e.add(e.add(p.y, r.y), e.add(e.mul(a1, r.x), a3)) == 0) return {true, 0, 0};
    const Elem den = e.add(e.add(e.mul(e.from_int(2), p.y), e.mul(a1, p.x)), a3);
    const Elem x2 = e.mul(p.x, p.x);
    Elem num = e.add(e.mul(e.from_int(3), x2), e.mul(e.from_int(2), e.mul(a2, p.x)));
    num = e.sub(e.add(num, a4), e.mul(a1, p.y));
    lambda = e.div(num, den);
    Elem nnum = e.neg(e.mul(x2, p.x));
    nnum = e.add(nnum, e.mul(a4, p.x));
    nnum = e.add(nnum, e.mul(e.from_int(2), a6));
    nnum = e.sub(nnum, e.mul(a3, p.y));
    nu = e.div(nnum, den);
  } else {
    const Elem dx = e.sub(r.x, p.x);
    lambda = e.div(e.sub(r.y, p.y), dx);
    nu = e.div(e.sub(e.mul(p.y, r.x), e.mul(r.y, p.x)), dx);
  }
  Elem x3 = e.add(e.mul(lambda, lambda), e.mul(a1, lambda));
  x3 = e.sub(e.sub(e.sub(x3, a2), p.x), r.x);
  Elem y3 = e.neg(e.mul(e.add(lambda, a1), x3));
  y3 = e.sub(e.sub(y3, nu), a3);
  return {false, x3, y3};
}

GeomPoint Curve::Multiply(const FieldSpec& e, const GeomPoint& p, long long k) const {
  GeomPoint base = k < 0 ? Negate(e, p) : p;
  unsigned long long n = k < 0 ? -static_cast<unsigned long long>(k) : k;
  GeomPoint acc{true, 0, 0};
  while (n) {
    if (n & 1) acc = Add(e, acc, base);
    base = Add(e, base, base);
    n >>= 1;
  }
  return acc;
}

GeomPoint Curve::DivisorSum(const Divisor& d) const {
  if (kind_ != CurveKind::kElliptic) throw std::invalid_argument("group law needs an elliptic curve");
  const FieldSpec& f = *field_;
  GeomPoint total{true, 0, 0};
  for (const auto& [p, n] : d.terms()) {
    FieldPtr e = ext(p.degree);
    GeomPoint s{true, 0, 0};
    for (const GeomPoint& c : Conjugates(p)) s = Add(*e, s, c);
    GeomPoint rational{true, 0, 0};
    if (!s.infinity) {
      auto x = e->restrict_to_base(s.x);
      auto y = e->restrict_to_base(s.y);
      if (!x || !y) throw std::logic_error("conjugate sum is not rational");
      rational = {false, *x, *y};
    }
    total = Add(f, total, Multiply(f, rational, n));
  }
  return total;
}

bool Curve::IsPrincipal(const Divisor& d) const {
  if (d.degree() != 0) return false;
  if (kind_ == CurveKind::kProjectiveLine) return true;
  return DivisorSum(d).infinity;
}

std::string Curve::describe() const {
  std::ostringstream os;
  if (kind_ == CurveKind::kProjectiveLine) {
    os << "P1 over " << field_->describe();
  } else {
    os << "y^2 + " << a_[0] << "xy + " << a_[2] << "y = x^3 + " << a_[1] << "x^2 + " << a_[3]
       << "x + " << a_[4] << " over " << field_->describe();
  }
  return os.str();
}

}  // namespace ruledcodes
