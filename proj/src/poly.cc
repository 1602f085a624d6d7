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

#include "ruledcodes/poly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ruledcodes {
namespace poly {

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int Degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Elem Leading(const Poly& a) { return a.empty() ? 0 : a.back(); }

Poly Constant(Elem c) { return c == 0 ? Poly{} : Poly{c}; }

Poly X() { return {0, 1}; }

Poly Add(const FieldSpec& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  Trim(r);
  return r;
}

Poly Sub(const FieldSpec& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  Trim(r);
  return r;
}

Poly Mul(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  Trim(r);
  return r;
}

Poly Scale(const FieldSpec& f, const Poly& a, Elem c) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  Trim(r);
  return r;
}

Poly Pow(const FieldSpec& f, const Poly& a, int e) {
  Poly r = {1};
  for (int i = 0; i < e; ++i) r = Mul(f, r, a);
  return r;
}

std::pair<Poly, Poly> DivMod(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  Trim(rem);
  const int db = Degree(b);
  Poly quo(std::max(0, Degree(rem) - db + 1), 0);
  const Elem lead_inv = f.inv(b.back());
  while (Degree(rem) >= db) {
    const int shift = Degree(rem) - db;
    const Elem factor = f.mul(rem.back(), lead_inv);
    quo[shift] = factor;
    for (int i = 0; i <= db; ++i) rem[i + shift] = f.sub(rem[i + shift], f.mul(factor, b[i]));
    Trim(rem);
  }
  Trim(quo);
  return {quo, rem};
}

Poly Monic(const FieldSpec& f, const Poly& a) {
  if (a.empty()) return a;
  return Scale(f, a, f.inv(a.back()));
}

Poly Gcd(const FieldSpec& f, Poly a, Poly b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = DivMod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return Monic(f, a);
}

Elem EvalLifted(const FieldSpec& ext, const Poly& a, Elem x) {
  Elem acc = 0;
  for (int i = Degree(a); i >= 0; --i) acc = ext.add(ext.mul(acc, x), ext.embed(a[i]));
  return acc;
}

Elem Eval(const FieldSpec& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (int i = Degree(a); i >= 0; --i) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

Poly Lift(const FieldSpec& ext, const Poly& a) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = ext.embed(a[i]);
  return r;
}

Poly MinimalPolynomial(const FieldSpec& ext, Elem x) {
  Poly acc = {1};
  for (Elem root : ext.frobenius_orbit(x)) acc = Mul(ext, acc, Poly{ext.neg(root), 1});
  Poly out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    auto c = ext.restrict_to_base(acc[i]);
    if (!c) throw std::logic_error("minimal polynomial has coefficients outside the base field");
    out[i] = *c;
  }
  return out;
}

std::string ToString(const Poly& a, const char* var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= Degree(a); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << a[i];
    } else {
      if (a[i] != 1) os << a[i] << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace poly

Series Series::Zero(int prec) { return {prec, prec, {}}; }

Series Series::Constant(const FieldSpec&, Elem v, int prec) {
  Series s{0, prec, std::vector<Elem>(std::max(prec, 0), 0)};
  if (prec > 0) s.c[0] = v;
  return s;
}

Series Series::Monomial(int k, int prec) {
  Series s{k, prec, std::vector<Elem>(std::max(prec - k, 0), 0)};
  if (!s.c.empty()) s.c[0] = 1;
  return s;
}

std::optional<int> Series::order() const {
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return val + static_cast<int>(i);
  }
  return std::nullopt;
}

Elem Series::coeff(int exponent) const {
  if (exponent >= prec) throw std::out_of_range("series coefficient beyond precision");
  if (exponent < val) return 0;
  return c[exponent - val];
}

void Series::Normalize() {
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  if (lead == 0) return;
  c.erase(c.begin(), c.begin() + lead);
  val += static_cast<int>(lead);
}

namespace {

Series Combine(const FieldSpec& f, const Series& a, const Series& b, bool subtract) {
  Series r;
  r.val = std::min(a.val, b.val);
  r.prec = std::min(a.prec, b.prec);
  r.c.assign(std::max(r.prec - r.val, 0), 0);
  for (int e = r.val; e < r.prec; ++e) {
    const Elem x = a.coeff(e);
    const Elem y = b.coeff(e);
    r.c[e - r.val] = subtract ? f.sub(x, y) : f.add(x, y);
  }
  return r;
}

}  // namespace

Series SeriesAdd(const FieldSpec& f, const Series& a, const Series& b) {
  return Combine(f, a, b, false);
}

Series SeriesSub(const FieldSpec& f, const Series& a, const Series& b) {
  return Combine(f, a, b, true);
}

Series SeriesMul(const FieldSpec& f, const Series& a0, const Series& b0) {
  Series a = a0, b = b0;
  a.Normalize();
  b.Normalize();
  Series r;
  r.val = a.val + b.val;
  r.prec = std::min(a.val + b.prec, b.val + a.prec);
  const int len = std::max(r.prec - r.val, 0);
  r.c.assign(len, 0);
  for (int i = 0; i < static_cast<int>(a.c.size()) && i < len; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < static_cast<int>(b.c.size()) && i + j < len; ++j) {
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

Series SeriesScale(const FieldSpec& f, const Series& a, Elem c) {
  Series r = a;
  for (Elem& x : r.c) x = f.mul(x, c);
  return r;
}

Series SeriesInverse(const FieldSpec& f, const Series& a0) {
  Series a = a0;
  a.Normalize();
  if (a.c.empty() || a.c[0] == 0) {
    throw std::domain_error("series inverse needs a known nonzero leading coefficient");
  }
  const int len = static_cast<int>(a.c.size());
  Series r{-a.val, -a.val + len, std::vector<Elem>(len, 0)};
  const Elem lead_inv = f.inv(a.c[0]);
  r.c[0] = lead_inv;
  for (int k = 1; k < len; ++k) {
    Elem acc = 0;
    for (int i = 1; i <= k; ++i) acc = f.add(acc, f.mul(a.c[i], r.c[k - i]));
    r.c[k] = f.neg(f.mul(acc, lead_inv));
  }
  return r;
}

Series SeriesTruncate(const Series& a, int prec) {
  if (prec >= a.prec) return a;
  Series r = a;
  r.prec = prec;
  r.c.resize(std::max(prec - r.val, 0));
  return r;
}

Series SeriesPolyEval(const FieldSpec& ext, const Poly& p, const Series& x, int prec) {
  Series acc = Series::Zero(prec);
  for (int i = poly::Degree(p); i >= 0; --i) {
    acc = SeriesMul(ext, acc, x);
    acc = SeriesAdd(ext, acc, Series::Constant(ext, ext.embed(p[i]), prec));
  }
  return acc;
}

}  // namespace ruledcodes
