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

#include "ruledcodes/gf.h"

#include <numeric>
#include <sstream>

namespace ruledcodes {

namespace {

using IntPoly = std::vector<int>;

int Mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void Trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int ModInverse(int a, int p) {
  // p is prime; Fermat.
  long long result = 1, base = Mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

IntPoly PolyMod(IntPoly a, const IntPoly& m, int p) {
  Trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = ModInverse(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = Mod(a[i + shift] - static_cast<long long>(factor) * m[i], p);
    }
    Trim(a);
  }
  return a;
}

IntPoly PolyMulMod(const IntPoly& a, const IntPoly& b, const IntPoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
  }
  return PolyMod(std::move(r), m, p);
}

IntPoly PolyGcd(IntPoly a, IntPoly b, int p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    IntPoly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m.
IntPoly FrobeniusPowerOfX(const IntPoly& m, int p, int k) {
  IntPoly acc = PolyMod({0, 1}, m, p);
  for (int step = 0; step < k; ++step) {
    IntPoly result = {1};
    IntPoly base = acc;
    for (int e = p; e > 0; e >>= 1) {
      if (e & 1) result = PolyMulMod(result, base, m, p);
      base = PolyMulMod(base, base, m, p);
    }
    acc = std::move(result);
  }
  return acc;
}

std::vector<long long> PrimeFactors(long long n) {
  std::vector<long long> out;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool IsPrime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// Rabin's test.
bool IsIrreducibleOverPrime(const std::vector<int>& poly, int p) {
  IntPoly f = poly;
  for (int& c : f) c = Mod(c, p);
  Trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  IntPoly x = {0, 1};
  IntPoly xpn = FrobeniusPowerOfX(f, p, n);
  IntPoly diff = xpn;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = Mod(diff[1] - 1, p);
  Trim(diff);
  if (!diff.empty()) return false;
  for (long long r : PrimeFactors(n)) {
    IntPoly h = FrobeniusPowerOfX(f, p, n / static_cast<int>(r));
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = Mod(h[1] - 1, p);
    Trim(h);
    IntPoly g = PolyGcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

namespace {

IntPoly LeastIrreducible(int p, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    IntPoly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t v = low;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (IsIrreducibleOverPrime(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::Create(int p, int m) {
  if (!IsPrime(p)) {
    throw std::invalid_argument("field_create: p=" + std::to_string(p) + " is not prime");
  }
  if (m < 1) throw std::invalid_argument("field_create: degree must be >= 1");
  std::shared_ptr<FieldSpec> spec(new FieldSpec());
  IntPoly modulus = m == 1 ? IntPoly{0, 1} : LeastIrreducible(p, m);
  spec->Build(p, m, std::move(modulus));
  spec->base_degree_ = m;
  spec->base_size_ = spec->size_;
  return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::Extend(int d) const {
  if (!is_base()) throw std::invalid_argument("extend: only base fields can be extended");
  if (d < 1) throw std::invalid_argument("extend: degree must be >= 1");
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (auto it = extension_cache_.find(d); it != extension_cache_.end()) {
    if (auto cached = it->second.lock()) return cached;
  }
  std::shared_ptr<FieldSpec> ext(new FieldSpec());
  const int n = n_ * d;
  IntPoly modulus = n == 1 ? IntPoly{0, 1} : LeastIrreducible(p_, n);
  ext->Build(p_, n, std::move(modulus));
  ext->base_ = shared_from_this();
  ext->base_degree_ = n_;
  ext->base_size_ = size_;
  ext->BuildEmbedding();
  extension_cache_[d] = ext;
  return ext;
}

std::shared_ptr<const FieldSpec> FieldSpec::base_ptr() const {
  return base_ ? base_ : shared_from_this();
}

void FieldSpec::Build(int p, int n, std::vector<int> modulus) {
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > kMaxFieldSize) {
      throw CapExceededError("field size " + std::to_string(p) + "^" + std::to_string(n) +
                             " exceeds the desk-scale cap 2^20");
    }
  }
  p_ = p;
  n_ = n;
  size_ = static_cast<Elem>(size);
  modulus_ = std::move(modulus);

  auto to_poly = [&](Elem x) {
    IntPoly c(n, 0);
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(x % p);
      x /= p;
    }
    Trim(c);
    return c;
  };
  auto from_poly = [&](const IntPoly& c) {
    Elem x = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) x = x * p + c[i];
    return x;
  };
  auto slow_mul = [&](Elem a, Elem b) {
    return from_poly(PolyMulMod(to_poly(a), to_poly(b), modulus_, p));
  };
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t group = size_ - 1;
  const std::vector<long long> factors = PrimeFactors(static_cast<long long>(group));
  Elem generator = 1;
  if (group > 1) {
    for (Elem g = 2; g < size_; ++g) {
      bool primitive = true;
      for (long long r : factors) {
        if (slow_pow(g, group / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
  }

  exp_.assign(2 * group, 0);
  log_.assign(size_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    exp_[i + group] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, generator);
  }

  zech_.assign(group, -1);
  for (std::uint64_t i = 0; i < group; ++i) {
    const Elem x = exp_[i];
    const Elem c0 = x % p;
    const Elem y = x - c0 + (c0 + 1) % p;
    zech_[i] = y == 0 ? -1 : static_cast<std::int64_t>(log_[y]);
  }
}

void FieldSpec::BuildEmbedding() {
  const FieldSpec& b = *base_;
  embedding_.assign(b.size_, 0);
  if (b.n_ == 1) {
    for (Elem c = 0; c < b.size_; ++c) embedding_[c] = c;
  } else {
    // Least root of the base modulus in this field.
    std::optional<Elem> root;
    for (Elem r = 0; r < size_ && !root; ++r) {
      Elem acc = 0;
      for (int i = static_cast<int>(b.modulus_.size()) - 1; i >= 0; --i) {
        acc = add(mul(acc, r), static_cast<Elem>(b.modulus_[i]));
      }
      if (acc == 0) root = r;
    }
    if (!root) throw std::logic_error("extend: base modulus has no root");
    for (Elem x = 0; x < b.size_; ++x) {
      Elem acc = 0;
      Elem power = 1;
      Elem v = x;
      for (int i = 0; i < b.n_; ++i) {
        acc = add(acc, mul(static_cast<Elem>(v % p_), power));
        power = mul(power, *root);
        v /= p_;
      }
      embedding_[x] = acc;
    }
  }
  restriction_.clear();
  for (Elem x = 0; x < b.size_; ++x) restriction_[embedding_[x]] = x;
}

Elem FieldSpec::from_int(long long v) const { return static_cast<Elem>(Mod(v, p_)); }

Elem FieldSpec::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return (a + b) % static_cast<Elem>(p_);
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t group = size_ - 1;
  const std::uint64_t la = log_[a];
  const std::uint64_t diff = (log_[b] + group - la) % group;
  const std::int64_t z = zech_[diff];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint64_t>(z)) % group];
}

Elem FieldSpec::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  if (n_ == 1) return static_cast<Elem>(p_) - a;
  return mul(a, static_cast<Elem>(p_ - 1));
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  const std::uint64_t group = size_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem FieldSpec::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("negative power of zero");
  }
  const long long group = static_cast<long long>(size_) - 1;
  long long r = (static_cast<long long>(log_[a]) * (e % group)) % group;
  if (r < 0) r += group;
  return exp_[r];
}

Elem FieldSpec::frobenius(Elem x, int times) const {
  if (x == 0) return 0;
  const std::uint64_t group = size_ - 1;
  std::uint64_t l = log_[x];
  for (int i = 0; i < times; ++i) l = (l * base_size_) % group;
  return exp_[l];
}

std::vector<Elem> FieldSpec::frobenius_orbit(Elem x) const {
  std::vector<Elem> orbit{x};
  for (Elem y = frobenius(x); y != x; y = frobenius(y)) orbit.push_back(y);
  return orbit;
}

std::uint64_t FieldSpec::order(Elem x) const {
  if (x == 0) throw std::domain_error("order of zero");
  const std::uint64_t group = size_ - 1;
  return group / std::gcd<std::uint64_t>(log_[x], group);
}

Elem FieldSpec::embed(Elem base_element) const {
  if (!base_) return base_element;
  return embedding_.at(base_element);
}

std::optional<Elem> FieldSpec::restrict_to_base(Elem x) const {
  if (!base_) return x;
  auto it = restriction_.find(x);
  if (it == restriction_.end()) return std::nullopt;
  return it->second;
}

Elem FieldSpec::trace_to_base(Elem x) const {
  Elem acc = 0;
  Elem y = x;
  for (int i = 0; i < relative_degree(); ++i) {
    acc = add(acc, y);
    y = frobenius(y);
  }
  auto r = restrict_to_base(acc);
  if (!r) throw std::logic_error("trace left the base field");
  return *r;
}

std::vector<Elem> FieldSpec::base_basis() const {
  std::vector<Elem> basis;
  Elem g = primitive();
  Elem cur = 1;
  for (int i = 0; i < relative_degree(); ++i) {
    basis.push_back(cur);
    cur = mul(cur, g);
  }
  return basis;
}

std::vector<int> FieldSpec::coefficients(Elem x) const {
  std::vector<int> c(n_, 0);
  for (int i = 0; i < n_; ++i) {
    c[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return c;
}

Elem FieldSpec::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > n_) {
    throw std::invalid_argument("too many coefficients for the field degree");
  }
  Elem x = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) x = x * p_ + Mod(coeffs[i], p_);
  return x;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << n_ << ")";
  if (base_) os << " over GF(" << p_ << "^" << base_degree_ << ")";
  return os.str();
}

FieldElement::FieldElement(FieldPtr spec, Elem value) : spec_(std::move(spec)), value_(value) {
  if (!spec_) throw std::invalid_argument("field element without a field");
  if (!spec_->in_range(value_)) throw std::invalid_argument("element encoding out of range");
}

void FieldElement::CheckSame(const FieldElement& o) const {
  if (spec_ != o.spec_) throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  CheckSame(o);
  return {spec_, spec_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  CheckSame(o);
  return {spec_, spec_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  CheckSame(o);
  return {spec_, spec_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  CheckSame(o);
  return {spec_, spec_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {spec_, spec_->inv(value_)}; }
FieldElement FieldElement::pow(long long e) const { return {spec_, spec_->pow(value_, e)}; }
FieldElement FieldElement::frobenius(int times) const {
  return {spec_, spec_->frobenius(value_, times)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return spec_ == o.spec_ && value_ == o.value_;
}

}  // namespace ruledcodes
