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

#ifndef RULEDCODES_GF_H_
#define RULEDCODES_GF_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ruledcodes {

// An element of F_{p^n} encoded as the integer sum c_i p^i over its
// coefficient sequence in F_p[z]/(modulus). This is also the text encoding
// used by every matrix export.
using Elem = std::uint32_t;

// Fields are desk-scale; every table is indexed by element encodings.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite field F_{p^n} = F_p[z]/(f) with f the lexicographically least monic
// irreducible polynomial of degree n (compared from the top coefficient
// down, i.e. by integer encoding).
//
// A field created by Create() is its own base field k = F_q. A field created
// by Extend(d) is F_{q^d} represented with a single absolute modulus of degree
// m*d, together with the embedding F_q -> F_{q^d}. Frobenius always means
// x -> x^q for the declared base q.
//
// Instances are immutable once constructed. The only mutable state is the
// extension cache, which is guarded by a mutex.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static std::shared_ptr<const FieldSpec> Create(int p, int m);

  // F_{q^d} over this field. Only valid on base fields.
  std::shared_ptr<const FieldSpec> Extend(int d) const;

  int characteristic() const { return p_; }
  // Absolute degree over F_p.
  int degree() const { return n_; }
  Elem size() const { return size_; }
  // Degree over the base field (1 for base fields).
  int relative_degree() const { return n_ / base_degree_; }
  // Cardinality q of the base field.
  Elem base_size() const { return base_size_; }
  bool is_base() const { return base_ == nullptr; }
  // The base field; *this for base fields.
  const FieldSpec& base() const { return base_ ? *base_ : *this; }
  std::shared_ptr<const FieldSpec> base_ptr() const;
  const std::vector<int>& modulus() const { return modulus_; }
  Elem primitive() const { return exp_[1]; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  bool in_range(Elem x) const { return x < size_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  // x -> x^(q^times).
  Elem frobenius(Elem x, int times = 1) const;
  std::vector<Elem> frobenius_orbit(Elem x) const;
  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem x) const;

  // Embedding of the base field; identity on base fields.
  Elem embed(Elem base_element) const;
  std::optional<Elem> restrict_to_base(Elem x) const;
  // Tr_{F_{q^d}/F_q}, returned as a base-field element.
  Elem trace_to_base(Elem x) const;
  // F_q-basis 1, g, ..., g^(d-1) of this field, g the primitive element.
  std::vector<Elem> base_basis() const;

  std::vector<int> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const int> coeffs) const;

  std::string describe() const;

 private:
  FieldSpec() = default;
  void Build(int p, int n, std::vector<int> modulus);
  void BuildEmbedding();

  int p_ = 0;
  int n_ = 0;
  Elem size_ = 0;
  int base_degree_ = 0;
  Elem base_size_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;                // size 2(size-1)
  std::vector<std::uint32_t> log_;       // log_[0] unused
  std::vector<std::int64_t> zech_;       // log(1+g^i), -1 when 1+g^i == 0
  std::shared_ptr<const FieldSpec> base_;
  std::vector<Elem> embedding_;          // base element -> element
  std::unordered_map<Elem, Elem> restriction_;

  mutable std::mutex cache_mu_;
  mutable std::map<int, std::weak_ptr<const FieldSpec>> extension_cache_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Value-semantics wrapper carrying its field, for callers that want operator
// syntax. Mixing elements of different fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr spec, Elem value);

  const FieldSpec& spec() const { return *spec_; }
  const FieldPtr& spec_ptr() const { return spec_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;
  FieldElement frobenius(int times = 1) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void CheckSame(const FieldElement& o) const;
  FieldPtr spec_;
  Elem value_;
};

// Polynomials over F_p as coefficient vectors (low degree first); used to
// select moduli.
bool IsIrreducibleOverPrime(const std::vector<int>& poly, int p);
bool IsPrime(long long n);

}  // namespace ruledcodes

#endif  // RULEDCODES_GF_H_
