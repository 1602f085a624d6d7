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


#include "ruledcodes/analysis.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ruledcodes {

namespace {

long long FloorDiv(long long a, long long b) {
  long long r = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --r;
  return r;
}

long long CeilDiv(long long a, long long b) { return -FloorDiv(-a, b); }

}  // namespace

bool BoundReport::valid() const {
  return std::all_of(flags.begin(), flags.end(), [](const auto& kv) { return kv.second; });
}

BoundReport BoundFamcodes1(long long q, long long n_points, long long g, long long d, long long a,
                           long long b) {
  BoundReport r;
  r.family = "famcodes1";
  r.n = (q + 1) * n_points;
  const long long m = d > 0 ? std::min(a, FloorDiv(b, d)) : a;
  r.flags["d_positive"] = d >= 1;
  r.flags["b_range"] = 0 <= b && b < n_points;
  r.flags["m_range"] = 0 <= m && m < q + 1;
  r.flags["ad_below_2(b+1-g)"] = a * d < 2 * (b + 1 - g);
  r.k_lower = (a + 1) * (b + 1 - g) - d * a * (a + 1) / 2;
  r.d_lower = std::min((q + 1) * (n_points - b), (q + 1 - m) * (n_points - b + d * m));
  r.achieving = "m=" + std::to_string(m);
  return r;
}

BoundReport BoundFamcodes2(long long q, long long n_points, long long g, long long e, long long a,
                           long long b) {
  BoundReport r;
  r.family = "famcodes2";
  r.n = (q + 1) * n_points;
  r.flags["e_nonnegative"] = e >= 0;
  r.flags["a_range"] = 0 <= a && a <= q;
  r.flags["b_range"] = 0 <= b && b < n_points;
  r.flags["ae_below_2(b+1-g)"] = a * e < 2 * (b + 1 - g);
  r.k_lower = (a + 1) * (b + 1 - g) - e * a * (a + 1) / 2;
  if (a == 0) {
    r.d_lower = (q + 1) * (n_points - b);
    r.achieving = "a=0";
  } else if (b < a * e) {
    const long long f = FloorDiv(b, e);
    r.d_lower = std::min((q + 1 - f) * (n_points - b + f * e), q * (n_points - b));
    r.achieving = "b<ae, floor(b/e)=" + std::to_string(f);
  } else {
    r.d_lower = std::min((q + 1 - a) * (n_points - b + (a - 1) * e), q * (n_points - b));
    r.achieving = "b>=ae";
  }
  return r;
}

BoundReport BoundUnisecant(long long q, long long n_points, long long g, long long deg_e,
                           long long s_a, long long deg_l) {
  if (((deg_e - s_a) % 2 + 2) % 2 != 0) {
    throw std::invalid_argument("deg E and s_a must have the same parity");
  }
  BoundReport r;
  r.family = "unisecant";
  r.n = (q + 1) * n_points;
  r.k_lower = deg_e + 2 * (deg_l + 1 - g);
  r.d_lower = q * (n_points - (deg_e - s_a) / 2 - deg_l);
  r.flags["k_rhs_positive"] = r.k_lower > 0;
  r.flags["d_rhs_positive"] = r.d_lower > 0;
  r.achieving = "s_a=" + std::to_string(s_a);
  return r;
}

SectionProfile SectionCountProfile(int family, long long q, long long n_points, long long g,
                                   long long twist, long long a, long long b) {
  SectionProfile p;
  BoundReport bound;
  if (family == 1) {
    bound = BoundFamcodes1(q, n_points, g, twist, a, b);
    const long long top = twist > 0 ? std::min(a, FloorDiv(b, twist)) : a;
    for (long long n = 0; n <= top; ++n) {
      p.entries.push_back({n, n * n_points + (q + 1 - n) * (b - twist * n)});
    }
  } else if (family == 2) {
    bound = BoundFamcodes2(q, n_points, g, twist, a, b);
    for (long long t = 0; t <= b; ++t) {
      long long v;
      if (t > b - a * twist) {
        v = q * t + n_points + FloorDiv(b - t, twist) * (n_points - t);
      } else {
        v = (q + 1 - a) * t + a * n_points;
      }
      p.entries.push_back({t, v});
    }
  } else {
    throw std::invalid_argument("family must be 1 or 2");
  }
  p.n = bound.n;
  p.d_lower = bound.d_lower;
  p.max_points = std::numeric_limits<long long>::min();
  for (const ProfileEntry& e : p.entries) {
    if (e.max_points > p.max_points) {
      p.max_points = e.max_points;
      p.argmax = e.t;
    }
  }
  p.consistent = !p.entries.empty() && p.max_points + p.d_lower == p.n;
  return p;
}

int ThreadCount() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("RULEDCODES_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, hw * 4);
  }
  return hw;
}

namespace {

struct Job {
  int lead;        // index of the leading coordinate, fixed to 1
  Elem next;       // value of coordinate lead+1, when it exists
  bool has_next;
};

struct Best {
  int weight = std::numeric_limits<int>::max();
  size_t job = 0;
  std::uint64_t ordinal = 0;
  std::vector<Elem> word;
};

bool Better(const Best& a, const Best& b) {
  return std::tie(a.weight, a.job, a.ordinal) < std::tie(b.weight, b.job, b.ordinal);
}

class Enumerator {
 public:
  Enumerator(const LinearCode& code) : code_(code), f_(code.field()), q_(f_.size()) {
    if (q_ <= 256) {
      add_.resize(static_cast<size_t>(q_) * q_);
      mul_.resize(static_cast<size_t>(q_) * q_);
      for (Elem x = 0; x < q_; ++x) {
        for (Elem y = 0; y < q_; ++y) {
          add_[x * q_ + y] = f_.add(x, y);
          mul_[x * q_ + y] = f_.mul(x, y);
        }
      }
    }
  }

  Elem Add(Elem x, Elem y) const { return add_.empty() ? f_.add(x, y) : add_[x * q_ + y]; }
  Elem Mul(Elem x, Elem y) const { return mul_.empty() ? f_.mul(x, y) : mul_[x * q_ + y]; }

  // Adds s * row r to word.
  void Axpy(std::vector<Elem>& word, int r, Elem s) const {
    if (s == 0) return;
    const auto row = code_.generator().row(r);
    for (size_t j = 0; j < word.size(); ++j) word[j] = Add(word[j], Mul(s, row[j]));
  }

  Best Run(const Job& job, size_t job_index, std::uint64_t* count) const {
    const int k = code_.k();
    const int n = code_.n();
    std::vector<Elem> word(n, 0);
    Axpy(word, job.lead, 1);
    int free_start = job.lead + 1;
    if (job.has_next) {
      Axpy(word, job.lead + 1, job.next);
      free_start = job.lead + 2;
    }
    std::vector<Elem> digits(k, 0);
    Best best;
    best.job = job_index;
    std::uint64_t ordinal = 0;
    for (;;) {
      int w = 0;
      for (Elem v : word) w += v != 0;
      if (w < best.weight) {
        best.weight = w;
        best.ordinal = ordinal;
        best.word = word;
      }
      ++ordinal;
      // Odometer over coordinates free_start..k-1, last coordinate fastest.
      int pos = k - 1;
      while (pos >= free_start) {
        const Elem old = digits[pos];
        const Elem nxt = old + 1 == q_ ? 0 : old + 1;
        digits[pos] = nxt;
        Axpy(word, pos, f_.sub(nxt, old));
        if (nxt != 0) break;
        --pos;
      }
      if (pos < free_start) break;
    }
    *count = ordinal;
    return best;
  }

 private:
  const LinearCode& code_;
  const FieldSpec& f_;
  Elem q_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
};

}  // namespace

ExactResult ExactParameters(const LinearCode& code, std::uint64_t cap) {
  ExactResult out;
  out.n = code.n();
  out.k = code.k();
  const Elem q = code.field().size();
  long double total = 1;
  for (int i = 0; i < out.k; ++i) total *= q;
  if (total > static_cast<long double>(cap)) {
    throw CapExceededError("q^k = " + std::to_string(q) + "^" + std::to_string(out.k) +
                           " exceeds the exhaustive cap of " + std::to_string(cap) +
                           "; only the designed lower bound is available");
  }
  if (out.k == 0) {
    out.d = 0;
    return out;
  }

  std::vector<Job> jobs;
  for (int lead = 0; lead < out.k; ++lead) {
    if (lead + 1 < out.k) {
      for (Elem v = 0; v < q; ++v) jobs.push_back({lead, v, true});
    } else {
      jobs.push_back({lead, 0, false});
    }
  }
  const Enumerator en(code);
  std::vector<Best> results(jobs.size());
  std::vector<std::uint64_t> counts(jobs.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = en.Run(jobs[i], i, &counts[i]);
    }
  };
  const int threads = std::max(1, std::min<int>(ThreadCount(), static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Best best;
  for (const Best& b : results) {
    if (Better(b, best)) best = b;
  }
  for (std::uint64_t c : counts) out.codewords_checked += c;
  out.d = best.weight;
  out.witness = std::move(best.word);
  return out;
}

GriesmerResult GriesmerCheck(long long n, long long k, long long d, long long q) {
  GriesmerResult r;
  long long qi = 1;
  for (long long i = 0; i < k; ++i) {
    if (qi > d) {
      // Every remaining term is ceil(d / q^i) = 1 (or 0 when d = 0).
      r.sum += (k - i) * (d > 0 ? 1 : 0);
      break;
    }
    r.sum += CeilDiv(d, qi);
    qi *= q;
  }
  r.ok = n >= r.sum;
  return r;
}

bool SingletonCheck(long long n, long long k, long long d) { return k + d <= n + 1; }

}  // namespace ruledcodes
