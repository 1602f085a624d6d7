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


#ifndef RULEDCODES_ANALYSIS_H_
#define RULEDCODES_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ruledcodes/codes.h"

namespace ruledcodes {

// Parameter bounds for a code family. Preconditions become flags so that
// sweeps can tabulate invalid regions.
struct BoundReport {
  std::string family;
  long long n = 0;
  long long k_lower = 0;
  long long d_lower = 0;
  std::map<std::string, bool> flags;
  // The optimizing parameter of the piecewise expression, e.g. "m=1".
  std::string achieving;

  bool valid() const;
};

// Sections vanishing on a degree-d curve class (elm surfaces).
BoundReport BoundFamcodes1(long long q, long long n_points, long long g, long long d, long long a,
                           long long b);
// Decomposable surfaces with deg delta = e.
BoundReport BoundFamcodes2(long long q, long long n_points, long long g, long long e, long long a,
                           long long b);
// Throws std::invalid_argument when deg_e and s_a differ in parity.
BoundReport BoundUnisecant(long long q, long long n_points, long long g, long long deg_e,
                           long long s_a, long long deg_l);

struct ProfileEntry {
  long long t = 0;
  long long max_points = 0;
};

struct SectionProfile {
  std::vector<ProfileEntry> entries;
  long long max_points = 0;
  long long argmax = 0;
  // max_points + d_lower == n for the matching bound.
  bool consistent = false;
  long long n = 0;
  long long d_lower = 0;
};

// family 1: (q, N, g, d, a, b) with n in [0, min(a, b/d)].
// family 2: (q, N, g, e, a, b) with t in [0, b].
SectionProfile SectionCountProfile(int family, long long q, long long n_points, long long g,
                                   long long twist, long long a, long long b);

struct ExactResult {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<Elem> witness;  // a minimum-weight codeword
  std::uint64_t codewords_checked = 0;
};

// Exhaustive minimum distance over all nonzero messages up to scaling.
// Throws CapExceededError when q^k exceeds the cap. Worker count follows
// RULEDCODES_THREADS when set, hardware concurrency otherwise.
ExactResult ExactParameters(const LinearCode& code, std::uint64_t cap = 10'000'000);

struct GriesmerResult {
  bool ok = false;
  long long sum = 0;
};
GriesmerResult GriesmerCheck(long long n, long long k, long long d, long long q);
bool SingletonCheck(long long n, long long k, long long d);

int ThreadCount();

}  // namespace ruledcodes

#endif  // RULEDCODES_ANALYSIS_H_
