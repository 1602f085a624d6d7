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


#ifndef RULEDCODES_LOCALITY_H_
#define RULEDCODES_LOCALITY_H_

#include <optional>
#include <string>
#include <vector>

#include "ruledcodes/codes.h"

namespace ruledcodes {

struct RecoverySet {
  int target = 0;
  std::vector<int> helpers;
  std::vector<Elem> coeffs;
};

struct FiberRestriction {
  LinearCode code;
  int rank = 0;
  // Row space equals PRS(a); only possible when rank = a + 1.
  bool equals_prs = false;
};

// Columns over the rational base point with the given index, fiber order.
// Throws std::invalid_argument when the code has no such fiber.
FiberRestriction RestrictToFiber(const LinearCode& code, int base_index);

struct SectionRestriction {
  LinearCode code;
  // Divisor whose curve code contains the restriction.
  Divisor target;
  bool contained = false;
};

// Restriction to the constant section u = fiber (fiber = q for infinity).
// The values there lie in the curve code of beta, or of beta - a delta at
// infinity on a decomposable surface.
SectionRestriction RestrictToSection(const LinearCode& code, const RuledSurface& s,
                                     const Divisor& beta, int fiber);

// Coefficients c_j with F(target) = sum c_j F(helper_j) for every binary
// form F of degree a, where a + 1 = helpers.size(). Fiber coordinates are
// 0..q-1 and q for infinity; infinity reads the degree-a coefficient.
std::vector<Elem> ProjectiveLagrange(const FieldSpec& f, int target, const std::vector<int>& helpers);

// For each column, floor(q / (a + 1)) disjoint helper sets from its fiber.
// Fibers of rank below a + 1 are still recoverable; a fiber whose
// restriction is not inside PRS(a) throws std::domain_error.
std::vector<std::vector<RecoverySet>> RecoverySets(const LinearCode& code);

// Value of the target coordinate from its helpers. `erased` marks unknown
// positions; an erased helper throws std::invalid_argument.
Elem Recover(const FieldSpec& f, const std::vector<Elem>& word, const RecoverySet& rset,
             const std::vector<bool>& erased = {});

// Records {target, helpers[], coefficients[]}, one per set.
std::string RecoverySetsJson(const std::vector<std::vector<RecoverySet>>& sets);

}  // namespace ruledcodes

#endif  // RULEDCODES_LOCALITY_H_
