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

#ifndef RULEDCODES_CODES_H_
#define RULEDCODES_CODES_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "ruledcodes/curve.h"
#include "ruledcodes/linalg.h"
#include "ruledcodes/rrspace.h"
#include "ruledcodes/surface.h"

namespace ruledcodes {

// Column label. base_index < 0 means the code lives on P^1 alone; fiber < 0
// means it lives on the base curve alone. Fiber q stands for infinity.
struct CodePoint {
  int base_index = -1;
  ClosedPoint base;
  int fiber = -1;
};

struct CodeInfo {
  std::string family;
  long long a = 0;
  long long b = 0;
  int twist = 0;
  std::string beta;
  // Dimension of the space of sections before evaluation.
  int section_dim = 0;
  // Rank of the multiplicity conditions, elm codes only.
  int condition_rank = 0;
};

class LinearCode {
 public:
  // Keeps a maximal independent subset of the given rows.
  LinearCode(FieldPtr field, const Matrix& rows, std::vector<CodePoint> points, CodeInfo info);

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Matrix& generator() const { return generator_; }
  const std::vector<CodePoint>& points() const { return points_; }
  const CodeInfo& info() const { return info_; }
  int n() const { return generator_.cols(); }
  int k() const { return generator_.rows(); }
  std::vector<Elem> Encode(const std::vector<Elem>& message) const;

 private:
  FieldPtr field_;
  Matrix generator_;
  std::vector<CodePoint> points_;
  CodeInfo info_;
};

// Values of each function at each point, one row per function.
Matrix EvaluationMatrix(const Curve& c, const std::vector<CurveFunction>& fs,
                        const std::vector<ClosedPoint>& points);

LinearCode BuildPrs(FieldPtr field, int a);
LinearCode BuildCurveCode(const Curve& c, const Divisor& beta);
LinearCode BuildDecomposableCode(const RuledSurface& s, int a, const Divisor& beta);
LinearCode BuildElmCode(const RuledSurface& s, int a, const Divisor& beta);
// Tensor product PRS(a) x C(beta), columns in surface point order.
LinearCode BuildProductCode(const Curve& c, int a, const Divisor& beta);
// Dispatches on the surface variant.
LinearCode BuildSurfaceCode(const RuledSurface& s, int a, const Divisor& beta);

struct UnisecantCode {
  LinearCode code;
  long long s_a = 0;
  // False when s_a is only a certified lower bound.
  bool s_a_exact = false;
  long long k_lower = 0;
  long long d_lower = 0;
};
// a = 1 code of O(1) + pi^* beta. `segre_dmax` bounds the function search
// that certifies s_a on elm surfaces.
UnisecantCode BuildUnisecant(const RuledSurface& s, const Divisor& beta, int segre_dmax = 1);

// "k n q" then k rows of integer encodings.
void WriteGenerator(std::ostream& os, const LinearCode& code);
// One line per column: index, base index, degree, x, y, fiber.
void WritePointIndex(std::ostream& os, const LinearCode& code);
// Parses the generator format back; returns (q, matrix).
std::pair<Elem, Matrix> ReadGenerator(std::istream& is);

}  // namespace ruledcodes

#endif  // RULEDCODES_CODES_H_
