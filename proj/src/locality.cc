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


#include "ruledcodes/locality.h"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ruledcodes {

namespace {

std::vector<int> FiberColumns(const LinearCode& code, int base_index) {
  std::vector<int> cols;
  for (size_t j = 0; j < code.points().size(); ++j) {
    if (code.points()[j].base_index == base_index) cols.push_back(static_cast<int>(j));
  }
  std::sort(cols.begin(), cols.end(), [&](int x, int y) {
    return code.points()[x].fiber < code.points()[y].fiber;
  });
  return cols;
}

}  // namespace

FiberRestriction RestrictToFiber(const LinearCode& code, int base_index) {
  const std::vector<int> cols = FiberColumns(code, base_index);
  const int q = static_cast<int>(code.field().size());
  if (static_cast<int>(cols.size()) != q + 1) {
    throw std::invalid_argument("no complete fiber over base point " + std::to_string(base_index));
  }
  std::vector<CodePoint> pts;
  for (int c : cols) pts.push_back(code.points()[c]);
  LinearCode r(code.field_ptr(), code.generator().select_columns(cols), pts, code.info());
  const int a = static_cast<int>(code.info().a);
  bool equals = false;
  if (r.k() == a + 1 && a <= q) {
    equals = RowSpaceEqual(code.field(), r.generator(), BuildPrs(code.field_ptr(), a).generator());
  }
  const int rank = r.k();
  return {std::move(r), rank, equals};
}

SectionRestriction RestrictToSection(const LinearCode& code, const RuledSurface& s,
                                     const Divisor& beta, int fiber) {
  const int q = static_cast<int>(code.field().size());
  if (fiber < 0 || fiber > q) throw std::invalid_argument("section fiber coordinate out of range");
  std::vector<int> cols;
  std::vector<CodePoint> pts;
  for (size_t j = 0; j < code.points().size(); ++j) {
    if (code.points()[j].fiber == fiber && code.points()[j].base_index >= 0) {
      cols.push_back(static_cast<int>(j));
      pts.push_back(code.points()[j]);
    }
  }
  if (static_cast<int>(cols.size()) != s.curve().N()) {
    throw std::invalid_argument("section does not meet every fiber in a code column");
  }
  Divisor target = beta;
  if (fiber == q && s.variant() == SurfaceVariant::kDecomposable) {
    target = beta - s.delta() * static_cast<int>(code.info().a);
  }
  LinearCode r(code.field_ptr(), code.generator().select_columns(cols), pts, code.info());
  bool contained = true;
  if (r.k() > 0) {
    const std::vector<CurveFunction> basis = RiemannRochBasis(s.curve(), target);
    std::vector<ClosedPoint> base;
    for (const CodePoint& p : pts) base.push_back(p.base);
    contained = RowSpaceContains(code.field(), EvaluationMatrix(s.curve(), basis, base),
                                 r.generator());
  }
  return {std::move(r), std::move(target), contained};
}

std::vector<Elem> ProjectiveLagrange(const FieldSpec& f, int target,
                                     const std::vector<int>& helpers) {
  const int q = static_cast<int>(f.size());
  if (std::find(helpers.begin(), helpers.end(), target) != helpers.end()) {
    throw std::invalid_argument("target among its helpers");
  }
  std::vector<Elem> affine;
  int inf_pos = -1;
  for (size_t j = 0; j < helpers.size(); ++j) {
    if (helpers[j] == q) {
      inf_pos = static_cast<int>(j);
    } else {
      affine.push_back(static_cast<Elem>(helpers[j]));
    }
  }
  std::vector<Elem> out(helpers.size(), 0);
  // Denominator prod_{l != j}(u_j - u_l) over the affine nodes.
  auto denom = [&](size_t j) {
    Elem d = 1;
    for (size_t l = 0; l < affine.size(); ++l) {
      if (l != j) d = f.mul(d, f.sub(affine[j], affine[l]));
    }
    return d;
  };
  auto affine_index = [&](size_t j) { return inf_pos >= 0 && static_cast<int>(j) > inf_pos ? j - 1 : j; };

  if (target == q) {
    // Degree-a coefficient of the interpolating polynomial.
    for (size_t j = 0; j < helpers.size(); ++j) out[j] = f.inv(denom(affine_index(j)));
    return out;
  }
  const Elem t = static_cast<Elem>(target);
  for (size_t j = 0; j < helpers.size(); ++j) {
    if (static_cast<int>(j) == inf_pos) {
      Elem v = 1;
      for (Elem u : affine) v = f.mul(v, f.sub(t, u));
      out[j] = v;
      continue;
    }
    const size_t aj = affine_index(j);
    Elem num = 1;
    for (size_t l = 0; l < affine.size(); ++l) {
      if (l != aj) num = f.mul(num, f.sub(t, affine[l]));
    }
    out[j] = f.div(num, denom(aj));
  }
  return out;
}

std::vector<std::vector<RecoverySet>> RecoverySets(const LinearCode& code) {
  const int q = static_cast<int>(code.field().size());
  const int a = static_cast<int>(code.info().a);
  std::vector<std::vector<RecoverySet>> out(code.n());
  std::vector<int> bases;
  for (const CodePoint& p : code.points()) {
    if (p.base_index < 0 || p.fiber < 0) throw std::invalid_argument("code is not a surface code");
    if (std::find(bases.begin(), bases.end(), p.base_index) == bases.end()) {
      bases.push_back(p.base_index);
    }
  }
  if (a < 0 || a > q) throw std::invalid_argument("fiber degree out of range");
  const LinearCode prs = BuildPrs(code.field_ptr(), a);
  const int sets = q / (a + 1);
  for (int b : bases) {
    const FiberRestriction fr = RestrictToFiber(code, b);
    if (!fr.equals_prs && !RowSpaceContains(code.field(), prs.generator(), fr.code.generator())) {
      throw std::domain_error("fiber over base point " + std::to_string(b) +
                              " is not a subcode of PRS(" + std::to_string(a) + ")");
    }
    const std::vector<int> cols = FiberColumns(code, b);
    for (int target = 0; target <= q; ++target) {
      std::vector<int> others;
      for (int u = 0; u <= q; ++u) {
        if (u != target) others.push_back(u);
      }
      for (int s = 0; s < sets; ++s) {
        std::vector<int> fibers(others.begin() + s * (a + 1), others.begin() + (s + 1) * (a + 1));
        RecoverySet r;
        r.target = cols[target];
        for (int u : fibers) r.helpers.push_back(cols[u]);
        r.coeffs = ProjectiveLagrange(code.field(), target, fibers);
        out[cols[target]].push_back(std::move(r));
      }
    }
  }
  return out;
}

Elem Recover(const FieldSpec& f, const std::vector<Elem>& word, const RecoverySet& rset,
             const std::vector<bool>& erased) {
  Elem acc = 0;
  for (size_t j = 0; j < rset.helpers.size(); ++j) {
    const int h = rset.helpers[j];
    if (h < 0 || h >= static_cast<int>(word.size())) throw std::invalid_argument("helper out of range");
    if (!erased.empty() && erased[h]) {
      throw std::invalid_argument("helper position " + std::to_string(h) + " is erased");
    }
    acc = f.add(acc, f.mul(rset.coeffs[j], word[h]));
  }
  return acc;
}

std::string RecoverySetsJson(const std::vector<std::vector<RecoverySet>>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& per_column : sets) {
    for (const RecoverySet& r : per_column) {
      out.push_back({{"target", r.target}, {"helpers", r.helpers}, {"coefficients", r.coeffs}});
    }
  }
  return out.dump(1);
}

}  // namespace ruledcodes
