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

#include "ruledcodes/codes.h"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "ruledcodes/analysis.h"

namespace ruledcodes {

LinearCode::LinearCode(FieldPtr field, const Matrix& rows, std::vector<CodePoint> points,
                       CodeInfo info)
    : field_(std::move(field)), points_(std::move(points)), info_(std::move(info)) {
  if (rows.rows() > 0 && rows.cols() != static_cast<int>(points_.size())) {
    throw std::invalid_argument("generator width does not match the point index");
  }
  const std::vector<int> keep = IndependentRows(*field_, rows);
  generator_ = rows.select_rows(keep);
  if (generator_.rows() == 0) generator_ = Matrix(0, static_cast<int>(points_.size()));
}

std::vector<Elem> LinearCode::Encode(const std::vector<Elem>& message) const {
  return VectorTimesMatrix(*field_, message, generator_);
}

Matrix EvaluationMatrix(const Curve& c, const std::vector<CurveFunction>& fs,
                        const std::vector<ClosedPoint>& points) {
  Matrix m(static_cast<int>(fs.size()), static_cast<int>(points.size()));
  for (size_t i = 0; i < fs.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = Evaluate(c, fs[i], points[j]);
    }
  }
  return m;
}

namespace {

void CheckBeta(const Curve& c, const Divisor& beta, const char* what) {
  for (const auto& [p, n] : beta.terms()) {
    if (p.degree == 1) {
      throw std::invalid_argument(std::string(what) + " support contains a rational point");
    }
    if (!c.IsValid(p)) throw std::invalid_argument(std::string(what) + " point is not on the curve");
  }
}

std::vector<CodePoint> SurfaceColumns(const RuledSurface& s) {
  std::vector<CodePoint> cols;
  for (const SurfacePoint& p : s.RationalPoints()) {
    cols.push_back({p.base_index, p.base, static_cast<int>(p.fiber)});
  }
  return cols;
}

// Row of a section sum_i f_i u^i: values[i][base] = f_i(base point).
std::vector<Elem> SectionRow(const FieldSpec& k, const std::vector<std::vector<Elem>>& values,
                             int num_base) {
  const int a = static_cast<int>(values.size()) - 1;
  const Elem q = k.size();
  std::vector<Elem> row;
  row.reserve(static_cast<size_t>(num_base) * (q + 1));
  for (int p = 0; p < num_base; ++p) {
    for (Elem u = 0; u < q; ++u) {
      Elem acc = 0;
      for (int i = a; i >= 0; --i) acc = k.add(k.mul(acc, u), values[i][p]);
      row.push_back(acc);
    }
    row.push_back(values[a][p]);
  }
  return row;
}

}  // namespace

LinearCode BuildPrs(FieldPtr field, int a) {
  const Elem q = field->size();
  if (a < 0 || a > static_cast<int>(q)) throw std::invalid_argument("PRS degree out of range");
  Matrix m(a + 1, static_cast<int>(q) + 1);
  for (int i = 0; i <= a; ++i) {
    for (Elem u = 0; u < q; ++u) m.at(i, static_cast<int>(u)) = field->pow(u, i);
    m.at(i, static_cast<int>(q)) = i == a ? 1 : 0;
  }
  std::vector<CodePoint> pts;
  for (Elem u = 0; u <= q; ++u) pts.push_back({-1, {}, static_cast<int>(u)});
  CodeInfo info{"prs", a, 0, 0, "", a + 1, 0};
  return LinearCode(std::move(field), m, std::move(pts), info);
}

LinearCode BuildCurveCode(const Curve& c, const Divisor& beta) {
  CheckBeta(c, beta, "beta");
  const int b = beta.degree();
  const std::vector<ClosedPoint> pts = c.RationalPoints();
  if (b < 0) throw std::invalid_argument("beta must have nonnegative degree");
  if (b >= static_cast<int>(pts.size())) throw std::invalid_argument("deg beta must be below N");
  const std::vector<CurveFunction> basis = RiemannRochBasis(c, beta);
  std::vector<CodePoint> cols;
  for (size_t i = 0; i < pts.size(); ++i) cols.push_back({static_cast<int>(i), pts[i], -1});
  CodeInfo info{"curve", 0, b, 0, beta.ToString(), static_cast<int>(basis.size()), 0};
  return LinearCode(c.field_ptr(), EvaluationMatrix(c, basis, pts), std::move(cols), info);
}

LinearCode BuildDecomposableCode(const RuledSurface& s, int a, const Divisor& beta) {
  if (s.variant() != SurfaceVariant::kDecomposable) {
    throw std::invalid_argument("decomposable code needs a decomposable surface");
  }
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  const Curve& c = s.curve();
  CheckBeta(c, beta, "beta");
  const FieldSpec& k = c.field();
  const std::vector<ClosedPoint> base = c.RationalPoints();
  const int nb = static_cast<int>(base.size());

  Matrix rows(0, nb * (static_cast<int>(c.q()) + 1));
  int section_dim = 0;
  for (int i = 0; i <= a; ++i) {
    const std::vector<CurveFunction> block = RiemannRochBasis(c, beta - s.delta() * i);
    section_dim += static_cast<int>(block.size());
    const Matrix vals = EvaluationMatrix(c, block, base);
    for (int r = 0; r < vals.rows(); ++r) {
      std::vector<std::vector<Elem>> values(a + 1, std::vector<Elem>(nb, 0));
      for (int p = 0; p < nb; ++p) values[i][p] = vals.at(r, p);
      rows.append_row(SectionRow(k, values, nb));
    }
  }
  if (section_dim == 0) throw std::invalid_argument("empty message space");
  CodeInfo info{"decomposable", a, beta.degree(), s.twist(), beta.ToString(), section_dim, 0};
  return LinearCode(c.field_ptr(), rows, SurfaceColumns(s), info);
}

LinearCode BuildElmCode(const RuledSurface& s, int a, const Divisor& beta) {
  if (s.variant() != SurfaceVariant::kElm) throw std::invalid_argument("elm code needs an elm surface");
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  const Curve& c = s.curve();
  CheckBeta(c, beta, "beta");
  const ClosedPoint& x = s.base_point();
  if (beta.multiplicity(x) != 0) throw std::invalid_argument("beta support contains the center");
  const FieldSpec& k = c.field();
  FieldPtr ext = c.ext(x.degree);
  const FieldSpec& e = *ext;
  const Elem u0 = s.fiber_coord();

  const std::vector<CurveFunction> basis = RiemannRochBasis(c, beta);
  const int m = static_cast<int>(basis.size());
  const int vars = (a + 1) * m;
  if (vars == 0) throw std::invalid_argument("empty message space");

  // Coefficient of t^j w^k in sum_i f_i u^i, with w = u - u0, is
  // sum_i f_i[j] C(i,k) u0^(i-k).
  std::vector<std::vector<Elem>> taylor;
  for (const CurveFunction& f : basis) taylor.push_back(TaylorCoeffs(c, f, x, std::max(a, 1)));
  std::vector<std::vector<Elem>> binom(a + 1, std::vector<Elem>(a + 1, 0));
  for (int i = 0; i <= a; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      binom[i][j] = k.add(binom[i - 1][j - 1], j <= i - 1 ? binom[i - 1][j] : 0);
    }
  }
  const std::vector<Elem> tbasis = e.base_basis();
  Matrix conditions(0, vars);
  for (int j = 0; j < a; ++j) {
    for (int kk = 0; j + kk <= a - 1; ++kk) {
      std::vector<Elem> coeff(vars, 0);
      for (int i = kk; i <= a; ++i) {
        const Elem factor = e.mul(e.embed(binom[i][kk]), e.pow(u0, i - kk));
        for (int l = 0; l < m; ++l) coeff[i * m + l] = e.mul(taylor[l][j], factor);
      }
      for (Elem b : tbasis) {
        std::vector<Elem> row(vars);
        for (int v = 0; v < vars; ++v) row[v] = e.trace_to_base(e.mul(b, coeff[v]));
        conditions.append_row(row);
      }
    }
  }
  std::vector<std::vector<Elem>> kernel;
  int condition_rank = 0;
  if (conditions.rows() == 0) {
    for (int v = 0; v < vars; ++v) {
      std::vector<Elem> unit(vars, 0);
      unit[v] = 1;
      kernel.push_back(unit);
    }
  } else {
    condition_rank = Rank(k, conditions);
    kernel = NullSpace(k, conditions);
  }
  if (kernel.empty()) throw std::invalid_argument("empty message space");

  const std::vector<ClosedPoint> base = c.RationalPoints();
  const int nb = static_cast<int>(base.size());
  const Matrix vals = EvaluationMatrix(c, basis, base);
  Matrix rows(0, nb * (static_cast<int>(c.q()) + 1));
  for (const auto& v : kernel) {
    std::vector<std::vector<Elem>> values(a + 1, std::vector<Elem>(nb, 0));
    for (int i = 0; i <= a; ++i) {
      for (int l = 0; l < m; ++l) {
        const Elem coef = v[i * m + l];
        if (coef == 0) continue;
        for (int p = 0; p < nb; ++p) values[i][p] = k.add(values[i][p], k.mul(coef, vals.at(l, p)));
      }
    }
    rows.append_row(SectionRow(k, values, nb));
  }
  CodeInfo info{"elm", a, beta.degree(), s.twist(), beta.ToString(),
                static_cast<int>(kernel.size()), condition_rank};
  return LinearCode(c.field_ptr(), rows, SurfaceColumns(s), info);
}

LinearCode BuildProductCode(const Curve& c, int a, const Divisor& beta) {
  const LinearCode prs = BuildPrs(c.field_ptr(), a);
  const LinearCode cc = BuildCurveCode(c, beta);
  const FieldSpec& k = c.field();
  const int fiber_len = prs.n();
  Matrix rows(0, cc.n() * fiber_len);
  for (int r1 = 0; r1 < prs.k(); ++r1) {
    for (int r2 = 0; r2 < cc.k(); ++r2) {
      std::vector<Elem> row;
      row.reserve(rows.cols());
      for (int p = 0; p < cc.n(); ++p) {
        for (int u = 0; u < fiber_len; ++u) {
          row.push_back(k.mul(prs.generator().at(r1, u), cc.generator().at(r2, p)));
        }
      }
      rows.append_row(row);
    }
  }
  CodeInfo info{"product", a, beta.degree(), 0, beta.ToString(), prs.k() * cc.k(), 0};
  return LinearCode(c.field_ptr(), rows, SurfaceColumns(RuledSurface::Trivial(c)), info);
}

LinearCode BuildSurfaceCode(const RuledSurface& s, int a, const Divisor& beta) {
  return s.variant() == SurfaceVariant::kElm ? BuildElmCode(s, a, beta)
                                             : BuildDecomposableCode(s, a, beta);
}

UnisecantCode BuildUnisecant(const RuledSurface& s, const Divisor& beta, int segre_dmax) {
  const Curve& c = s.curve();
  const long long deg_l = beta.degree();
  const long long k_rhs = s.deg_e() + 2 * (deg_l + 1 - c.genus());
  if (k_rhs <= 0) throw std::invalid_argument("unisecant dimension bound is not positive");
  long long s_a;
  bool exact;
  if (s.variant() == SurfaceVariant::kDecomposable) {
    s_a = SegreDecomposable(s).s_a;
    exact = true;
  } else {
    s_a = SegreLowerBoundElm(s, segre_dmax).bound;
    exact = false;
  }
  const BoundReport bound = BoundUnisecant(c.q(), c.N(), c.genus(), s.deg_e(), s_a, deg_l);
  UnisecantCode out{BuildSurfaceCode(s, 1, beta), s_a, exact, bound.k_lower, bound.d_lower};
  return out;
}

void WriteGenerator(std::ostream& os, const LinearCode& code) {
  os << code.k() << " " << code.n() << " " << code.field().size() << "\n";
  for (int r = 0; r < code.k(); ++r) {
    for (int j = 0; j < code.n(); ++j) os << (j ? " " : "") << code.generator().at(r, j);
    os << "\n";
  }
}

void WritePointIndex(std::ostream& os, const LinearCode& code) {
  os << "# column base_index degree x y fiber\n";
  for (size_t j = 0; j < code.points().size(); ++j) {
    const CodePoint& p = code.points()[j];
    os << j << " " << p.base_index << " ";
    if (p.base_index < 0) {
      os << "- - -";
    } else if (p.base.infinity) {
      os << p.base.degree << " inf inf";
    } else {
      os << p.base.degree << " " << p.base.x << " " << p.base.y;
    }
    os << " ";
    if (p.fiber < 0) {
      os << "-";
    } else if (p.fiber == static_cast<int>(code.field().size())) {
      os << "inf";
    } else {
      os << p.fiber;
    }
    os << "\n";
  }
}

std::pair<Elem, Matrix> ReadGenerator(std::istream& is) {
  long long k, n, q;
  if (!(is >> k >> n >> q) || k < 0 || n < 0 || q < 2) {
    throw std::invalid_argument("matrix header must be \"k n q\"");
  }
  Matrix m(static_cast<int>(k), static_cast<int>(n));
  for (long long r = 0; r < k; ++r) {
    for (long long j = 0; j < n; ++j) {
      long long v;
      if (!(is >> v)) {
        throw std::invalid_argument("matrix truncated at row " + std::to_string(r + 1) +
                                    ", column " + std::to_string(j + 1));
      }
      if (v < 0 || v >= q) {
        throw std::invalid_argument("entry out of range at row " + std::to_string(r + 1) +
                                    ", column " + std::to_string(j + 1));
      }
      m.at(static_cast<int>(r), static_cast<int>(j)) = static_cast<Elem>(v);
    }
  }
  return {static_cast<Elem>(q), m};
}

}  // namespace ruledcodes
