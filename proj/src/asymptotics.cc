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


#include "ruledcodes/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ruledcodes {

std::optional<double> DefaultIharaConstant(long long q) {
  const long long r = std::llround(std::sqrt(static_cast<double>(q)));
  if (r * r != q) return std::nullopt;
  return static_cast<double>(r) - 1.0;
}

double ProductCoefficient(long long q, double A) {
  if (!(A > 1)) throw std::invalid_argument("A(q) must exceed 1");
  return (1.0 - 1.0 / A) * (1.0 + 1.0 / (q + 1.0));
}

std::vector<FrontierPoint> EnvelopeProduct(long long q, double A, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  const double b = ProductCoefficient(q, A);
  std::vector<FrontierPoint> out;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    out.push_back({"product", t, b * t * t, b * (1 - t) * (1 - t)});
  }
  return out;
}

double EnvelopeRate(long long q, double A, double delta) {
  const double b = ProductCoefficient(q, A);
  if (delta < 0 || delta > b) throw std::domain_error("delta outside the product envelope");
  const double r = 1.0 - std::sqrt(delta / b);
  return b * r * r;
}

double EnvelopeLineResidual(long long q, double A, double t) {
  const double c = 1.0 + 1.0 / (q + 1.0);
  const double k = 1.0 - 1.0 / A;
  const double b = ProductCoefficient(q, A);
  const double x = b * t * t, y = b * (1 - t) * (1 - t);
  const double s = c * (1 - t);
  return s * x + (c - s) * y - s * (c - s) * k;
}

RuledLimit RuledLimitParams(long long q, double A, double a, double b, double d) {
  if (!(A > 1)) throw std::invalid_argument("A(q) must exceed 1");
  if (a < 0 || a > 1) throw std::invalid_argument("a must lie in [0, 1]");
  if (!(b > 0 && b < 1)) throw std::invalid_argument("b must lie in (0, 1)");
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  RuledLimit r;
  r.m = d > 0 ? std::min(a, b / ((q + 1.0) * d)) : a;
  r.delta = std::min(1.0 - b, (1.0 - r.m) * (1.0 - b + (q + 1.0) * r.m * d));
  r.rate = (a + 1.0 / (q + 1.0)) * (b - 1.0 / A - 0.5 * (q + 1.0) * a * d);
  r.in_range = r.delta >= 0 && r.delta <= 1 && r.rate >= 0 && r.rate <= 1;
  return r;
}

double BalancedD(long long q, double a, double b) {
  if (!(a < 1)) throw std::invalid_argument("a must be below 1");
  return (1.0 - b) / ((q + 1.0) * (1.0 - a));
}

double GoldenSectionMax(double lo, double hi, const std::function<double(double)>& f,
                        double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return (lo + hi) / 2;
}

OptimizedRate OptimizedRateAt(long long q, double A, double b) {
  if (!(A > 2)) throw std::invalid_argument("the optimized rate needs A(q) > 2");
  if (!(b > 0 && b < 1)) throw std::invalid_argument("b must lie in (0, 1)");
  const double qq = static_cast<double>(q);
  const double u = A * (b + 1) - 2;
  OptimizedRate o;
  o.b = b;
  o.delta = 1 - b;
  o.a0 = 1 - std::sqrt((qq + 2) * A * (1 - b) / ((qq + 1) * u));
  const double head = 1 - 1 / A + u / (2 * (qq + 1) * A);
  o.r_max = head - std::sqrt((qq + 2) * (1 - b) * u / ((qq + 1) * A));
  o.r_max_printed = head - std::sqrt((qq + 2) * A * (1 - b) / ((qq + 1) * u));
  o.printed_form_disagrees = std::abs(o.r_max - o.r_max_printed) > 1e-9;
  o.a0_valid = o.a0 >= 0 && o.a0 <= b;

  auto rate = [&](double a) { return RuledLimitParams(q, A, a, b, BalancedD(q, a, b)).rate; };
  o.a_numeric = GoldenSectionMax(0, b, rate);
  o.r_numeric = rate(o.a_numeric);
  o.closed_form_agrees = std::abs(o.r_numeric - o.r_max) <= 1e-6 &&
                         (!o.a0_valid || std::abs(o.a_numeric - o.a0) <= 1e-6);
  return o;
}

DominanceReport Dominance(long long q, double A, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  const double bcoef = ProductCoefficient(q, A);
  DominanceReport rep;
  for (int i = 0; i < samples; ++i) {
    DominanceRow row;
    row.delta = static_cast<double>(i) / (samples - 1);
    const double b = 1 - row.delta;
    if (row.delta <= bcoef) row.r_product = EnvelopeRate(q, A, row.delta);
    if (b > 0 && b < 1 && row.delta <= bcoef) {
      const OptimizedRate o = OptimizedRateAt(q, A, b);
      row.r_ruled = o.r_max;
      row.comparable = o.a0_valid && o.r_max >= 0;
    }
    row.ruled_above = row.comparable && row.r_ruled > row.r_product;
    if (row.ruled_above) {
      if (!rep.nonempty) rep.lo = row.delta;
      rep.hi = row.delta;
      rep.nonempty = true;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::optional<double> FigureEnvelopeCoefficient(long long q) {
  if (q == 16) return 36.0 / 51.0;
  if (q == 49) return 49.0 / 60.0;
  return std::nullopt;
}

void WriteFrontierCsv(std::ostream& os, const std::vector<FrontierPoint>& pts) {
  os << "family,param,delta,rate\n";
  os.precision(12);
  for (const FrontierPoint& p : pts) {
    os << p.family << "," << p.param << "," << p.delta << "," << p.rate << "\n";
  }
}

}  // namespace ruledcodes
