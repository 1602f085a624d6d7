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


#ifndef RULEDCODES_ASYMPTOTICS_H_
#define RULEDCODES_ASYMPTOTICS_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ruledcodes {

struct FrontierPoint {
  std::string family;
  double param = 0;
  double delta = 0;
  double rate = 0;
};

// sqrt(q) - 1 for square q, nullopt otherwise.
std::optional<double> DefaultIharaConstant(long long q);

// B = (1 - 1/A)(1 + 1/(q+1)). Throws std::invalid_argument when A <= 1.
double ProductCoefficient(long long q, double A);

// (B t^2, B (1-t)^2) for `samples` values of t evenly spaced in [0, 1].
std::vector<FrontierPoint> EnvelopeProduct(long long q, double A, int samples);

// Rate of the product envelope at relative distance delta in [0, B].
double EnvelopeRate(long long q, double A, double delta);

// Signed residual of the envelope point at t on the line of the product
// family with slope parameter s = (1 + 1/(q+1))(1 - t).
double EnvelopeLineResidual(long long q, double A, double t);

struct RuledLimit {
  double m = 0;
  double delta = 0;
  double rate = 0;
  // Both coordinates lie in [0, 1].
  bool in_range = false;
};

// Limit parameters of the elm family for real a in [0,1], b in (0,1), d >= 0.
RuledLimit RuledLimitParams(long long q, double A, double a, double b, double d);

// d = (1 - b) / ((q+1)(1 - a)), where the two distance branches meet.
double BalancedD(long long q, double a, double b);

struct OptimizedRate {
  double b = 0;
  double a0 = 0;
  double r_max = 0;          // closed form from maximizing R(a)
  double r_max_printed = 0;  // the alternative printed expression
  bool printed_form_disagrees = false;
  double a_numeric = 0;
  double r_numeric = 0;
  bool closed_form_agrees = false;  // within 1e-6 of the numeric optimum
  bool a0_valid = false;            // 0 <= a0 <= b
  double delta = 0;
};

// Throws std::invalid_argument when A <= 2 or b is outside (0, 1).
OptimizedRate OptimizedRateAt(long long q, double A, double b);

// Golden-section maximization of a unimodal f on [lo, hi].
double GoldenSectionMax(double lo, double hi, const std::function<double(double)>& f,
                        double tol = 1e-12);

struct DominanceRow {
  double delta = 0;
  double r_product = 0;
  double r_ruled = 0;
  bool comparable = false;
  bool ruled_above = false;
};

struct DominanceReport {
  std::vector<DominanceRow> rows;
  bool nonempty = false;
  double lo = 0;  // smallest sampled delta where the ruled curve is above
  double hi = 0;  // largest such delta
};

DominanceReport Dominance(long long q, double A, int samples);

// Envelope coefficient used by the reference plots, when one exists.
std::optional<double> FigureEnvelopeCoefficient(long long q);

// "family,param,delta,rate" then one line per point.
void WriteFrontierCsv(std::ostream& os, const std::vector<FrontierPoint>& pts);

}  // namespace ruledcodes

#endif  // RULEDCODES_ASYMPTOTICS_H_
