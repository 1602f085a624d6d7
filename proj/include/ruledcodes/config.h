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


#ifndef RULEDCODES_CONFIG_H_
#define RULEDCODES_CONFIG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruledcodes/codes.h"

namespace ruledcodes {

// Input errors carry the offending field path, e.g. "code.beta[0].degree".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed point named by its degree and its position among the sorted
// closed points of that degree.
struct PointRef {
  int degree = 1;
  int index = 0;
};

struct DivisorTerm {
  PointRef point;
  int multiplicity = 1;
};

struct ExperimentConfig {
  int p = 0;
  int m = 1;
  std::string curve = "elliptic";  // "elliptic" | "line"
  std::array<Elem, 5> coefficients{};
  std::string surface = "product";  // "decomposable" | "elm" | "product"
  std::vector<DivisorTerm> delta;
  PointRef center;
  std::optional<Elem> fiber;  // unset: primitive element of F_{q^d}
  std::string family = "surface";  // "surface" | "product" | "curve" | "prs" | "unisecant"
  int a = 0;
  std::vector<DivisorTerm> beta;
  std::uint64_t exact_cap = 10'000'000;
  bool exact = true;
  bool locality = false;
  int segre_dmax = 1;
  std::string out_dir = ".";
  std::string prefix = "code";
};

// Parses and schema-checks a JSON config. Throws ConfigError.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);

// Resolved objects for a config.
struct Experiment {
  ExperimentConfig config;
  Curve curve;
  std::optional<RuledSurface> surface;
  Divisor beta;
};

// Builds the curve, surface and divisor. Throws ConfigError with the field
// path on invalid references, and passes module errors through as
// ConfigError too.
Experiment Instantiate(const ExperimentConfig& config);

// The code the config describes.
LinearCode BuildConfiguredCode(const Experiment& e);

}  // namespace ruledcodes

#endif  // RULEDCODES_CONFIG_H_
