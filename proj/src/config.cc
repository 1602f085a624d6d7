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


#include "ruledcodes/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ruledcodes {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& msg) {
  throw ConfigError("config: " + path + ": " + msg);
}

void CheckKeys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) Fail(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) Fail(path.empty() ? k : path + "." + k, "unknown field");
  }
}

const json& Require(const json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) Fail(path.empty() ? key : path + "." + key, "missing required field");
  return j.at(key);
}

long long Int(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    Fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
  }
  return v;
}

std::string Choice(const json& j, const std::string& path, const std::set<std::string>& options) {
  if (!j.is_string()) Fail(path, "expected a string");
  const std::string s = j.get<std::string>();
  if (!options.count(s)) {
    std::string all;
    for (const auto& o : options) all += (all.empty() ? "" : ", ") + o;
    Fail(path, "\"" + s + "\" is not one of " + all);
  }
  return s;
}

PointRef ParsePoint(const json& j, const std::string& path) {
  CheckKeys(j, path, {"degree", "index", "multiplicity"});
  PointRef r;
  r.degree = static_cast<int>(Int(Require(j, path, "degree"), path + ".degree", 1, 64));
  r.index = static_cast<int>(Int(Require(j, path, "index"), path + ".index", 0, 1 << 30));
  return r;
}

std::vector<DivisorTerm> ParseDivisor(const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of {degree, index, multiplicity}");
  std::vector<DivisorTerm> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    DivisorTerm t;
    t.point = ParsePoint(j[i], p);
    if (j[i].contains("multiplicity")) {
      t.multiplicity = static_cast<int>(Int(j[i]["multiplicity"], p + ".multiplicity", -1000, 1000));
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

ExperimentConfig ParseConfig(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  ExperimentConfig c;
  CheckKeys(j, "", {"field", "curve", "surface", "code", "analysis", "output"});

  const json& f = Require(j, "", "field");
  CheckKeys(f, "field", {"p", "m"});
  c.p = static_cast<int>(Int(Require(f, "field", "p"), "field.p", 2, 1 << 20));
  if (!IsPrime(c.p)) Fail("field.p", std::to_string(c.p) + " is not prime");
  if (f.contains("m")) c.m = static_cast<int>(Int(f["m"], "field.m", 1, 20));

  const json& cu = Require(j, "", "curve");
  CheckKeys(cu, "curve", {"type", "a"});
  c.curve = Choice(Require(cu, "curve", "type"), "curve.type", {"elliptic", "line"});
  if (c.curve == "elliptic") {
    const json& a = Require(cu, "curve", "a");
    if (!a.is_array() || a.size() != 5) Fail("curve.a", "expected [a1, a2, a3, a4, a6]");
    for (int i = 0; i < 5; ++i) {
      c.coefficients[i] =
          static_cast<Elem>(Int(a[i], "curve.a[" + std::to_string(i) + "]", 0, (1LL << 40)));
    }
  } else if (cu.contains("a")) {
    Fail("curve.a", "coefficients only apply to elliptic curves");
  }

  if (j.contains("surface")) {
    const json& s = j["surface"];
    CheckKeys(s, "surface", {"variant", "delta", "center", "fiber"});
    c.surface = Choice(Require(s, "surface", "variant"), "surface.variant",
                       {"decomposable", "elm", "product"});
    if (c.surface == "decomposable") {
      c.delta = ParseDivisor(Require(s, "surface", "delta"), "surface.delta");
    } else if (s.contains("delta")) {
      Fail("surface.delta", "only decomposable surfaces take delta");
    }
    if (c.surface == "elm") {
      c.center = ParsePoint(Require(s, "surface", "center"), "surface.center");
      if (s.contains("fiber")) {
        const json& fb = s["fiber"];
        if (fb.is_string()) {
          if (fb.get<std::string>() != "primitive") Fail("surface.fiber", "expected an integer or \"primitive\"");
        } else {
          c.fiber = static_cast<Elem>(Int(fb, "surface.fiber", 0, 1LL << 40));
        }
      }
    } else if (s.contains("center") || s.contains("fiber")) {
      Fail("surface.center", "only elm surfaces take a center");
    }
  }

  const json& code = Require(j, "", "code");
  CheckKeys(code, "code", {"family", "a", "beta"});
  c.family = Choice(Require(code, "code", "family"), "code.family",
                    {"surface", "product", "curve", "prs", "unisecant"});
  if (code.contains("a")) c.a = static_cast<int>(Int(code["a"], "code.a", 0, 1 << 20));
  if (code.contains("beta")) c.beta = ParseDivisor(code["beta"], "code.beta");
  if (c.family == "unisecant" && code.contains("a") && c.a != 1) {
    Fail("code.a", "unisecant codes have a = 1");
  }
  if ((c.family == "surface" || c.family == "unisecant") && !j.contains("surface")) {
    Fail("surface", "missing required field for family \"" + c.family + "\"");
  }

  if (j.contains("analysis")) {
    const json& an = j["analysis"];
    CheckKeys(an, "analysis", {"exact", "exact_cap", "locality", "segre_dmax"});
    if (an.contains("exact")) {
      if (!an["exact"].is_boolean()) Fail("analysis.exact", "expected a boolean");
      c.exact = an["exact"].get<bool>();
    }
    if (an.contains("exact_cap")) {
      c.exact_cap = static_cast<std::uint64_t>(Int(an["exact_cap"], "analysis.exact_cap", 1, 1LL << 40));
    }
    if (an.contains("locality")) {
      if (!an["locality"].is_boolean()) Fail("analysis.locality", "expected a boolean");
      c.locality = an["locality"].get<bool>();
    }
    if (an.contains("segre_dmax")) {
      c.segre_dmax = static_cast<int>(Int(an["segre_dmax"], "analysis.segre_dmax", 0, 8));
    }
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    CheckKeys(o, "output", {"dir", "prefix"});
    if (o.contains("dir")) {
      if (!o["dir"].is_string()) Fail("output.dir", "expected a string");
      c.out_dir = o["dir"].get<std::string>();
    }
    if (o.contains("prefix")) {
      if (!o["prefix"].is_string() || o["prefix"].get<std::string>().empty()) {
        Fail("output.prefix", "expected a nonempty string");
      }
      c.prefix = o["prefix"].get<std::string>();
    }
  }
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

namespace {

ClosedPoint Resolve(const Curve& c, const PointRef& r, const std::string& path) {
  std::vector<ClosedPoint> pts;
  try {
    pts = r.degree == 1 ? c.RationalPoints() : c.ClosedPoints(r.degree);
  } catch (const std::exception& e) {
    Fail(path + ".degree", e.what());
  }
  if (r.index >= static_cast<int>(pts.size())) {
    Fail(path + ".index", "only " + std::to_string(pts.size()) + " closed points of degree " +
                              std::to_string(r.degree));
  }
  return pts[r.index];
}

Divisor ResolveDivisor(const Curve& c, const std::vector<DivisorTerm>& terms,
                       const std::string& path) {
  Divisor d;
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    d = d + Divisor::Of(Resolve(c, terms[i].point, p), terms[i].multiplicity);
  }
  return d;
}

}  // namespace

Experiment Instantiate(const ExperimentConfig& config) {
  FieldPtr field;
  try {
    field = FieldSpec::Create(config.p, config.m);
  } catch (const std::exception& e) {
    Fail("field", e.what());
  }
  std::optional<Curve> curve;
  if (config.curve == "line") {
    curve = Curve::ProjectiveLine(field);
  } else {
    for (int i = 0; i < 5; ++i) {
      if (config.coefficients[i] >= field->size()) {
        Fail("curve.a[" + std::to_string(i) + "]", "not an element of F_" + std::to_string(field->size()));
      }
    }
    try {
      curve = Curve::Elliptic(field, config.coefficients);
    } catch (const std::invalid_argument& e) {
      Fail("curve.a", e.what());
    }
  }
  Experiment e{config, *curve, std::nullopt, ResolveDivisor(*curve, config.beta, "code.beta")};
  if (config.family == "surface" || config.family == "unisecant" || config.family == "product") {
    try {
      if (config.surface == "decomposable") {
        e.surface = RuledSurface::Decomposable(*curve, ResolveDivisor(*curve, config.delta, "surface.delta"));
      } else if (config.surface == "elm") {
        const ClosedPoint x = Resolve(*curve, config.center, "surface.center");
        const FieldPtr ext = curve->ext(x.degree);
        const Elem u = config.fiber ? *config.fiber : ext->primitive();
        e.surface = RuledSurface::Elm(*curve, x, u);
      } else {
        e.surface = RuledSurface::Trivial(*curve);
      }
    } catch (const std::invalid_argument& ex) {
      Fail("surface", ex.what());
    }
  }
  return e;
}

LinearCode BuildConfiguredCode(const Experiment& e) {
  const ExperimentConfig& c = e.config;
  try {
    if (c.family == "prs") return BuildPrs(e.curve.field_ptr(), c.a);
    if (c.family == "curve") return BuildCurveCode(e.curve, e.beta);
    if (c.family == "product") return BuildProductCode(e.curve, c.a, e.beta);
    if (c.family == "unisecant") return BuildUnisecant(*e.surface, e.beta, c.segre_dmax).code;
    return BuildSurfaceCode(*e.surface, c.a, e.beta);
  } catch (const std::invalid_argument& ex) {
    Fail("code", ex.what());
  }
}

}  // namespace ruledcodes
