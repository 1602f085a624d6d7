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


#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ruledcodes/analysis.h"
#include "ruledcodes/asymptotics.h"
#include "ruledcodes/config.h"
#include "ruledcodes/locality.h"

namespace ruledcodes {

namespace {

using nlohmann::json;

class VerifyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<BoundReport> BoundsFor(const Experiment& e, const LinearCode& code) {
  const ExperimentConfig& c = e.config;
  const long long q = e.curve.q(), n = e.curve.N(), g = e.curve.genus();
  const long long b = e.beta.degree();
  std::vector<BoundReport> out;
  if (c.family == "prs") {
    BoundReport r;
    r.family = "prs";
    r.n = q + 1;
    r.k_lower = c.a + 1;
    r.d_lower = q + 1 - c.a;
    r.flags["a_range"] = c.a <= q;
    out.push_back(r);
  } else if (c.family == "curve") {
    BoundReport r;
    r.family = "curve";
    r.n = n;
    r.k_lower = b + 1 - g;
    r.d_lower = n - b;
    r.flags["b_range"] = 0 <= b && b < n;
    out.push_back(r);
  } else if (c.family == "product") {
    BoundReport r;
    r.family = "product";
    r.n = (q + 1) * n;
    r.k_lower = (c.a + 1) * (b + 1 - g);
    r.d_lower = (q + 1 - c.a) * (n - b);
    r.flags["a_range"] = c.a <= q;
    r.flags["b_range"] = 0 <= b && b < n;
    out.push_back(r);
  } else {
    const RuledSurface& s = *e.surface;
    const long long a = code.info().a;
    if (s.variant() == SurfaceVariant::kDecomposable) {
      out.push_back(BoundFamcodes2(q, n, g, s.twist(), a, b));
    } else {
      out.push_back(BoundFamcodes1(q, n, g, s.twist(), a, b));
    }
    if (c.family == "unisecant") {
      const UnisecantCode u = BuildUnisecant(s, e.beta, c.segre_dmax);
      const long long s_a = u.s_a;
      out.push_back(BoundUnisecant(q, n, g, s.deg_e(), s_a, b));
    }
  }
  return out;
}

json BoundJson(const BoundReport& r) {
  json flags = json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  return {{"family", r.family}, {"n", r.n},        {"k_lower", r.k_lower}, {"d_lower", r.d_lower},
          {"valid", r.valid()}, {"flags", flags}, {"achieving", r.achieving}};
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

struct Row {
  std::string family, params, n, k_lb, k_exact, d_lb, d_exact, griesmer;
};

void PrintTable(std::ostream& os, const std::vector<Row>& rows) {
  std::vector<Row> all = {{"family", "params", "n", "k_lb", "k_exact", "d_lb", "d_exact", "griesmer"}};
  all.insert(all.end(), rows.begin(), rows.end());
  auto fields = [](const Row& r) {
    return std::vector<std::string>{r.family, r.params, r.n, r.k_lb, r.k_exact, r.d_lb, r.d_exact, r.griesmer};
  };
  std::vector<size_t> width(8, 0);
  for (const Row& r : all) {
    const auto f = fields(r);
    for (size_t i = 0; i < 8; ++i) width[i] = std::max(width[i], f[i].size());
  }
  for (const Row& r : all) {
    const auto f = fields(r);
    for (size_t i = 0; i < 8; ++i) {
      if (i + 1 == 8) {
        os << f[i] << "\n";
      } else {
        os << std::left << std::setw(static_cast<int>(width[i])) << f[i] << "  ";
      }
    }
  }
}

std::string CsvTable(const std::vector<Row>& rows) {
  std::ostringstream os;
  os << "family,params,n,k_lb,k_exact,d_lb,d_exact,griesmer\n";
  for (const Row& r : rows) {
    os << r.family << "," << r.params << "," << r.n << "," << r.k_lb << "," << r.k_exact << ","
       << r.d_lb << "," << r.d_exact << "," << r.griesmer << "\n";
  }
  return os.str();
}

// Checks exact parameters against each valid bound; returns the table rows
// and whether everything held.
bool Compare(const std::vector<BoundReport>& bounds, long long q, const ExactResult* exact, int k,
             int n, const std::string& params, std::vector<Row>* rows, std::ostream& os) {
  bool ok = true;
  std::string griesmer = "-";
  if (exact) {
    const GriesmerResult gr = GriesmerCheck(n, k, exact->d, q);
    griesmer = gr.ok ? "ok(" + std::to_string(gr.sum) + ")" : "FAIL(" + std::to_string(gr.sum) + ")";
    if (!gr.ok) {
      os << "violation: Griesmer sum " << gr.sum << " exceeds n = " << n << "\n";
      ok = false;
    }
    if (!SingletonCheck(n, k, exact->d)) {
      os << "violation: Singleton k + d = " << k + exact->d << " > n + 1\n";
      ok = false;
    }
  }
  for (const BoundReport& b : bounds) {
    Row r{b.family, params, std::to_string(n), std::to_string(b.k_lower), std::to_string(k),
          std::to_string(b.d_lower), exact ? std::to_string(exact->d) : "-", griesmer};
    if (!b.valid()) {
      r.k_lb += "*";
      r.d_lb += "*";
    } else {
      if (b.n != n) {
        os << "violation: " << b.family << " length " << b.n << " but the matrix has " << n << " columns\n";
        ok = false;
      }
      if (k < b.k_lower) {
        os << "violation: " << b.family << " k = " << k << " < " << b.k_lower << "\n";
        ok = false;
      }
      if (exact && exact->d < b.d_lower) {
        os << "violation: " << b.family << " d = " << exact->d << " < " << b.d_lower << "\n";
        ok = false;
      }
    }
    rows->push_back(r);
  }
  if (bounds.empty()) rows->push_back({"-", params, std::to_string(n), "-", std::to_string(k), "-",
                                       exact ? std::to_string(exact->d) : "-", griesmer});
  return ok;
}

std::string ParamString(const Experiment& e, const LinearCode& code) {
  std::ostringstream os;
  os << "q=" << e.curve.q() << ",N=" << e.curve.N() << ",g=" << e.curve.genus();
  if (e.surface) os << ",twist=" << e.surface->twist();
  os << ",a=" << code.info().a << ",b=" << e.beta.degree();
  return os.str();
}

int CmdBuild(const std::string& config_path, const std::string& out_override, std::ostream& out,
             std::ostream& err) {
  ExperimentConfig cfg = LoadConfig(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  const Experiment e = Instantiate(cfg);
  const LinearCode code = BuildConfiguredCode(e);
  const std::vector<BoundReport> bounds = BoundsFor(e, code);

  EnsureDir(cfg.out_dir);
  const std::filesystem::path base = std::filesystem::path(cfg.out_dir) / cfg.prefix;
  std::ostringstream mat, idx;
  WriteGenerator(mat, code);
  WritePointIndex(idx, code);
  WriteFile(base.string() + ".matrix", mat.str());
  WriteFile(base.string() + ".points", idx.str());

  std::optional<ExactResult> exact;
  if (cfg.exact) {
    try {
      exact = ExactParameters(code, cfg.exact_cap);
    } catch (const CapExceededError& ex) {
      out << "exact distance skipped: " << ex.what() << "\n";
    }
  }

  json side = {{"field", {{"p", cfg.p}, {"m", cfg.m}}},
               {"family", cfg.family},
               {"curve", e.curve.describe()},
               {"n", code.n()},
               {"k", code.k()},
               {"section_dim", code.info().section_dim},
               {"condition_rank", code.info().condition_rank},
               {"beta", code.info().beta},
               {"bounds", json::array()}};
  if (e.surface) side["surface"] = e.surface->describe();
  for (const BoundReport& b : bounds) side["bounds"].push_back(BoundJson(b));
  if (exact) side["d_exact"] = exact->d;
  WriteFile(base.string() + ".bounds.json", side.dump(2) + "\n");

  out << "curve: " << e.curve.describe() << "\n";
  if (e.surface) out << "surface: " << e.surface->describe() << "\n";
  out << "code: family " << cfg.family << ", n = " << code.n() << ", k = " << code.k();
  if (code.info().family == "elm") out << ", condition rank = " << code.info().condition_rank;
  out << "\n";
  std::vector<Row> rows;
  const bool ok = Compare(bounds, e.curve.q(), exact ? &*exact : nullptr, code.k(), code.n(),
                          ParamString(e, code), &rows, err);
  PrintTable(out, rows);
  WriteFile(base.string() + ".report.csv", CsvTable(rows));

  if (cfg.locality && e.surface) {
    const int q = static_cast<int>(e.curve.q());
    const int a = static_cast<int>(code.info().a);
    int full = 0;
    for (int b = 0; b < e.curve.N(); ++b) full += RestrictToFiber(code, b).equals_prs;
    const auto sets = RecoverySets(code);
    WriteFile(base.string() + ".recovery.json", RecoverySetsJson(sets) + "\n");
    out << "locality: " << a + 1 << ", availability (floor) " << q / (a + 1)
        << ", ceiling " << (q + a) / (a + 1) << ", fibers equal to PRS(" << a << "): " << full
        << "/" << e.curve.N() << "\n";
  }
  out << "wrote " << base.string() << ".{matrix,points,bounds.json,report.csv"
      << (cfg.locality && e.surface ? ",recovery.json" : "") << "}\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

std::pair<int, int> FactorPrimePower(long long q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    long long v = q;
    int m = 0;
    while (v % p == 0) {
      v /= p;
      ++m;
    }
    if (v != 1) break;
    return {p, m};
  }
  throw ConfigError("field size " + std::to_string(q) + " is not a prime power");
}

int CmdVerify(const std::string& matrix_path, const std::string& bounds_path, std::uint64_t cap,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(matrix_path);
  if (!in) throw ConfigError("cannot open " + matrix_path);
  std::pair<Elem, Matrix> parsed;
  try {
    parsed = ReadGenerator(in);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(matrix_path + ": " + e.what());
  }
  const auto& [q, g] = parsed;
  std::vector<BoundReport> bounds;
  int p = 0, m = 0;
  if (!bounds_path.empty()) {
    std::ifstream bin(bounds_path);
    if (!bin) throw ConfigError("cannot open " + bounds_path);
    json j;
    try {
      j = json::parse(bin);
      p = j.at("field").at("p").get<int>();
      m = j.at("field").at("m").get<int>();
      for (const json& b : j.at("bounds")) {
        BoundReport r;
        r.family = b.at("family").get<std::string>();
        r.n = b.at("n").get<long long>();
        r.k_lower = b.at("k_lower").get<long long>();
        r.d_lower = b.at("d_lower").get<long long>();
        for (const auto& [k, v] : b.at("flags").items()) r.flags[k] = v.get<bool>();
        bounds.push_back(r);
      }
    } catch (const json::exception& e) {
      throw ConfigError(bounds_path + ": " + e.what());
    }
    long long size = 1;
    for (int i = 0; i < m; ++i) size *= p;
    if (size != static_cast<long long>(q)) {
      throw ConfigError("matrix field size " + std::to_string(q) + " disagrees with the bounds file");
    }
  } else {
    std::tie(p, m) = FactorPrimePower(q);
  }
  FieldPtr field = FieldSpec::Create(p, m);
  const LinearCode code(field, g, std::vector<CodePoint>(g.cols()), {});
  bool ok = true;
  if (code.k() != g.rows()) {
    err << "violation: generator rows are dependent (rank " << code.k() << " of " << g.rows() << ")\n";
    ok = false;
  }
  const ExactResult exact = ExactParameters(code, cap);
  std::vector<Row> rows;
  ok = Compare(bounds, q, &exact, code.k(), code.n(), "q=" + std::to_string(q), &rows, err) && ok;
  PrintTable(out, rows);
  if (!csv_path.empty()) WriteFile(csv_path, CsvTable(rows));
  out << (ok ? "PASS" : "FAIL") << ": n = " << exact.n << ", k = " << exact.k << ", d = " << exact.d
      << " (" << exact.codewords_checked << " codewords up to scaling)\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

int CmdSegre(const std::string& config_path, int dmax_override, std::ostream& out) {
  const ExperimentConfig cfg = LoadConfig(config_path);
  ExperimentConfig c = cfg;
  if (c.family != "surface" && c.family != "unisecant") c.family = "surface";
  const Experiment e = Instantiate(c);
  if (!e.surface) throw ConfigError("config: surface: segre needs a surface block");
  const RuledSurface& s = *e.surface;
  const int dmax = dmax_override >= 0 ? dmax_override : cfg.segre_dmax;
  const SegreUpperBound ub = SegreUpperBounds(s.genus(), e.curve.N(), e.curve.q());
  out << "surface: " << s.describe() << "\n";
  out << "upper bound: s_a <= " << ub.bound << " (2g = " << 2 * s.genus();
  if (ub.t >= 0) out << ", point-count refinement with t = " << ub.t;
  out << ")\n";
  if (s.genus() == 0) {
    out << "base is P^1: geometric and arithmetic invariants coincide\n";
  }
  if (s.variant() == SurfaceVariant::kDecomposable) {
    const SegreInvariants inv = SegreDecomposable(s);
    out << "exact: (s_g, s_a) = (" << inv.s_g << ", " << inv.s_a << ")\n";
    return kExitOk;
  }
  const SegreLowerBound lb = SegreLowerBoundElm(s, dmax);
  out << "lower bound: s_a >= " << lb.bound << " (center degree e_x = " << lb.e_x << ", d* = "
      << lb.d_star << ", " << lb.functions_checked << " functions of degree <= "
      << std::max(lb.d_star, 0) + (lb.d_star < dmax ? 1 : 0) << " checked)\n";
  if (lb.bound == ub.bound) out << "certified: s_a = " << lb.bound << "\n";
  return kExitOk;
}

std::pair<double, double> ParseRange(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigError("--b-range expects lo:hi");
  try {
    const double lo = std::stod(s.substr(0, colon)), hi = std::stod(s.substr(colon + 1));
    if (!(0 < lo && lo < hi && hi < 1)) throw ConfigError("--b-range needs 0 < lo < hi < 1");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--b-range expects two numbers lo:hi");
  }
}

int CmdAsymptotics(long long q, double A, int samples, const std::string& b_range,
                   const std::string& out_dir, bool ruled, std::ostream& out) {
  if (q < 2) throw ConfigError("--q must be at least 2");
  if (A <= 0) {
    const auto def = DefaultIharaConstant(q);
    if (!def) throw ConfigError("--A is required when q is not a square");
    A = *def;
  }
  if (!(A > 1)) throw ConfigError("A must exceed 1");
  if (ruled && !(A > 2)) throw ConfigError("A must exceed 2 for the optimized ruled curve");
  if (samples < 2) throw ConfigError("--samples must be at least 2");
  EnsureDir(out_dir);
  const double bcoef = ProductCoefficient(q, A);
  out << std::setprecision(12);
  out << "B = " << bcoef << "\n";
  if (const auto fig = FigureEnvelopeCoefficient(q)) {
    if (std::abs(*fig - bcoef) > 1e-12) {
      out << "note: the reference plot for q = " << q << " uses coefficient " << *fig
          << ", the formula gives " << bcoef << "\n";
    }
  }
  const std::string tag = "q" + std::to_string(q);
  {
    std::ostringstream csv;
    WriteFrontierCsv(csv, EnvelopeProduct(q, A, samples));
    WriteFile(std::filesystem::path(out_dir) / ("envelope_" + tag + ".csv"), csv.str());
  }
  if (!ruled) return kExitOk;
  const auto [lo, hi] = b_range.empty() ? std::pair{0.3, 0.99} : ParseRange(b_range);
  std::vector<FrontierPoint> pts;
  int skipped = 0, disagreements = 0;
  for (int i = 0; i < samples; ++i) {
    const double b = lo + (hi - lo) * i / (samples - 1);
    const OptimizedRate o = OptimizedRateAt(q, A, b);
    if (!o.a0_valid || o.r_max < 0) {
      ++skipped;
      continue;
    }
    if (!o.closed_form_agrees) ++disagreements;
    pts.push_back({"ruled", b, o.delta, o.r_max});
  }
  std::ostringstream csv;
  WriteFrontierCsv(csv, pts);
  WriteFile(std::filesystem::path(out_dir) / ("ruled_" + tag + ".csv"), csv.str());
  const DominanceReport dom = Dominance(q, A, samples);
  out << "ruled points: " << pts.size() << " (" << skipped << " outside 0 <= a0 <= b)\n";
  out << "closed form vs numeric optimum disagreements: " << disagreements << "\n";
  if (dom.nonempty) {
    out << "ruled curve above the product envelope for delta in [" << dom.lo << ", " << dom.hi << "]\n";
  } else {
    out << "ruled curve never above the product envelope on the sampled grid\n";
  }
  out << "wrote " << out_dir << "/envelope_" << tag << ".csv, " << out_dir << "/ruled_" << tag << ".csv\n";
  return kExitOk;
}

std::vector<long long> ParseList(const std::string& s, const std::string& flag) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ConfigError(flag + ": \"" + tok + "\" is not an integer");
    }
  }
  return out;
}

int CmdRecover(const std::string& config_path, const std::string& message, unsigned seed,
               const std::string& erase, const std::string& json_path, std::ostream& out,
               std::ostream& err) {
  const Experiment e = Instantiate(LoadConfig(config_path));
  if (!e.surface || e.config.family == "curve" || e.config.family == "prs") {
    throw ConfigError("config: code.family: recovery needs a surface code");
  }
  const LinearCode code = BuildConfiguredCode(e);
  const FieldSpec& f = code.field();
  std::vector<Elem> msg;
  if (!message.empty()) {
    for (long long v : ParseList(message, "--message")) {
      if (v < 0 || v >= static_cast<long long>(f.size())) throw ConfigError("--message: entry out of range");
      msg.push_back(static_cast<Elem>(v));
    }
    if (static_cast<int>(msg.size()) != code.k()) {
      throw ConfigError("--message needs " + std::to_string(code.k()) + " entries");
    }
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Elem> el(0, f.size() - 1);
    for (int i = 0; i < code.k(); ++i) msg.push_back(el(rng));
  }
  const std::vector<Elem> word = code.Encode(msg);
  std::vector<bool> erased(word.size(), false);
  const std::vector<long long> positions = ParseList(erase, "--erase");
  for (long long p : positions) {
    if (p < 0 || p >= code.n()) throw ConfigError("--erase: position " + std::to_string(p) + " out of range");
    erased[p] = true;
  }
  const auto sets = RecoverySets(code);
  if (!json_path.empty()) WriteFile(json_path, RecoverySetsJson(sets) + "\n");
  bool ok = true;
  for (long long p : positions) {
    const RecoverySet* use = nullptr;
    for (const RecoverySet& r : sets[p]) {
      if (std::none_of(r.helpers.begin(), r.helpers.end(), [&](int h) { return erased[h]; })) {
        use = &r;
        break;
      }
    }
    if (!use) {
      err << "position " << p << ": every recovery set has an erased helper\n";
      ok = false;
      continue;
    }
    const Elem v = Recover(f, word, *use, erased);
    out << "position " << p << " <- helpers";
    for (int h : use->helpers) out << " " << h;
    out << ": " << v << (v == word[p] ? " ok" : " MISMATCH") << "\n";
    ok = ok && v == word[p];
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes on ruled surfaces over finite fields", "ruledcodes"};
  app.require_subcommand(1);

  std::string config, out_dir;
  auto* build = app.add_subcommand("build", "Build a code from a JSON config and write its matrix, point index and bounds");
  build->add_option("config", config, "Config file")->required();
  build->add_option("--out", out_dir, "Output directory (overrides output.dir)");

  std::string matrix, bounds, csv;
  std::uint64_t cap = 10'000'000;
  auto* verify = app.add_subcommand("verify", "Exhaustively verify a generator matrix against its bounds");
  verify->add_option("matrix", matrix, "Generator matrix file (\"k n q\" header)")->required();
  verify->add_option("--bounds", bounds, "Bounds sidecar written by build");
  verify->add_option("--cap", cap, "Largest q^k enumerated");
  verify->add_option("--csv", csv, "Write the comparison table as CSV");

  int dmax = -1;
  auto* segre = app.add_subcommand("segre", "Certify Segre invariant bounds for the configured surface");
  segre->add_option("config", config, "Config file")->required();
  segre->add_option("--dmax", dmax, "Largest function degree searched (default analysis.segre_dmax)");

  long long q = 0;
  double A = 0;
  int samples = 101;
  std::string b_range, asym_out = ".";
  bool no_ruled = false;
  auto* asym = app.add_subcommand("asymptotics", "Write product-envelope and ruled-surface frontier CSVs");
  asym->add_option("--q", q, "Field size")->required();
  asym->add_option("--A", A, "Ihara constant A(q) (default sqrt(q) - 1 for square q)");
  asym->add_option("--samples", samples, "Points per curve");
  asym->add_option("--b-range", b_range, "Range lo:hi of b for the ruled curve (default 0.3:0.99)");
  asym->add_option("--out", asym_out, "Output directory");
  asym->add_flag("--no-ruled", no_ruled, "Only the product envelope");

  std::string message, erase = "0", json_path;
  unsigned seed = 1;
  auto* rec = app.add_subcommand("recover", "Erase coordinates of a codeword and repair them locally");
  rec->add_option("config", config, "Config file")->required();
  rec->add_option("--message", message, "Comma-separated message (default: random from --seed)");
  rec->add_option("--seed", seed, "Seed for the random message");
  rec->add_option("--erase", erase, "Comma-separated erased positions");
  rec->add_option("--json", json_path, "Write all recovery sets as JSON");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*build) return CmdBuild(config, out_dir, out, err);
    if (*verify) return CmdVerify(matrix, bounds, cap, csv, out, err);
    if (*segre) return CmdSegre(config, dmax, out);
    if (*asym) return CmdAsymptotics(q, A, samples, b_range, asym_out, !no_ruled, out);
    if (*rec) return CmdRecover(config, message, seed, erase, json_path, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ruledcodes
