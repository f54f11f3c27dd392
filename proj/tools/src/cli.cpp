// Copyright 2026 The chiralwind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "chiral/analytic.hpp"
#include "chiral/errors.hpp"
#include "chiral/numerics.hpp"
#include "chiral/specfun.hpp"
#include "chiral/version.hpp"
#include "chiral/winding.hpp"

namespace chiral::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kVerifySigmas = 3.0;
constexpr double kExactFloor = 1e-12;
constexpr long kSelftestSamples = 100'000;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json complex_json(Complex z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

// ---- configuration ------------------------------------------------------

template <typename T>
T get_as(const ordered_json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config: '" + std::string(key) + "' has the wrong type");
  }
}

void check_keys(const ordered_json& j, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError("config: " + std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("config: unknown key '" + key + "' in " + std::string(where));
  }
}

std::vector<FourierTerm> parse_terms(const ordered_json& j, std::string_view key) {
  if (!j.is_array()) throw ConfigError("config: '" + std::string(key) + "' must be an array");
  std::vector<FourierTerm> terms;
  for (const auto& t : j) {
    check_keys(t, key, {"n", "re", "im"});
    if (!t.contains("n") || !t.contains("re")) {
      throw ConfigError("config: each term of '" + std::string(key) + "' needs 'n' and 're'");
    }
    FourierTerm term;
    term.n = get_as<int>(t.at("n"), "n");
    term.c = {get_as<double>(t.at("re"), "re"), t.contains("im") ? get_as<double>(t.at("im"), "im") : 0.0};
    terms.push_back(term);
  }
  return terms;
}

ordered_json terms_json(const std::vector<FourierTerm>& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : terms) arr.push_back({{"n", t.n}, {"re", t.c.real()}, {"im", t.c.imag()}});
  return arr;
}

template <typename Parse>
auto parse_enum(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void apply_json(RunConfig& cfg, ordered_json j) {
  // Accept a previous output file: its resolved config sits under "config".
  if (j.is_object() && j.contains("tool") && j.contains("config")) j = j.at("config");
  check_keys(j, "config",
             {"command", "field", "k", "q", "p", "samples", "seed", "method", "blocks", "steps", "grid", "format"});
  if (j.contains("command") && get_as<std::string>(j.at("command"), "command") != cfg.command) {
    throw ConfigError("config: written for command '" + j.at("command").get<std::string>() + "', not '" +
                      cfg.command + "'");
  }
  if (j.contains("field")) {
    const auto& f = j.at("field");
    check_keys(f, "field", {"class", "form", "N", "fourier_a", "fourier_b"});
    if (f.contains("class")) {
      cfg.field.cls = parse_enum(get_as<std::string>(f.at("class"), "class"), parse_symmetry_class);
    }
    if (f.contains("form")) cfg.field.form = parse_enum(get_as<std::string>(f.at("form"), "form"), parse_field_form);
    if (f.contains("N")) cfg.field.N = get_as<int>(f.at("N"), "N");
    if (f.contains("fourier_a")) cfg.field.fourier_a = parse_terms(f.at("fourier_a"), "fourier_a");
    if (f.contains("fourier_b")) cfg.field.fourier_b = parse_terms(f.at("fourier_b"), "fourier_b");
  }
  if (j.contains("k")) cfg.k = get_as<int>(j.at("k"), "k");
  if (j.contains("q")) cfg.q = get_as<std::vector<double>>(j.at("q"), "q");
  if (j.contains("p")) cfg.p = get_as<std::vector<double>>(j.at("p"), "p");
  if (j.contains("samples")) cfg.samples = get_as<long>(j.at("samples"), "samples");
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("method")) cfg.method = parse_enum(get_as<std::string>(j.at("method"), "method"), parse_aggregation);
  if (j.contains("blocks")) cfg.blocks = get_as<int>(j.at("blocks"), "blocks");
  if (j.contains("steps")) cfg.steps = get_as<int>(j.at("steps"), "steps");
  if (j.contains("grid")) cfg.grid = get_as<int>(j.at("grid"), "grid");
  if (j.contains("format")) cfg.format = get_as<std::string>(j.at("format"), "format");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  apply_json(cfg, j);
}

bool uses_points(const std::string& command) { return command == "verify-z" || command == "analytic-z"; }

void resolve_points(RunConfig& cfg, bool k_given) {
  if (!cfg.q.empty() || !cfg.p.empty()) {
    if (cfg.q.size() != cfg.p.size()) throw ConfigError("q and p must have the same length");
    if (k_given && static_cast<int>(cfg.q.size()) != cfg.k) throw ConfigError("k does not match the point lists");
    cfg.k = static_cast<int>(cfg.q.size());
    return;
  }
  const bool aiii = cfg.field.cls == SymmetryClass::AIII;
  if (cfg.k == 1) {
    cfg.q = {aiii ? 0.5 : 1.1};
    cfg.p = {aiii ? 0.9 : 0.3};
  } else if (cfg.k == 2) {
    cfg.q = aiii ? std::vector<double>{0.1, 0.7} : std::vector<double>{0.4, 1.3};
    cfg.p = aiii ? std::vector<double>{0.3, 1.2} : std::vector<double>{0.2, 0.9};
  } else {
    throw ConfigError("default points exist for k = 1 and 2 only; give q and p explicitly");
  }
}

void validate(RunConfig& cfg) {
  if (cfg.field.N < 1) throw ConfigError("N must be positive");
  if (cfg.field.form == FieldForm::Fourier) {
    if (cfg.field.fourier_a.empty() && cfg.field.fourier_b.empty()) {
      throw ConfigError("a fourier field needs fourier_a or fourier_b terms");
    }
  } else if (!cfg.field.fourier_a.empty() || !cfg.field.fourier_b.empty()) {
    throw ConfigError("fourier_a/fourier_b are only valid with form 'fourier'");
  }
  if (cfg.samples < 1) throw ConfigError("samples must be positive");
  if (cfg.blocks < 1) throw ConfigError("blocks must be positive");
  if (cfg.steps < 1) throw ConfigError("steps must be positive");
  if (cfg.grid < 16) throw ConfigError("grid must be at least 16");
  if (cfg.k < 0) throw ConfigError("k must be nonnegative");

  const bool tabular = cfg.command == "spectral-flow" || cfg.command == "polys";
  if (cfg.format.empty()) cfg.format = tabular ? "csv" : "json";
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
  if (cfg.format == "csv" && (cfg.command == "verify-z" || cfg.command == "analytic-z")) {
    throw ConfigError(cfg.command + " writes JSON reports only");
  }
}

ordered_json resolved_json(const RunConfig& cfg) {
  ordered_json field{{"class", std::string(to_string(cfg.field.cls))},
                     {"form", std::string(to_string(cfg.field.form))},
                     {"N", cfg.field.N}};
  if (cfg.field.form == FieldForm::Fourier) {
    field["fourier_a"] = terms_json(cfg.field.fourier_a);
    field["fourier_b"] = terms_json(cfg.field.fourier_b);
  }
  ordered_json j{{"command", cfg.command}, {"field", field}};
  const std::string& c = cfg.command;
  if (uses_points(c)) {
    j["k"] = cfg.k;
    j["q"] = cfg.q;
    j["p"] = cfg.p;
  }
  if (c == "verify-z" || c == "winding-hist" || c == "selftest") j["samples"] = cfg.samples;
  if (c == "verify-z") {
    j["method"] = std::string(to_string(cfg.method));
    j["blocks"] = cfg.blocks;
  }
  if (c == "spectral-flow") j["steps"] = cfg.steps;
  if (c == "winding-hist") j["grid"] = cfg.grid;
  j["seed"] = cfg.seed;
  j["format"] = cfg.format;
  return j;
}

ordered_json envelope(const RunConfig& cfg) {
  return ordered_json{{"tool", "chiralwind"}, {"version", kVersion}, {"config", resolved_json(cfg)}};
}

std::string csv_preamble(const RunConfig& cfg) {
  return std::string("# tool: chiralwind ") + kVersion + "\n# config: " + resolved_json(cfg).dump() +
         "\n# seed: " + std::to_string(cfg.seed) + "\n";
}

// ---- commands -----------------------------------------------------------

int cmd_spectral_flow(const RunConfig& cfg, std::ostream& out) {
  const CoefficientField field = cfg.field.build();
  RandomStream rng(cfg.seed, 0);
  const EnsembleSample sample = sample_pair(field.cls(), field.N(), rng);
  const auto rows = spectral_flow(field, sample, cfg.steps);
  if (cfg.format == "json") {
    ordered_json j = envelope(cfg);
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json k = ordered_json::array();
      for (const Complex z : r.k_eigenvalues) k.push_back({z.real(), z.imag()});
      arr.push_back({{"p", r.p}, {"h", r.h_eigenvalues}, {"k", k}, {"det", {r.det_k.real(), r.det_k.imag()}}});
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << csv_preamble(cfg) << "p";
  const std::size_t nh = rows.front().h_eigenvalues.size();
  const std::size_t nk = rows.front().k_eigenvalues.size();
  for (std::size_t i = 0; i < nh; ++i) out << ",h" << i;
  for (std::size_t i = 0; i < nk; ++i) out << ",k" << i << "_re,k" << i << "_im";
  out << ",det_re,det_im\n";
  for (const auto& r : rows) {
    out << num(r.p);
    for (double h : r.h_eigenvalues) out << ',' << num(h);
    for (const Complex z : r.k_eigenvalues) out << ',' << num(z.real()) << ',' << num(z.imag());
    out << ',' << num(r.det_k.real()) << ',' << num(r.det_k.imag()) << '\n';
  }
  return kPass;
}

int cmd_verify_z(const RunConfig& cfg, std::ostream& out) {
  const CoefficientField field = cfg.field.build();
  const PointSets pts{cfg.q, cfg.p};
  const Complex analytic = analytic_zkk(field, pts);
  McOptions opts;
  opts.n_samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.method = cfg.method;
  opts.blocks = cfg.blocks;
  const Estimate e = mc_partition(field, pts, opts);
  const double dev = std::abs(e.mean - analytic);
  const bool pass = dev <= std::max(kVerifySigmas * e.standard_error, kExactFloor * std::abs(analytic));
  const double z = e.standard_error > 0.0 ? dev / e.standard_error : (pass ? 0.0 : INFINITY);

  ordered_json j = envelope(cfg);
  j["analytic"] = complex_json(analytic);
  j["estimate"] = {{"mean", complex_json(e.mean)},
                   {"stderr", e.standard_error},
                   {"method", std::string(to_string(e.method))},
                   {"blocks", e.blocks},
                   {"n_samples", e.n_samples},
                   {"rejected", e.rejected},
                   {"seed", e.seed},
                   {"plain_mean", complex_json(e.plain_mean)},
                   {"plain_stderr", e.plain_standard_error},
                   {"mom_mean", complex_json(e.mom_mean)},
                   {"mom_stderr", e.mom_standard_error}};
  j["z_score"] = z;
  j["threshold_sigmas"] = kVerifySigmas;
  j["pass"] = pass;
  out << j.dump(2) << "\n";
  return pass ? kPass : kVerificationFailed;
}

int cmd_winding_hist(const RunConfig& cfg, std::ostream& out) {
  const CoefficientField field = cfg.field.build();
  const WindingHistogram h = winding_samples(field, cfg.samples, cfg.seed, cfg.grid);
  if (cfg.format == "json") {
    ordered_json j = envelope(cfg);
    ordered_json counts = ordered_json::object();
    for (const auto& [w, c] : h.counts) counts[std::to_string(w)] = c;
    j["counts"] = counts;
    j["n_samples"] = h.n_samples;
    j["rejected"] = h.rejected;
    j["disagreements"] = h.disagreements;
    j["seed"] = h.seed;
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << csv_preamble(cfg) << "# n_samples: " << h.n_samples << "\n# rejected: " << h.rejected
      << "\n# disagreements: " << h.disagreements << "\nW,count\n";
  for (const auto& [w, c] : h.counts) out << w << ',' << c << '\n';
  return kPass;
}

int cmd_analytic_z(const RunConfig& cfg, std::ostream& out) {
  const CoefficientField field = cfg.field.build();
  ordered_json j = envelope(cfg);
  j["value"] = complex_json(analytic_zkk(field, PointSets{cfg.q, cfg.p}));
  out << j.dump(2) << "\n";
  return kPass;
}

int cmd_polys(const RunConfig& cfg, std::ostream& out) {
  const int N = cfg.field.N;
  if (cfg.format == "json") {
    ordered_json j = envelope(cfg);
    ordered_json q = ordered_json::array(), h = ordered_json::array();
    for (int n = 0; n < N; ++n) {
      q.push_back(skew_poly_even_coeffs(n, N));
      h.push_back(skew_norm(n, N));
    }
    j["q_even_coefficients"] = q;
    j["h"] = h;
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << csv_preamble(cfg) << "kind,index,power,value\n";
  for (int n = 0; n < N; ++n) {
    const auto& c = skew_poly_even_coeffs(n, N);
    for (int m = 0; m <= n; ++m) out << "q," << n << ',' << 2 * m << ',' << num(c[m]) << '\n';
  }
  for (int j = 0; j < N; ++j) out << "h," << j << ",," << num(skew_norm(j, N)) << '\n';
  return kPass;
}

struct SelfCheck {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  std::vector<SelfCheck> checks;
  auto add = [&](std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    const auto f = CoefficientField::trig(SymmetryClass::AIII, 3);
    double worst = 0.0;
    for (double q : {-1.0, 0.2, 2.5}) {
      for (double p : {0.4, 1.9}) {
        const double expect = std::pow(std::cos(q - p), 3);
        worst = std::max(worst, std::abs(aiii_z11(f, q, p) - expect) / std::abs(expect));
      }
    }
    add("aiii-trig-identity", worst <= 1e-12, "max rel " + num(worst));
  }
  {
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N) {
      for (int j = 0; j < N; ++j) {
        const auto& c = skew_poly_even_coeffs(j, N);
        double mixed = 0.0;
        for (int m = 0; m <= j; ++m) mixed += c[m] * monomial_skew_product(2 * m + 1, 2 * j + 2, N) / 2.0;
        worst = std::max(worst, std::abs(mixed - skew_norm(j, N)) / skew_norm(j, N));
      }
    }
    add("skew-orthogonality", worst <= 1e-10, "max rel " + num(worst));
  }
  {
    bool exact = true;
    for (int n = 0; n <= 34; ++n) exact = exact && lerch_phi(n, 0.0) == Complex(1.0 / (n + 1.0), 0.0);
    const Complex z{0.6, 0.3};
    const double diff = std::abs(lerch_phi_series(4, z) - lerch_phi_log(4, z)) / std::abs(lerch_phi_log(4, z));
    add("lerch", exact && diff <= 1e-12, "series vs log rel " + num(diff));
  }
  {
    const auto f = CoefficientField::trig_tr(SymmetryClass::CII, 2);
    const PointSets pts{{0.4, 1.3}, {0.2, 0.9}};
    const Complex a = cii_zkk(f, pts, KernelGauge::Results);
    const Complex b = cii_zkk(f, pts, KernelGauge::Derivation);
    const double diff = std::abs(a - b) / std::abs(a);
    add("cii-gauge-agreement", diff <= 1e-9, "rel " + num(diff));
  }
  {
    const int N = 3;
    EnsembleSample s;
    s.cls = SymmetryClass::AIII;
    s.K1 = ComplexMatrix::Identity(N, N);
    s.K2 = Complex{0.0, 1.0} * ComplexMatrix::Identity(N, N);
    const WindingResult r = winding_number(CoefficientField::trig(SymmetryClass::AIII, N), s);
    add("winding-phase-field", r.W == N, "W = " + std::to_string(r.W));
  }
  {
    RandomStream rng(cfg.seed, 0);
    const ComplexMatrix g = sample_ginibre_complex(6, rng);
    const ComplexMatrix a = g - g.transpose();
    const Complex pf = pfaffian(a);
    const Complex det = logdet(a).value();
    const double diff = std::abs(pf * pf - det) / std::abs(det);
    add("pfaffian-squared", diff <= 1e-10, "rel " + num(diff));
  }
  {
    const auto f = CoefficientField::trig(SymmetryClass::AIII, 2);
    McOptions opts;
    opts.n_samples = cfg.samples;
    opts.seed = cfg.seed;
    const Estimate e = mc_partition(f, PointSets{{0.5}, {0.9}}, opts);
    const double expect = std::pow(std::cos(0.4), 2);
    const double zscore = std::abs(e.mean - expect) / e.standard_error;
    add("aiii-monte-carlo", zscore <= kVerifySigmas, "z = " + num(zscore));
  }

  bool all = true;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    all = all && c.pass;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all ? kPass : kVerificationFailed;
}

}  // namespace

CoefficientField FieldSpec::build() const {
  switch (form) {
    case FieldForm::Trig:
      return CoefficientField::trig(cls, N);
    case FieldForm::TrigTr:
      return CoefficientField::trig_tr(cls, N);
    case FieldForm::Fourier:
      return CoefficientField::fourier(cls, N, fourier_a, fourier_b);
  }
  throw ConfigError("unknown field form");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random matrix fields with chiral symmetry: spectral flow, winding numbers and "
               "determinant-ratio averages"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);

  std::string config_path, cls, form, method, format, out_path;
  int N = 0, k = 0, blocks = 0, steps = 0, grid = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> q, p;

  const char* commands[][2] = {
      {"spectral-flow", "Eigenvalues of H(p) and K(p) and det K(p) along p in [0, 2pi]"},
      {"verify-z", "Compare the closed-form partition function with Monte Carlo"},
      {"winding-hist", "Histogram of winding numbers over random samples"},
      {"analytic-z", "Evaluate the closed-form partition function"},
      {"polys", "Skew-orthogonal polynomial coefficients and norms"},
      {"selftest", "Quick internal consistency checks"},
  };
  std::map<std::string, CLI::Option*> opt;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    opt["config"] = sub->add_option("--config", config_path, "JSON configuration file");
    opt["class"] = sub->add_option("--class", cls, "Symmetry class: AIII or CII");
    opt["form"] = sub->add_option("--form", form, "Field form: trig, trig-tr or fourier");
    opt["n"] = sub->add_option("--n", N, "Matrix size parameter N");
    opt["k"] = sub->add_option("--k", k, "Number of point pairs");
    opt["q"] = sub->add_option("--q", q, "Denominator points, comma separated")->delimiter(',');
    opt["p"] = sub->add_option("--p", p, "Numerator points, comma separated")->delimiter(',');
    opt["samples"] = sub->add_option("--samples", samples, "Monte Carlo samples");
    opt["seed"] = sub->add_option("--seed", seed, "Random seed");
    opt["method"] = sub->add_option("--method", method, "plain-mean or median-of-means");
    opt["blocks"] = sub->add_option("--blocks", blocks, "Median-of-means blocks");
    opt["steps"] = sub->add_option("--steps", steps, "Spectral-flow steps over [0, 2pi]");
    opt["grid"] = sub->add_option("--grid", grid, "Winding-number grid points");
    opt["out"] = sub->add_option("--out", out_path, "Output file (default: standard output)");
    opt["format"] = sub->add_option("--format", format, "csv or json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto given = [&](const char* name) { return sub->get_option(std::string("--") + name)->count() > 0; };

  RunConfig cfg;
  cfg.command = sub->get_name();
  if (cfg.command == "selftest") cfg.samples = kSelftestSamples;
  try {
    if (given("config")) load_config_file(cfg, config_path);
    if (given("class")) cfg.field.cls = parse_enum(cls, parse_symmetry_class);
    if (given("form")) cfg.field.form = parse_enum(form, parse_field_form);
    if (given("n")) cfg.field.N = N;
    if (given("k")) cfg.k = k;
    if (given("q")) cfg.q = q;
    if (given("p")) cfg.p = p;
    if (given("samples")) cfg.samples = samples;
    if (given("seed")) cfg.seed = seed;
    if (given("method")) cfg.method = parse_enum(method, parse_aggregation);
    if (given("blocks")) cfg.blocks = blocks;
    if (given("steps")) cfg.steps = steps;
    if (given("grid")) cfg.grid = grid;
    if (given("format")) cfg.format = format;
    if (given("out")) cfg.out = out_path;
    if (uses_points(cfg.command)) resolve_points(cfg, given("k"));
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  std::ostringstream buffer;
  int code = kPass;
  try {
    if (cfg.command == "spectral-flow") code = cmd_spectral_flow(cfg, buffer);
    if (cfg.command == "verify-z") code = cmd_verify_z(cfg, buffer);
    if (cfg.command == "winding-hist") code = cmd_winding_hist(cfg, buffer);
    if (cfg.command == "analytic-z") code = cmd_analytic_z(cfg, buffer);
    if (cfg.command == "polys") code = cmd_polys(cfg, buffer);
    if (cfg.command == "selftest") code = cmd_selftest(cfg, buffer);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return kConfigError;
    }
  }
  return code;
}

}  // namespace chiral::cli
