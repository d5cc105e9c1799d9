#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "berezin/errors.hpp"
#include "berezin/fieldgrid.hpp"
#include "berezin/fieldio.hpp"
#include "berezin/kernels.hpp"
#include "berezin/multiplier.hpp"
#include "berezin/specfun.hpp"
#include "berezin/verify.hpp"

using namespace berezin;

namespace {

enum class Command { Kernel, Multiplier, Apply, Field, Identities, Verify, Specfun };

struct RunConfig {
  Command command = Command::Verify;
  std::vector<std::string> argv;  // echoed into the .meta.json sidecar

  int m = 0;
  int n = 1;

  // kernel
  std::vector<double> z;
  std::vector<std::vector<double>> w;
  // multiplier
  double lambda_max = 8.0;
  int samples = 3;
  std::string mode = "theorem";
  // apply / field
  std::string method = "spectral";
  std::string input;
  int points = 256;
  double half_width = 8.0;
  std::string slice;
  // verify
  std::string suite = "all";
  int m_max = 5;
  int jobs = 1;
  // specfun
  std::string function = "laguerre";
  int degree = 0;
  double alpha = 0.0;
  double x = 0.0;

  std::string output;  // empty: standard output
};

// Exit statuses
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void write_meta(const RunConfig& cfg, const std::string& path) {
  std::string meta = "{\"format_version\":" + std::to_string(fieldio::kFieldFormatVersion) + ",\"argv\":[";
  for (std::size_t i = 0; i < cfg.argv.size(); ++i) meta += (i ? ",\"" : "\"") + json_escape(cfg.argv[i]) + '"';
  meta += "]}\n";
  fieldio::write_atomic(path + ".meta.json", meta);
}

// Data goes to --out atomically (plus the sidecar), or to stdout.
void emit(const RunConfig& cfg, const std::string& contents) {
  if (cfg.output.empty()) {
    std::cout << contents;
    return;
  }
  fieldio::write_atomic(cfg.output, contents);
  write_meta(cfg, cfg.output);
}

kernels::ComplexPoint to_point(const std::vector<double>& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != 2 * n) {
    throw DomainError(std::string(what) + " needs " + std::to_string(2 * n) + " real coordinates for n = " + std::to_string(n));
  }
  std::vector<kernels::cplx> c;
  for (int j = 0; j < n; ++j) c.emplace_back(v[2 * j], v[2 * j + 1]);
  return kernels::ComplexPoint(std::move(c));
}

void require_level(const RunConfig& cfg, int max_n) {
  if (cfg.m < 0) throw DomainError("--m must be non-negative");
  if (cfg.n < 1 || cfg.n > max_n) throw DomainError("--n must lie in [1, " + std::to_string(max_n) + "]");
}

int run_kernel(const RunConfig& cfg) {
  require_level(cfg, 4);
  const auto z = to_point(cfg.z, cfg.n, "--z");
  std::vector<std::string> header;
  for (int j = 1; j <= cfg.n; ++j) {
    header.push_back("w" + std::to_string(j) + "_re");
    header.push_back("w" + std::to_string(j) + "_im");
  }
  for (const char* h : {"b_m", "K_re", "K_im", "e_re", "e_im"}) header.emplace_back(h);
  const kernels::RadialKernel k{cfg.m, cfg.n};
  std::vector<std::vector<double>> rows;
  for (const auto& wv : cfg.w) {
    const auto w = to_point(wv, cfg.n, "--w");
    std::vector<double> row = wv;
    const auto K = kernels::kernel_K(cfg.m, cfg.n, z, w);
    const auto e = kernels::coherent_state(cfg.m, cfg.n, z, w);
    row.insert(row.end(), {kernels::kernel_b(k, distance2(z, w)), K.real(), K.imag(), e.real(), e.imag()});
    rows.push_back(std::move(row));
  }
  emit(cfg, fieldio::to_csv(header, rows));
  return kOk;
}

int run_multiplier(const RunConfig& cfg) {
  require_level(cfg, 4);
  if (cfg.samples < 2) throw DomainError("--samples must be at least 2");
  if (!(cfg.lambda_max > 0.0)) throw DomainError("--lambda-max must be positive");
  multiplier::Mode mode = multiplier::Mode::Theorem;
  if (cfg.mode == "square") mode = multiplier::Mode::Square;
  else if (cfg.mode == "exact") mode = multiplier::Mode::ExactPoly;
  const multiplier::MultiplierFn f(cfg.m, cfg.n, mode);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < cfg.samples; ++i) {
    const double lambda = cfg.lambda_max * i / (cfg.samples - 1);
    rows.push_back({lambda, multiplier::eval_multiplier(f, lambda)});
  }
  emit(cfg, fieldio::to_csv({"lambda", "f_m"}, rows));
  return kOk;
}

void write_field_outputs(const RunConfig& cfg, const fieldgrid::Field& f) {
  if (cfg.output.empty()) throw DomainError("--output is required");
  fieldio::save_field(cfg.output, f);
  write_meta(cfg, cfg.output);
  if (!cfg.slice.empty()) fieldio::write_atomic(cfg.slice, fieldio::slice_csv(f, 0));
}

int run_apply(const RunConfig& cfg) {
  if (cfg.m < 0) throw DomainError("--m must be non-negative");
  const fieldgrid::Field f = fieldio::load_field(cfg.input);
  const fieldgrid::Field out =
      cfg.method == "conv" ? fieldgrid::apply_berezin_conv(cfg.m, f) : fieldgrid::apply_berezin_spectral(cfg.m, f);
  write_field_outputs(cfg, out);
  return kOk;
}

int run_field(const RunConfig& cfg) {
  const fieldgrid::GridSpec g{cfg.n, cfg.points, cfg.half_width};
  g.validate();
  const auto f = fieldgrid::sample_radial(g, [](double r2) { return std::exp(-r2); });
  write_field_outputs(cfg, f);
  return kOk;
}

int run_suite(const RunConfig& cfg, verify::Suite suite) {
  if (cfg.m_max < 0) throw DomainError("--m-max must be non-negative");
  if (cfg.jobs < 1) throw DomainError("--jobs must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = verify::run_suite(suite, {cfg.m_max, cfg.jobs});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << verify::format_table(results);
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (suite == verify::Suite::All) {
    const auto missing = verify::uncovered_operations(results, {"cli.run"});
    std::cout << "coverage: " << verify::operation_manifest().size() - missing.size() << "/"
              << verify::operation_manifest().size() << " operations exercised\n";
    for (const auto& op : missing) std::cout << "  not exercised: " << op << '\n';
    ok = ok && missing.empty();
  }
  std::fprintf(stderr, "suite %s finished in %.1f s\n", std::string(verify::suite_name(suite)).c_str(), secs);
  if (!cfg.output.empty()) {
    fieldio::write_atomic(cfg.output, verify::format_csv(results));
    write_meta(cfg, cfg.output);
  }
  return ok ? kOk : kVerificationFailed;
}

int run_specfun(const RunConfig& cfg) {
  double v;
  if (cfg.function == "laguerre") v = specfun::laguerre({cfg.degree, cfg.alpha}, cfg.x);
  else if (cfg.function == "bessel_j") v = specfun::bessel_j(cfg.degree, cfg.x);
  else if (cfg.function == "pochhammer") v = specfun::pochhammer({cfg.x, cfg.degree});
  else v = specfun::binomial(cfg.x, cfg.degree);
  std::cout << fieldio::format_double(v) << '\n';
  return kOk;
}

int run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Kernel: return run_kernel(cfg);
    case Command::Multiplier: return run_multiplier(cfg);
    case Command::Apply: return run_apply(cfg);
    case Command::Field: return run_field(cfg);
    case Command::Identities: return run_suite(cfg, verify::Suite::Identities);
    case Command::Verify: return run_suite(cfg, verify::parse_suite(cfg.suite));
    case Command::Specfun: return run_specfun(cfg);
  }
  return kUsage;
}

std::vector<double> parse_coords(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("cannot read coordinate '" + item + "' in '" + s + "'");
    }
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.argv.assign(argv + 1, argv + argc);

  CLI::App app{"Berezin transforms on Bargmann-Fock spaces: kernels, multipliers, field operators and checks"};
  app.require_subcommand(1);

  auto* kernel = app.add_subcommand("kernel", "Evaluate b_m(z-w), K_m(z,w) and e_{z,m}(w) (CSV)");
  std::string z_text;
  std::vector<std::string> w_text;
  kernel->add_option("--m", cfg.m, "Landau level")->required();
  kernel->add_option("--n", cfg.n, "Complex dimension (1..4)");
  kernel->add_option("--z", z_text, "Base point z as re1,im1[,re2,im2,...]")->required();
  kernel->add_option("--w", w_text, "Evaluation point(s) w, repeatable")->required();
  kernel->add_option("--out", cfg.output, "Output CSV (default: stdout)");

  auto* mult = app.add_subcommand("multiplier", "Tabulate f_m on [0, lambda-max] (CSV lambda,f_m)");
  mult->add_option("--m", cfg.m)->required();
  mult->add_option("--n", cfg.n);
  mult->add_option("--lambda-max", cfg.lambda_max);
  mult->add_option("--samples", cfg.samples);
  mult->add_option("--mode", cfg.mode)->check(CLI::IsMember({"theorem", "square", "exact"}));
  mult->add_option("--out", cfg.output);

  auto* apply = app.add_subcommand("apply", "Apply B_m to a field file");
  apply->add_option("--m", cfg.m)->required();
  apply->add_option("--method", cfg.method)->check(CLI::IsMember({"conv", "spectral"}));
  apply->add_option("--input", cfg.input)->required();
  apply->add_option("--output", cfg.output)->required();
  apply->add_option("--slice-csv", cfg.slice, "Also write the x-axis slice through the centre");

  auto* field = app.add_subcommand("field", "Write a sampled field file");
  auto* gauss = field->add_subcommand("gaussian", "exp(-|w|^2) on a grid");
  field->require_subcommand(1);
  gauss->add_option("--n", cfg.n);
  gauss->add_option("--points", cfg.points, "Points per axis (power of two)");
  gauss->add_option("--half-width", cfg.half_width);
  gauss->add_option("--output", cfg.output)->required();
  gauss->add_option("--slice-csv", cfg.slice);

  auto* ident = app.add_subcommand("identities", "Exact identity checks (pass/fail table)");
  ident->add_option("--m-max", cfg.m_max);
  ident->add_option("--jobs", cfg.jobs);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"identities", "integrals", "multiplier", "operator", "eigen", "all"}));
  ver->add_option("--m-max", cfg.m_max);
  ver->add_option("--jobs", cfg.jobs);
  ver->add_option("--out", cfg.output, "Also write the results as CSV");

  auto* sf = app.add_subcommand("specfun", "Special-function evaluation");
  auto* eval = sf->add_subcommand("eval", "Print one value");
  sf->require_subcommand(1);
  eval->add_option("--fn", cfg.function)->check(CLI::IsMember({"laguerre", "bessel_j", "pochhammer", "binomial"}));
  eval->add_option("--degree", cfg.degree, "Degree, order, count or lower index");
  eval->add_option("--alpha", cfg.alpha, "Laguerre superscript");
  eval->add_option("--x", cfg.x, "Argument (base for pochhammer, top for binomial)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kernel) {
      cfg.command = Command::Kernel;
      cfg.z = parse_coords(z_text);
      for (const auto& w : w_text) cfg.w.push_back(parse_coords(w));
    } else if (*mult) {
      cfg.command = Command::Multiplier;
    } else if (*apply) {
      cfg.command = Command::Apply;
    } else if (*field) {
      cfg.command = Command::Field;
    } else if (*ident) {
      cfg.command = Command::Identities;
    } else if (*ver) {
      cfg.command = Command::Verify;
    } else {
      cfg.command = Command::Specfun;
    }
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
