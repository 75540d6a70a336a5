// Command line surface: compute/compare recurrence coefficient tables, emit
// figure data, run the sensitivity and shooting experiments, and drive the
// certification suites.
//
// Exit codes: 0 success, 1 usage error, 2 singular trajectory, 3 certification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkraw/certify.hpp"

using json = nlohmann::ordered_json;
using namespace gkraw;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitSingular = 2;
constexpr int kExitCertification = 3;

mpfr_prec_t default_bits() {
  if (const char* env = std::getenv("GKRAW_DEFAULT_PREC")) {
    long v = std::atol(env);
    if (v >= 2) return static_cast<mpfr_prec_t>(v);
  }
  return 512;
}

struct Mode {
  bool exact = true;
  mpfr_prec_t bits = 512;
  std::string tag() const { return exact ? "exact" : "float:" + std::to_string(static_cast<long>(bits)); }
};

Mode parse_mode(const std::string& text) {
  if (text == "exact") return {true, 0};
  if (text == "float") return {false, default_bits()};
  if (text.rfind("float:", 0) == 0) {
    long bits = std::atol(text.substr(6).c_str());
    if (bits < 2) throw domain_error("float precision must be at least 2 bits: " + text);
    return {false, static_cast<mpfr_prec_t>(bits)};
  }
  throw domain_error("mode must be 'exact' or 'float:P', got '" + text + "'");
}

WeightParams make_params(long N, const std::string& alpha, const std::string& c, const Mode& mode) {
  WeightParams p(N, Scalar::parse_exact(alpha), Scalar::parse_exact(c));
  return mode.exact ? p : p.to_float(mode.bits);
}

std::string render(const Scalar& v, bool exact, int digits) {
  return exact ? v.str() : v.decimal(digits);
}

json coeff_document(const WeightParams& exact_params, const Mode& mode,
                    const JacobiCoefficients& jc, int digits) {
  json doc;
  doc["params"] = {{"N", exact_params.N},
                   {"alpha", exact_params.alpha.str()},
                   {"c", exact_params.c.str()}};
  doc["mode"] = mode.tag();
  json rows = json::array();
  for (long n = 0; n <= jc.N + 1; ++n) {
    json row;
    row["n"] = n;
    row["a_sq"] = render(jc.a_sq[n], mode.exact, digits);
    if (n <= jc.N) row["b"] = render(jc.b[n], mode.exact, digits);
    rows.push_back(std::move(row));
  }
  doc["coeffs"] = std::move(rows);
  return doc;
}

std::string coeff_csv(const JacobiCoefficients& jc, int digits) {
  std::ostringstream os;
  os << "n,a_sq,b\n";
  for (long n = 0; n <= jc.N + 1; ++n) {
    os << n << "," << jc.a_sq[n].decimal(digits) << ",";
    if (n <= jc.N) os << jc.b[n].decimal(digits);
    os << "\n";
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw domain_error("cannot open output file " + out_path);
  f << text;
}

JacobiCoefficients compute_table(const WeightParams& p, const std::string& method) {
  if (method == "dpsystem") return trajectory(p);
  if (method == "stieltjes") return stieltjes(p);
  throw domain_error("method must be dpsystem or stieltjes, got '" + method + "'");
}

// Rational square root of c when c is a perfect square; otherwise a nearby
// dyadic rational approximation (the Cosgrove grid needs an exact z with c = z^2).
Scalar rational_near_sqrt(const Scalar& c) {
  const auto* q = c.rat().raw();
  mpz_t num_root, den_root;
  mpz_init(num_root);
  mpz_init(den_root);
  bool square = mpz_perfect_square_p(mpq_numref(q)) && mpz_perfect_square_p(mpq_denref(q));
  Scalar out = c;
  if (square) {
    mpz_sqrt(num_root, mpq_numref(q));
    mpz_sqrt(den_root, mpq_denref(q));
    Rational r;
    mpq_set_num(r.raw(), num_root);
    mpq_set_den(r.raw(), den_root);
    mpq_canonicalize(r.raw());
    out = Scalar(std::move(r));
  } else {
    double approx = std::sqrt(c.to_double());
    long scaled = std::lround(approx * 64.0);
    out = Scalar(Rational(scaled, 64));
  }
  mpz_clear(num_root);
  mpz_clear(den_root);
  return out;
}

struct FigureSpec {
  int id;
  long N;
  const char* alpha;
  const char* c;
};

constexpr FigureSpec kFigures[] = {
    {1, 80, "-1", "2"},
    {2, 80, "4/5", "2"},
    {3, 80, "-1", "30"},
    {4, 80, "-2000", "1000"},
};

int run_certify_command(const WeightParams& p, long n, const std::vector<std::string>& suites,
                        mpfr_prec_t bits, int levels, const std::string& z0_str,
                        const std::string& tamper_str, unsigned kummer_count, unsigned seed,
                        const std::string& limit_p, const std::string& limit_s) {
  std::optional<Scalar> tamper;
  if (!tamper_str.empty()) tamper = Scalar::parse_exact(tamper_str);

  json doc;
  doc["params"] = {{"N", p.N}, {"alpha", p.alpha.str()}, {"c", p.c.str()}};
  doc["n"] = n;
  json out_suites = json::array();
  bool all_passed = true;

  for (const auto& name : suites) {
    SuiteReport rep;
    if (name == "compat") {
      rep = certify_compat(p);
    } else if (name == "toda") {
      rep = certify_toda(p, n, levels >= 5 ? levels : 5);
    } else if (name == "p5") {
      rep = certify_p5(p, n, bits, levels, tamper);
    } else if (name == "cosgrove") {
      Scalar z0 = z0_str.empty() ? rational_near_sqrt(p.c) : Scalar::parse_exact(z0_str);
      rep = certify_cosgrove(p.N, p.alpha, n, z0, levels, tamper);
      rep.add("z-grid", true, "z0 = " + z0.str() + ", certified at c = " + (z0 * z0).str());
    } else if (name == "kummer") {
      rep = certify_kummer(kummer_count, seed);
    } else if (name == "limit") {
      std::vector<long> ladder;
      std::stringstream ss{limit_s};
      for (std::string tok; std::getline(ss, tok, ',');) ladder.push_back(std::atol(tok.c_str()));
      if (ladder.empty()) throw domain_error("empty limit ladder");
      rep = certify_limit(p.N, Scalar::parse_exact(limit_p), ladder);
    } else {
      throw domain_error("unknown suite '" + name + "'");
    }
    json js;
    js["suite"] = rep.suite.empty() ? name : rep.suite;
    js["passed"] = rep.passed;
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    js["checks"] = std::move(checks);
    out_suites.push_back(std::move(js));
    all_passed = all_passed && rep.passed;
  }
  doc["suites"] = std::move(out_suites);
  doc["passed"] = all_passed;
  std::cout << doc.dump(2) << "\n";
  return all_passed ? 0 : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recurrence coefficients of the semi-classical Krawtchouk weight: "
               "two independent computations, experiments, and structure certification"};
  app.require_subcommand(1);

  long N = 1;
  std::string alpha = "0", c = "1", mode_str = "exact", method = "dpsystem";
  std::string format = "json", out_path;
  int digits = 12;

  auto add_params = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("--N", N, "lattice size (support {0..N})")->required();
    cmd->add_option("--alpha", alpha, "weight parameter alpha < 1 (rational or decimal)")->required();
    cmd->add_option("--c", c, "weight parameter c > 0 (rational or decimal)")->required();
    if (with_mode) cmd->add_option("--mode", mode_str, "exact | float:P (default exact)");
  };

  auto* cmd_compute = app.add_subcommand("compute", "compute the coefficient table a_n^2, b_n");
  add_params(cmd_compute);
  cmd_compute->add_option("--method", method, "dpsystem | stieltjes");
  cmd_compute->add_option("--format", format, "json | csv");
  cmd_compute->add_option("--digits", digits, "decimal digits for float/csv rendering");
  cmd_compute->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_compare = app.add_subcommand("compare", "run both methods and compare entrywise");
  add_params(cmd_compare);

  std::string delta = "1e-100", closure_tol = "1e-20";
  long bits_opt = 0;
  auto* cmd_perturb = app.add_subcommand("perturb", "perturb y_0 and report where the trajectory fails");
  add_params(cmd_perturb, false);
  cmd_perturb->add_option("--delta", delta, "perturbation added to y_0 (default 1e-100)");
  cmd_perturb->add_option("--bits", bits_opt, "float precision (default $GKRAW_DEFAULT_PREC or 512)");
  cmd_perturb->add_option("--closure-tol", closure_tol, "boundary closure tolerance (default 1e-20)");
  cmd_perturb->add_option("--digits", digits, "decimal digits in the profile");

  std::string lo_str, hi_str;
  int scan_points = 512;
  auto* cmd_shoot = app.add_subcommand("shoot", "bisect y_0 so that a_{N+1}^2 = 0");
  add_params(cmd_shoot, false);
  cmd_shoot->add_option("--bits", bits_opt, "float precision (default $GKRAW_DEFAULT_PREC or 512)");
  cmd_shoot->add_option("--lo", lo_str, "bracket lower end (default closed form - 1/2)");
  cmd_shoot->add_option("--hi", hi_str, "bracket upper end (default closed form + 1/2)");
  cmd_shoot->add_option("--scan", scan_points, "scan resolution for sign changes (default 512)");
  cmd_shoot->add_option("--digits", digits, "decimal digits in the report");

  int figure_id = 1;
  std::string outdir = ".";
  auto* cmd_figures = app.add_subcommand("figures", "emit coefficient tables for the standard figures");
  cmd_figures->add_option("--id", figure_id, "figure 1..4")->required();
  cmd_figures->add_option("--outdir", outdir, "output directory (default .)");
  cmd_figures->add_option("--digits", digits, "decimal digits (default 12)");

  long cert_n = -1;
  int levels = 4;
  std::string suites_csv = "compat,toda,p5,cosgrove,kummer,limit";
  std::string z0_str, tamper_str, limit_p = "1/3", limit_s = "500,1000,2000,4000";
  unsigned kummer_count = 20, seed = 20260808;
  auto* cmd_certify = app.add_subcommand("certify", "run certification suites; nonzero exit on failure");
  add_params(cmd_certify, false);
  cmd_certify->add_option("--n", cert_n, "index for toda/p5/cosgrove suites (default N/2)");
  cmd_certify->add_option("--suites", suites_csv, "subset of compat,toda,p5,cosgrove,kummer,limit");
  cmd_certify->add_option("--bits", bits_opt, "float precision for the p5 suite (default 256)");
  cmd_certify->add_option("--levels", levels, "ladder levels for convergence suites (default 4)");
  cmd_certify->add_option("--z0", z0_str, "rational z-grid center for cosgrove (default ~sqrt(c))");
  cmd_certify->add_option("--tamper-y", tamper_str,
                          "negative control: add this to the middle y_n before the residuals");
  cmd_certify->add_option("--kummer-count", kummer_count, "random draws for the kummer suite");
  cmd_certify->add_option("--seed", seed, "random seed for the kummer suite");
  cmd_certify->add_option("--limit-p", limit_p, "Krawtchouk p for the limit suite (default 1/3)");
  cmd_certify->add_option("--limit-s", limit_s, "comma ladder of s values (default 500,1000,2000,4000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_compute) {
      Mode mode = parse_mode(mode_str);
      WeightParams pe = make_params(N, alpha, c, Mode{true, 0});
      WeightParams p = mode.exact ? pe : pe.to_float(mode.bits);
      auto jc = compute_table(p, method);
      if (format == "json")
        emit(coeff_document(pe, mode, jc, digits).dump(2) + "\n", out_path);
      else if (format == "csv")
        emit(coeff_csv(jc, digits), out_path);
      else
        throw domain_error("format must be json or csv");
      return 0;
    }

    if (*cmd_compare) {
      Mode mode = parse_mode(mode_str);
      WeightParams p = make_params(N, alpha, c, mode);
      using Clock = std::chrono::steady_clock;
      auto t0 = Clock::now();
      auto jd = trajectory(p);
      auto t1 = Clock::now();
      auto js = stieltjes(p);
      auto t2 = Clock::now();
      std::cerr << "dpsystem " << std::chrono::duration<double>(t1 - t0).count() << "s, stieltjes "
                << std::chrono::duration<double>(t2 - t1).count() << "s\n";
      if (mode.exact) {
        for (long n = 0; n <= N + 1; ++n) {
          if (!(jd.a_sq[n] == js.a_sq[n])) {
            std::cout << "MISMATCH at n=" << n << " (a_sq): dpsystem=" << jd.a_sq[n].str()
                      << " stieltjes=" << js.a_sq[n].str() << "\n";
            return kExitCertification;
          }
          if (n <= N && !(jd.b[n] == js.b[n])) {
            std::cout << "MISMATCH at n=" << n << " (b): dpsystem=" << jd.b[n].str()
                      << " stieltjes=" << js.b[n].str() << "\n";
            return kExitCertification;
          }
        }
        std::cout << "identical (" << 2 * N + 2 << " entries)\n";
        return 0;
      }
      // float mode: informational divergence report
      Scalar worst = p.zero();
      long worst_n = -1;
      char worst_field = 'a';
      for (long n = 0; n <= N + 1; ++n) {
        Scalar d = (jd.a_sq[n] - js.a_sq[n]).abs();
        if (d > worst) { worst = d; worst_n = n; worst_field = 'a'; }
        if (n <= N) {
          Scalar db = (jd.b[n] - js.b[n]).abs();
          if (db > worst) { worst = db; worst_n = n; worst_field = 'b'; }
        }
      }
      std::cout << "float-mode max |dpsystem - stieltjes| = " << worst.decimal(6)
                << (worst_n >= 0 ? " at n=" + std::to_string(worst_n) + " (" + worst_field + ")" : "")
                << "\n";
      return 0;
    }

    if (*cmd_perturb) {
      mpfr_prec_t bits = bits_opt >= 2 ? static_cast<mpfr_prec_t>(bits_opt) : default_bits();
      WeightParams p = make_params(N, alpha, c, Mode{false, bits});
      Scalar d = Scalar::parse_exact(delta);
      Scalar tol = Scalar::parse_exact(closure_tol).to_float(bits);
      auto rep = run_perturbed(p, d);
      json doc;
      doc["params"] = {{"N", N}, {"alpha", alpha}, {"c", c}};
      doc["mode"] = "float:" + std::to_string(static_cast<long>(bits));
      doc["delta"] = delta;
      doc["closure_tol"] = closure_tol;
      doc["singular"] = rep.singular;
      if (rep.singular) doc["singular_at"] = rep.singular_at;
      doc["first_nonpositive"] = rep.first_nonpositive;
      if (!rep.singular) doc["closure"] = rep.closure.decimal(digits);
      doc["failed"] = rep.failed(tol);
      json profile = json::array();
      for (std::size_t n = 0; n < rep.a_sq.size(); ++n)
        profile.push_back({{"n", n}, {"a_sq", rep.a_sq[n].decimal(digits)}});
      doc["profile"] = std::move(profile);
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (*cmd_shoot) {
      mpfr_prec_t bits = bits_opt >= 2 ? static_cast<mpfr_prec_t>(bits_opt) : default_bits();
      WeightParams p = make_params(N, alpha, c, Mode{false, bits});
      Scalar y0_closed = initial_state(p).y;
      Scalar lo = lo_str.empty() ? y0_closed - Scalar::exact(1, 2).to_float(bits)
                                 : Scalar::parse_exact(lo_str).to_float(bits);
      Scalar hi = hi_str.empty() ? y0_closed + Scalar::exact(1, 2).to_float(bits)
                                 : Scalar::parse_exact(hi_str).to_float(bits);
      auto res = shoot_y0(p, lo, hi, scan_points);
      json doc;
      doc["params"] = {{"N", N}, {"alpha", alpha}, {"c", c}};
      doc["mode"] = "float:" + std::to_string(static_cast<long>(bits));
      doc["bracket"] = {lo.decimal(digits), hi.decimal(digits)};
      doc["closed_form_y0"] = y0_closed.decimal(digits);
      json roots = json::array();
      for (const auto& r : res.roots)
        roots.push_back({{"y0", r.y0.decimal(digits)},
                         {"closure", r.closure.decimal(6)},
                         {"interior_positive", r.interior_positive},
                         {"gap_to_closed_form", (r.y0 - y0_closed).abs().decimal(6)}});
      doc["roots"] = std::move(roots);
      doc["n_roots"] = res.roots.size();
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (*cmd_figures) {
      if (figure_id < 1 || figure_id > 4) throw domain_error("figure id must be 1..4");
      const auto& spec = kFigures[figure_id - 1];
      WeightParams p(spec.N, Scalar::parse_exact(spec.alpha), Scalar::parse_exact(spec.c));
      auto jc = trajectory(p);
      std::string base = outdir + "/figure" + std::to_string(figure_id);
      if (figure_id < 4) {
        emit(coeff_csv(jc, digits), base + ".csv");
        std::cout << "wrote " << base << ".csv (N=" << spec.N << ", alpha=" << spec.alpha
                  << ", c=" << spec.c << ")\n";
      } else {
        emit(coeff_csv(jc, digits), base + "_generalized.csv");
        Scalar kp = Scalar::exact(1, 3);
        std::ostringstream os;
        os << "n,a_sq,b\n";
        for (long n = 0; n <= spec.N + 1; ++n) {
          os << n << "," << krawtchouk_a_sq(spec.N, kp, n).decimal(digits) << ",";
          if (n <= spec.N) os << krawtchouk_b(spec.N, kp, n).decimal(digits);
          os << "\n";
        }
        emit(os.str(), base + "_classical.csv");
        Scalar gap = limit_deviation(spec.N, kp, Scalar(2000L));
        std::cout << "wrote " << base << "_generalized.csv and " << base
                  << "_classical.csv; max relative gap = " << gap.decimal(6) << "\n";
      }
      return 0;
    }

    if (*cmd_certify) {
      WeightParams p = make_params(N, alpha, c, Mode{true, 0});
      long n = cert_n >= 0 ? cert_n : N / 2;
      mpfr_prec_t bits = bits_opt >= 2 ? static_cast<mpfr_prec_t>(bits_opt) : 256;
      std::vector<std::string> suites;
      std::stringstream ss{suites_csv};
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) suites.push_back(tok);
      return run_certify_command(p, n, suites, bits, levels, z0_str, tamper_str, kummer_count,
                                 seed, limit_p, limit_s);
    }
  } catch (const singular_trajectory_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const mode_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
