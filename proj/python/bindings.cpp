#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkraw/certify.hpp"

namespace py = pybind11;
using namespace gkraw;

namespace {

struct Mode {
  bool exact = true;
  mpfr_prec_t bits = 0;
};

Mode parse_mode(const std::string& text) {
  if (text == "exact") return {true, 0};
  if (text.rfind("float:", 0) == 0) {
    long bits = std::atol(text.substr(6).c_str());
    if (bits < 2) throw domain_error("float precision must be at least 2 bits");
    return {false, static_cast<mpfr_prec_t>(bits)};
  }
  throw domain_error("mode must be 'exact' or 'float:P'");
}

WeightParams make_params(long N, const std::string& alpha, const std::string& c,
                         const std::string& mode = "exact") {
  WeightParams p(N, Scalar::parse_exact(alpha), Scalar::parse_exact(c));
  Mode m = parse_mode(mode);
  return m.exact ? p : p.to_float(m.bits);
}

std::string render(const Scalar& v, int digits) {
  return v.is_exact() ? v.str() : v.decimal(digits);
}

py::dict table_dict(const JacobiCoefficients& jc, int digits) {
  py::list a_sq, b;
  for (const auto& v : jc.a_sq) a_sq.append(render(v, digits));
  for (const auto& v : jc.b) b.append(render(v, digits));
  py::dict out;
  out["N"] = jc.N;
  out["a_sq"] = std::move(a_sq);
  out["b"] = std::move(b);
  return out;
}

py::dict report_dict(const SuiteReport& rep) {
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    checks.append(std::move(d));
  }
  py::dict out;
  out["suite"] = rep.suite;
  out["passed"] = rep.passed;
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gkraw, m) {
  m.doc() = "Recurrence coefficients of the semi-classical Krawtchouk weight: exact "
            "computation by two independent methods plus structure certification. "
            "Rationals cross this boundary as 'p/q' strings; float-mode values as "
            "decimal strings.";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<mode_mismatch_error>(m, "ModeMismatchError", PyExc_TypeError);
  py::register_exception<singular_trajectory_error>(m, "SingularTrajectoryError", PyExc_ArithmeticError);

  m.def(
      "compute",
      [](long N, const std::string& alpha, const std::string& c, const std::string& method,
         const std::string& mode, int digits) {
        WeightParams p = make_params(N, alpha, c, mode);
        JacobiCoefficients jc = method == "stieltjes" ? stieltjes(p) : trajectory(p);
        if (method != "stieltjes" && method != "dpsystem")
          throw domain_error("method must be dpsystem or stieltjes");
        return table_dict(jc, digits);
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("method") = "dpsystem",
      py::arg("mode") = "exact", py::arg("digits") = 20,
      "Coefficient table a_n^2 (n = 0..N+1) and b_n (n = 0..N).");

  m.def(
      "initial_xy",
      [](long N, const std::string& alpha, const std::string& c, const std::string& mode) {
        auto s = initial_state(make_params(N, alpha, c, mode));
        return py::make_tuple(render(s.x, 20), render(s.y, 20));
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("mode") = "exact",
      "Initial pair (x_0, y_0) of the discrete system; y_0 from terminating Kummer sums.");

  m.def(
      "weight_at",
      [](long N, const std::string& alpha, const std::string& c, long k) {
        return render(weight_at(make_params(N, alpha, c), k), 20);
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("k"));

  m.def(
      "moment",
      [](long N, const std::string& alpha, const std::string& c, unsigned long j) {
        return render(moment(make_params(N, alpha, c), j), 20);
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("j"));

  m.def(
      "kummer_m",
      [](long mm, const std::string& b, const std::string& z) {
        return render(kummer_m_terminating(mm, Scalar::parse_exact(b), Scalar::parse_exact(z)), 20);
      },
      py::arg("m"), py::arg("b"), py::arg("z"),
      "Terminating confluent hypergeometric sum M(-m, b, z).");

  m.def(
      "laguerre",
      [](long n, const std::string& beta, const std::string& z) {
        return render(laguerre(n, Scalar::parse_exact(beta), Scalar::parse_exact(z)), 20);
      },
      py::arg("n"), py::arg("beta"), py::arg("z"));

  m.def(
      "hankel_b0",
      [](long N, const std::string& alpha, const std::string& c) {
        auto f = hankel_b0(make_params(N, alpha, c));
        return py::make_tuple(render(f.moment_ratio, 20), render(f.kummer_form, 20));
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"),
      "b_0 as a moment ratio and as the hypergeometric closed form (equal in exact mode).");

  m.def(
      "p5_params",
      [](long n, long N, const std::string& alpha) {
        auto q = p5_params(n, N, Scalar::parse_exact(alpha));
        return py::make_tuple(q.A.str(), q.B.str(), q.C.str(), q.D.str());
      },
      py::arg("n"), py::arg("N"), py::arg("alpha"));

  m.def(
      "krawtchouk",
      [](long N, const std::string& p, long n) {
        Scalar prob = Scalar::parse_exact(p);
        auto pair = krawtchouk_exact(N, prob, n);
        return py::make_tuple(pair.first.str(), pair.second.str());
      },
      py::arg("N"), py::arg("p"), py::arg("n"),
      "Classical Krawtchouk closed forms (a_n^2, b_n).");

  m.def(
      "limit_deviation",
      [](long N, const std::string& p, const std::string& s) {
        return limit_deviation(N, Scalar::parse_exact(p), Scalar::parse_exact(s)).str();
      },
      py::arg("N"), py::arg("p"), py::arg("s"),
      "Max relative gap between the embedded family and the classical closed forms.");

  m.def(
      "toda_residual",
      [](long N, const std::string& alpha, const std::string& c, long n, const std::string& h) {
        auto r = toda_residual(make_params(N, alpha, c), n, Scalar::parse_exact(h));
        return py::make_tuple(r.res_a.to_double(), r.res_b.to_double());
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("n"), py::arg("h"));

  m.def(
      "compatibility_residuals",
      [](long N, const std::string& alpha, const std::string& c, long n, const std::string& x) {
        WeightParams p = make_params(N, alpha, c);
        auto [r1, r2] = compatibility_residuals(p, trajectory(p), n, Scalar::parse_exact(x));
        return py::make_tuple(r1.str(), r2.str());
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("n"), py::arg("x"));

  m.def(
      "certify",
      [](long N, const std::string& alpha, const std::string& c, long n,
         const std::vector<std::string>& suites, long bits, int levels) {
        WeightParams p = make_params(N, alpha, c);
        py::list out;
        bool all = true;
        for (const auto& s : suites) {
          SuiteReport rep;
          if (s == "compat")
            rep = certify_compat(p);
          else if (s == "toda")
            rep = certify_toda(p, n, std::max(levels, 5));
          else if (s == "p5")
            rep = certify_p5(p, n, static_cast<mpfr_prec_t>(bits), levels);
          else if (s == "kummer")
            rep = certify_kummer(20, 20260808);
          else
            throw domain_error("unknown suite '" + s + "' (python surface: compat, toda, p5, kummer)");
          all = all && rep.passed;
          out.append(report_dict(rep));
        }
        py::dict doc;
        doc["passed"] = all;
        doc["suites"] = std::move(out);
        return doc;
      },
      py::arg("N"), py::arg("alpha"), py::arg("c"), py::arg("n"), py::arg("suites"),
      py::arg("bits") = 256, py::arg("levels") = 3);
}
