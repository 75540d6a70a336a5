#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkraw/classical_limit.hpp"
#include "gkraw/p5.hpp"
#include "gkraw/toda.hpp"

namespace gkraw {

struct CheckLine {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<CheckLine> checks;

  void add(std::string name, bool ok, std::string detail = "");
};

/// Ladder compatibility: both residuals exactly zero at deg+1 abscissae for
/// every interior n, plus the linear T_n/b_n relation at every n. Exact mode.
SuiteReport certify_compat(const WeightParams& p);

/// Order-2 decay of both Toda residual components on a halving h-ladder,
/// cross-checked once against the fourth-order stencil.
SuiteReport certify_toda(const WeightParams& p, long n, int levels = 5);

/// Full Painlevé V pipeline at index n: recover (y, y'), reproduce y_n and
/// x_n through the forward transformations, and drive the P5 residual down
/// the h-ladder at order 2. tamper, when set, perturbs the middle y_n and the
/// suite then *requires* the residual blowup (negative control).
SuiteReport certify_p5(const WeightParams& p, long n, mpfr_prec_t prec, int levels = 4,
                       const std::optional<Scalar>& tamper = std::nullopt);

/// Cosgrove-form residual on the rational z-grid (c = z^2), order-2 decay;
/// same tamper semantics as certify_p5.
SuiteReport certify_cosgrove(long N, const Scalar& alpha, long n, const Scalar& z0,
                             int levels = 4, const std::optional<Scalar>& tamper = std::nullopt);

/// Samples of the recovered transcendent at c-h, c, c+h: exact trajectories,
/// root recovery and y' at the given float precision.
std::array<P5Sample, 3> p5_pipeline_samples(const WeightParams& p, long n, const Scalar& h,
                                            mpfr_prec_t prec);

/// Exact Kummer/Laguerre identity M(-N,1-a,-c) = N!/(1-a)_N L_N^(-a)(-c)
/// over random rational parameter draws.
SuiteReport certify_kummer(unsigned count, unsigned seed);

/// Classical-limit deviation ladder: monotone decay, ~2x per doubling of s,
/// and smallness at the largest scale.
SuiteReport certify_limit(long N, const Scalar& p, const std::vector<long>& s_ladder);

/// Float-mode trajectory from a (possibly perturbed) initial y_0; never
/// throws on sign trouble, records it instead.
struct PerturbReport {
  long first_nonpositive = -1;       // first 1 <= n <= N with a_n^2 <= 0, or -1
  bool singular = false;             // iteration hit an exact zero denominator
  long singular_at = -1;
  std::vector<Scalar> a_sq;          // computed entries 0..N+1 (shorter if singular)
  Scalar closure;                    // a_{N+1}^2, the boundary defect
  bool closed(const Scalar& tol) const { return !singular && closure.abs() <= tol; }
  bool failed(const Scalar& tol) const { return singular || first_nonpositive >= 0 || !(closure.abs() <= tol); }
};
PerturbReport run_perturbed(const WeightParams& float_params, const Scalar& delta);

/// Bisection on y_0 targeting a_{N+1}^2 = 0 with positive interior a_n^2.
/// Every sign-change bracket in the scan is refined and reported; the scan
/// resolution quadruples (up to 3 times) until some admissible root appears.
struct ShootRoot {
  Scalar y0;
  Scalar closure;         // shooting functional at the root
  bool interior_positive; // all a_1^2..a_N^2 > 0 along the converged trajectory
};
struct ShootResult {
  std::vector<ShootRoot> roots;  // every sign-change bracket found, refined
  Scalar closed_form_y0;
};
ShootResult shoot_y0(const WeightParams& float_params, const Scalar& lo, const Scalar& hi,
                     int scan_points = 64);

}  // namespace gkraw
