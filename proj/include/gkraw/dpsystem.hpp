#pragma once

#include <utility>
#include <vector>

#include "gkraw/moment_oracle.hpp"
#include "gkraw/weight.hpp"

namespace gkraw {

/// A trajectory hit a vanishing denominator: x_n + y_n = 0, or N x_n - n = 0
/// strictly inside the lattice (which would mean a vanishing a_n^2 there).
class singular_trajectory_error : public std::runtime_error {
 public:
  singular_trajectory_error(long n, std::string x, std::string y, const std::string& what)
      : std::runtime_error("singular trajectory at n = " + std::to_string(n) + ": " + what),
        n_(n),
        x_(std::move(x)),
        y_(std::move(y)) {}
  long index() const { return n_; }
  const std::string& x_str() const { return x_; }
  const std::string& y_str() const { return y_; }

 private:
  long n_;
  std::string x_, y_;
};

/// State of the coupled discrete system at index n:
///   x_n = (a_n^2/c + n)/N,   y_n = -(b_n + N + 1 + c - n - alpha)/N.
struct XYState {
  long n;
  Scalar x;
  Scalar y;
};

/// Auxiliary ladder quantities t_n = a_n^2/c + n and T_n = (b_n+1+c-n-alpha)/c,
/// related to the system variables by x_n = t_n/N, y_n = -cT_n/N - 1.
struct LadderQuantities {
  long n;
  Scalar T;
  Scalar t;
};

/// x_0 = 0 and the closed-form y_0 built from terminating Kummer sums.
XYState initial_state(const WeightParams& p);

/// Solves the first system equation for x_{n+1}; valid for s.n <= N
/// (at s.n = N this yields the boundary x_{N+1}).
Scalar next_x(const WeightParams& p, const XYState& s);

/// Solves the second system equation at index n1 for y_{n1},
/// given x_{n1} and y_{n1-1}; valid for n1 <= N.
Scalar next_y(const WeightParams& p, long n1, const Scalar& x1, const Scalar& y_prev);

/// One full step (x,y)_n -> (x,y)_{n+1}; requires s.n < N. The boundary value
/// x_{N+1} has no partner y and is produced by next_x alone.
XYState step(const WeightParams& p, const XYState& s);

struct Trajectory {
  WeightParams params;
  std::vector<Scalar> x;  // indices 0..N+1
  std::vector<Scalar> y;  // indices 0..N

  /// Inverts the defining substitutions: a_n^2 = c(N x_n - n), b_n = -N y_n - (N+1+c-n-alpha).
  JacobiCoefficients coefficients() const;
};

Trajectory run_trajectory(const WeightParams& p);

/// Recurrence coefficients via the discrete system; in exact mode this equals
/// the Stieltjes output entry for entry.
JacobiCoefficients trajectory(const WeightParams& p);

/// The defining substitutions applied to a coefficient table.
XYState xy_from_coefficients(const WeightParams& p, const JacobiCoefficients& j, long n);

LadderQuantities ladder_quantities(const WeightParams& p, const JacobiCoefficients& j, long n);

/// Residuals of the two ladder compatibility relations at abscissa x (not the
/// pole x = N), for interior 1 <= n <= N-1. Both are identically zero for the
/// true coefficients; rational in exact mode since every a_n enters squared.
std::pair<Scalar, Scalar> compatibility_residuals(const WeightParams& p,
                                                  const JacobiCoefficients& j, long n,
                                                  const Scalar& x);

}  // namespace gkraw
