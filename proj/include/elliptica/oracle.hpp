// Independent verification machinery: adaptive Runge-Kutta integration of
// oscillator equations y'' + W(t) y = 0, spectrally accurate periodic
// quadrature for Fourier coefficients, adaptive Simpson quadrature, and
// Richardson-extrapolated central finite differences.
//
// Everything here is deliberately independent of the closed forms it is used
// to check: no elliptic identities, no series, just generic numerics.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace elliptica::oracle {

/// y'' + W(t) y = 0 with initial data at t0. A delta source at t = 0 is
/// represented exactly as a jump in the initial slope, never as a bump.
struct OdeProblem {
  std::function<double(double)> frequency_sq;
  double y0 = 0.0;
  double yp0 = 0.0;
  double t0 = 0.0;
  double t1 = 1.0;
  double tol = 1e-10;
};

struct TrajectoryPoint {
  double t;
  double y;
  double yp;
};

namespace detail {

// One Dormand-Prince 5(4) step for the oscillator system; returns the
// embedded error estimate.
struct DopriStep {
  double y;
  double yp;
  double err;
};

inline DopriStep dopri_step(const std::function<double(double)>& W, double t,
                            double y, double yp, double h) {
  auto f = [&](double tt, double yy) { return -W(tt) * yy; };

  const double k1y = yp, k1v = f(t, y);
  const double k2y = yp + h * (1.0 / 5) * k1v;
  const double k2v = f(t + h / 5, y + h * (1.0 / 5) * k1y);
  const double k3y = yp + h * (3.0 / 40 * k1v + 9.0 / 40 * k2v);
  const double k3v = f(t + 3.0 / 10 * h, y + h * (3.0 / 40 * k1y + 9.0 / 40 * k2y));
  const double k4y = yp + h * (44.0 / 45 * k1v - 56.0 / 15 * k2v + 32.0 / 9 * k3v);
  const double k4v = f(t + 4.0 / 5 * h, y + h * (44.0 / 45 * k1y - 56.0 / 15 * k2y + 32.0 / 9 * k3y));
  const double k5y = yp + h * (19372.0 / 6561 * k1v - 25360.0 / 2187 * k2v +
                               64448.0 / 6561 * k3v - 212.0 / 729 * k4v);
  const double k5v = f(t + 8.0 / 9 * h, y + h * (19372.0 / 6561 * k1y - 25360.0 / 2187 * k2y +
                                                 64448.0 / 6561 * k3y - 212.0 / 729 * k4y));
  const double k6y = yp + h * (9017.0 / 3168 * k1v - 355.0 / 33 * k2v + 46732.0 / 5247 * k3v +
                               49.0 / 176 * k4v - 5103.0 / 18656 * k5v);
  const double k6v = f(t + h, y + h * (9017.0 / 3168 * k1y - 355.0 / 33 * k2y +
                                       46732.0 / 5247 * k3y + 49.0 / 176 * k4y -
                                       5103.0 / 18656 * k5y));

  const double y5 = y + h * (35.0 / 384 * k1y + 500.0 / 1113 * k3y + 125.0 / 192 * k4y -
                             2187.0 / 6784 * k5y + 11.0 / 84 * k6y);
  const double v5 = yp + h * (35.0 / 384 * k1v + 500.0 / 1113 * k3v + 125.0 / 192 * k4v -
                              2187.0 / 6784 * k5v + 11.0 / 84 * k6v);
  const double k7y = v5, k7v = f(t + h, y5);

  const double y4 = y + h * (5179.0 / 57600 * k1y + 7571.0 / 16695 * k3y + 393.0 / 640 * k4y -
                             92097.0 / 339200 * k5y + 187.0 / 2100 * k6y + 1.0 / 40 * k7y);
  const double v4 = yp + h * (5179.0 / 57600 * k1v + 7571.0 / 16695 * k3v + 393.0 / 640 * k4v -
                              92097.0 / 339200 * k5v + 187.0 / 2100 * k6v + 1.0 / 40 * k7v);

  const double err = std::hypot(y5 - y4, v5 - v4);
  return {y5, v5, err};
}

}  // namespace detail

/// Integrate the oscillator problem, returning (t, y, y') at the requested
/// sample times (which must be nondecreasing and lie in [t0, t1]).
inline std::vector<TrajectoryPoint> integrate(const OdeProblem& problem,
                                              std::span<const double> sample_times) {
  if (!(problem.tol >= 1e-14 && problem.tol <= 1e-6)) {
    throw std::invalid_argument("oracle::integrate: tol must be in [1e-14, 1e-6]");
  }
  std::vector<TrajectoryPoint> out;
  out.reserve(sample_times.size());

  double t = problem.t0;
  double y = problem.y0;
  double yp = problem.yp0;
  double h = (problem.t1 - problem.t0) / 100.0;

  for (double ts : sample_times) {
    if (ts < t - 1e-15 || ts > problem.t1 + 1e-12) {
      throw std::invalid_argument("oracle::integrate: sample times must be ordered and in range");
    }
    while (t < ts) {
      double step = std::min(h, ts - t);
      detail::DopriStep s = detail::dopri_step(problem.frequency_sq, t, y, yp, step);
      const double scale = problem.tol * std::max({1.0, std::abs(y), std::abs(yp)});
      if (s.err <= scale || step < 1e-13 * std::abs(ts)) {
        t += step;
        y = s.y;
        yp = s.yp;
        if (step == h || s.err > 0.0) {
          const double grow = s.err > 0.0 ? 0.9 * std::pow(scale / s.err, 0.2) : 2.0;
          h = step * std::min(4.0, std::max(0.2, grow));
        }
      } else {
        h = step * std::max(0.2, 0.9 * std::pow(scale / s.err, 0.2));
      }
    }
    out.push_back({ts, y, yp});
  }
  return out;
}

/// Fourier cosine coefficient of a periodic function by the trapezoidal rule
/// (spectrally accurate for smooth periodic integrands):
///   k = 0: the mean over one period; k > 0: (2/T) \int f cos(2 pi k t / T).
inline double fourier_cos_coefficient(const std::function<double(double)>& f,
                                      double period, int k, int n = 4096) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = period * j / n;
    sum += f(t) * std::cos(2.0 * std::numbers::pi * k * t / period);
  }
  return (k == 0 ? 1.0 : 2.0) * sum / n;
}

/// Fourier sine coefficient, (2/T) \int f sin(2 pi k t / T), k >= 1.
inline double fourier_sin_coefficient(const std::function<double(double)>& f,
                                      double period, int k, int n = 4096) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = period * j / n;
    sum += f(t) * std::sin(2.0 * std::numbers::pi * k * t / period);
  }
  return 2.0 * sum / n;
}

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double fa, double fm, double fb,
                               double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
inline double quadrature(const std::function<double(double)>& f, double a,
                         double b, double tol = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Richardson-extrapolated central finite difference of order 1 or 2;
/// leading error O(h^4).
inline double finite_diff(const std::function<double(double)>& f, double x,
                          int order, double h) {
  if (h <= 0.0) {
    throw std::invalid_argument("finite_diff: h must be positive");
  }
  if (order == 1) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
  }
  if (order == 2) {
    const double s1 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    const double s2 = (f(x + 0.5 * h) - 2.0 * f(x) + f(x - 0.5 * h)) / (0.25 * h * h);
    return (4.0 * s2 - s1) / 3.0;
  }
  throw std::invalid_argument("finite_diff: order must be 1 or 2");
}

}  // namespace elliptica::oracle
