// Jacobi elliptic functions sn, cn, dn and the complete elliptic integral
// K(m) for real argument and real parameter m = k^2 < 1, including negative
// parameter (imaginary modulus), plus the signed real nome.
//
// Negative parameters are mapped onto a parameter in (0,1) with the standard
// negative-parameter transformation so that all evaluation stays in real
// arithmetic:
//
//   mu = -m/(1-m),  v = u*sqrt(1-m)
//   sn(u|m) = sd(v|mu)/sqrt(1-m),  cn(u|m) = cd(v|mu),  dn(u|m) = nd(v|mu)
//   K(m)    = K(mu)/sqrt(1-m)
//
// The nome is kept as a signed real number: positive for m in (0,1), zero at
// m = 0 and negative for m < 0 (the parameter map m -> m/(m-1) shifts the
// lattice ratio by one, which flips the sign of the nome). All trigonometric
// q-series in this library are written against that signed nome.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace elliptica {

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Complete elliptic integral of the first kind, K(m), parameter m = k^2 < 1.
/// Arithmetic-geometric mean, iterated to machine fixed point.
inline double complete_K(double m) {
  if (!(m < 1.0)) {
    throw std::domain_error("complete_K: parameter m must satisfy m < 1");
  }
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  while (std::abs(a - b) > std::numeric_limits<double>::epsilon() * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (a + b);
}

namespace detail {

// sn, cn, dn for m in [0,1) by the descending AGM chain (A&S 16.4).
inline JacobiTriple jacobi_unit_range(double u, double m) {
  if (m < 1.5e-8) {
    // Small-parameter asymptotics, error O(m^2).
    const double su = std::sin(u);
    const double cu = std::cos(u);
    return {su - 0.25 * m * (u - su * cu) * cu,
            cu + 0.25 * m * (u - su * cu) * su,
            1.0 - 0.5 * m * su * su};
  }
  constexpr int max_depth = 32;
  double a[max_depth];
  double c[max_depth];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (c[n] > std::numeric_limits<double>::epsilon() * a[n] &&
         n + 1 < max_depth) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    phi = 0.5 * (phi + std::asin(std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn > 0 on [0,1), so the defining identity is a stable way to recover it.
  const double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

inline double reduce_period(double u, double period) {
  const double r = std::remainder(u, period);
  return r;
}

}  // namespace detail

/// Jacobi elliptic triple (sn, cn, dn)(u, m) for real u and m < 1.
inline JacobiTriple jacobi(double u, double m) {
  if (!(m < 1.0)) {
    throw std::domain_error("jacobi: parameter m must satisfy m < 1");
  }
  if (!std::isfinite(u)) {
    throw std::domain_error("jacobi: argument u must be finite");
  }
  if (m >= 0.0) {
    const double period = 4.0 * complete_K(m);
    return detail::jacobi_unit_range(detail::reduce_period(u, period), m);
  }
  const double f = 1.0 - m;
  const double mu = -m / f;
  const double rf = std::sqrt(f);
  const double v = detail::reduce_period(u * rf, 4.0 * complete_K(mu));
  const JacobiTriple t = detail::jacobi_unit_range(v, mu);
  return {t.sn / (t.dn * rf), t.cn / t.dn, 1.0 / t.dn};
}

/// Derivatives d/du of (sn, cn, dn) evaluated from the triple:
/// (cn dn, -sn dn, -m sn cn).
inline JacobiTriple jacobi_derivatives(double u, double m) {
  const JacobiTriple t = jacobi(u, m);
  return {t.cn * t.dn, -t.sn * t.dn, -m * t.sn * t.cn};
}

/// Signed real nome q(m): exp(-pi K(1-m)/K(m)) on (0,1), zero at m = 0,
/// and -q(m/(m-1)) for m < 0. Magnitude < 1 throughout.
inline double nome(double m) {
  if (!(m < 1.0)) {
    throw std::domain_error("nome: parameter m must satisfy m < 1");
  }
  if (m == 0.0) {
    return 0.0;
  }
  if (m > 0.0) {
    return std::exp(-std::numbers::pi * complete_K(1.0 - m) / complete_K(m));
  }
  const double mu = m / (m - 1.0);
  return -std::exp(-std::numbers::pi * complete_K(1.0 - mu) / complete_K(mu));
}

/// Parameter m together with its derived quarter-period data.
///
/// For m < 0 the real co-period is defined operationally through the signed
/// nome, Kprime = -K log|q| / pi; on (0,1) this coincides with K(1-m).
struct EllipticParameter {
  double m;
  double K;
  double Kprime;
  double q;

  explicit EllipticParameter(double param)
      : m(param), K(complete_K(param)), q(nome(param)) {
    if (m == 0.0) {
      Kprime = std::numeric_limits<double>::infinity();
    } else {
      Kprime = -K * std::log(std::abs(q)) / std::numbers::pi;
    }
  }
};

}  // namespace elliptica
