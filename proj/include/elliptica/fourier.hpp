// Plane-wave (trigonometric) expansions of the exact solutions, written
// against the signed nome, together with the mass ladders epsilon_n read off
// from the harmonic content.
//
//   sn(u,m) = 2 pi / (sqrt|m| K) sum_n q^{n+1/2} / (1 - q^{2n+1})
//             sin((2n+1) pi u / 2K)
//   dn(u,-1) = pi/2K + 2 pi/K sum_{n>=1} q^n / (1 + q^{2n}) cos(n pi u / K)
//
// With q < 0 for m < 0 the half-integer power is read as q^n sqrt|q|; this
// produces the alternating (-1)^n pattern and the 1 + |q|^{2n+1} denominators
// of the imaginary-modulus case, and a positive constant term +pi/2K for the
// dn series (quadrature of the Fourier coefficients confirms this variant).

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "elliptica/elliptic.hpp"
#include "elliptica/solutions.hpp"

namespace elliptica {

/// Truncated sine series for sn(u, m), m < 0 or m in [0, 1).
inline double sn_series(double u, double m_param, int N) {
  if (N < 1) throw std::invalid_argument("sn_series: N must be >= 1");
  if (!(m_param < 1.0)) throw std::domain_error("sn_series: parameter must be < 1");
  if (m_param == 0.0) return std::sin(u);
  const double K = complete_K(m_param);
  const double q = nome(m_param);
  const double sqrt_absq = std::sqrt(std::abs(q));
  double sum = 0.0;
  for (int n = 0; n < N; ++n) {
    const double c = std::pow(q, n) * sqrt_absq / (1.0 - std::pow(q, 2 * n + 1));
    sum += c * std::sin((2 * n + 1) * std::numbers::pi * u / (2.0 * K));
  }
  return 2.0 * std::numbers::pi / (std::sqrt(std::abs(m_param)) * K) * sum;
}

/// Truncated cosine series for dn(u, -1): constant term +pi/2K and N
/// oscillatory terms with alternating signs.
inline double dn_series(double u, int N) {
  if (N < 1) throw std::invalid_argument("dn_series: N must be >= 1");
  const double K = complete_K(-1.0);
  const double q = nome(-1.0);
  double sum = std::numbers::pi / (2.0 * K);
  for (int n = 1; n <= N; ++n) {
    const double c = std::pow(q, n) / (1.0 + std::pow(q, 2 * n));
    sum += 2.0 * std::numbers::pi / K * c * std::cos(n * std::numbers::pi * u / K);
  }
  return sum;
}

/// Coefficient table of a solution's expansion, amplitude attached.
struct SeriesSpec {
  Family family;
  double m_param;
  double q;
  int order;
  // sn families: sine coefficients of harmonics (2n+1) pi/(2K), n = 0..N-1.
  // SSB: cosine coefficients of harmonics n pi/K, n = 0..N-1 (n = 0 is the
  // constant, the retained zero-frequency mode).
  std::vector<double> coefficients;
};

inline SeriesSpec series_spec(const FieldConfig& config, int N) {
  if (N < 1) throw std::invalid_argument("series_spec: N must be >= 1");
  config.validate();
  const double mp = modulus_parameter(config);
  const double K = complete_K(mp);
  const double q = nome(mp);
  SeriesSpec spec{config.kind, mp, q, N, {}};
  spec.coefficients.reserve(N);
  if (config.kind == Family::SsbDn) {
    const double v = config.vev();
    spec.coefficients.push_back(v * std::numbers::pi / (2.0 * K));
    for (int n = 1; n < N; ++n) {
      spec.coefficients.push_back(v * 2.0 * std::numbers::pi / K * std::pow(q, n) /
                                  (1.0 + std::pow(q, 2 * n)));
    }
  } else {
    const double A = config.amplitude();
    const double sqrt_absq = std::sqrt(std::abs(q));
    const double pref = A * 2.0 * std::numbers::pi / (std::sqrt(std::abs(mp)) * K);
    for (int n = 0; n < N; ++n) {
      spec.coefficients.push_back(pref * std::pow(q, n) * sqrt_absq /
                                  (1.0 - std::pow(q, 2 * n + 1)));
    }
  }
  return spec;
}

/// The solution profile evaluated from its truncated series.
inline double field_series(const FieldConfig& config, double u, int N,
                           int branch = +1) {
  config.validate();
  if (config.kind == Family::SsbDn) {
    return branch * config.vev() * dn_series(u, N);
  }
  return branch * config.amplitude() * sn_series(u, modulus_parameter(config), N);
}

/// Mass ladder epsilon_n read off the series harmonics: (2n+1) pi/(2K) m for
/// the sn families, n pi/K(-1) mu0/sqrt3 for SSB.
inline std::vector<double> epsilon_spectrum(const FieldConfig& config, int N) {
  if (N < 1) throw std::invalid_argument("epsilon_spectrum: N must be >= 1");
  config.validate();
  const double K = complete_K(modulus_parameter(config));
  std::vector<double> eps;
  eps.reserve(N);
  if (config.kind == Family::SsbDn) {
    for (int n = 0; n < N; ++n) {
      eps.push_back(n * (std::numbers::pi / K) * (config.mu0 / std::sqrt(3.0)));
    }
  } else {
    const double m = std::sqrt(dispersion(config));
    for (int n = 0; n < N; ++n) {
      eps.push_back((2 * n + 1) * (std::numbers::pi / (2.0 * K)) * m);
    }
  }
  return eps;
}

}  // namespace elliptica
