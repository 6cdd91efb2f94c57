// Exact traveling-wave solutions of the phi^4 field equations:
//
//   massive:   d_t^2 phi - lap phi + mu0^2 phi + lambda phi^3 = 0
//   massless:  d_t^2 phi - lap phi + lambda phi^3 = 0
//   SSB:       d_t^2 phi - lap phi - mu0^2 phi + lambda phi^3 = 0
//
// with metric signature (+,-,-,-) and p.x = p^0 t - p.x (the field equation
// above is the one under which the printed dispersion relations verify; the
// residual tests pin this convention).
//
// The sn families read phi = +/- mu (2/lambda)^{1/4} sn(p.x + theta, m) and
// the SSB family phi = +/- v dn(p.x + theta, -1) with v = sqrt(2 mu0^2 / 3 lambda).

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "elliptica/elliptic.hpp"

namespace elliptica {

enum class Family { MassiveSn, MasslessSn, SsbDn };

struct FieldConfig {
  Family kind = Family::MasslessSn;
  double mu0 = 0.0;    // bare mass
  double mu = 1.0;     // integration-constant scale
  double lambda = 2.0; // quartic coupling

  void validate() const {
    if (!(lambda > 0.0)) {
      throw std::invalid_argument("FieldConfig: lambda must be positive");
    }
    if (mu0 < 0.0 || mu < 0.0) {
      throw std::invalid_argument("FieldConfig: mu0 and mu must be non-negative");
    }
    if (kind == Family::MasslessSn && mu0 != 0.0) {
      throw std::invalid_argument("FieldConfig: massless family requires mu0 = 0");
    }
    if (kind == Family::SsbDn && !(mu0 > 0.0)) {
      throw std::invalid_argument("FieldConfig: SSB family requires mu0 > 0");
    }
  }

  /// Vacuum scale v = sqrt(2 mu0^2 / 3 lambda).
  double vev() const { return std::sqrt(2.0 * mu0 * mu0 / (3.0 * lambda)); }

  /// Oscillation amplitude of the solution: mu (2/lambda)^{1/4} for the sn
  /// families, v for the dn family.
  double amplitude() const {
    if (kind == Family::SsbDn) return vev();
    return mu * std::pow(2.0 / lambda, 0.25);
  }
};

/// On-shell p^2 for the family:
///   massive   p^2 = mu0^2 + mu^2 sqrt(lambda/2)
///   massless  p^2 = mu^2 sqrt(lambda/2)
///   SSB       p^2 = lambda v^2 / 2 = mu0^2 / 3
inline double dispersion(const FieldConfig& config) {
  config.validate();
  switch (config.kind) {
    case Family::MassiveSn:
      return config.mu0 * config.mu0 +
             config.mu * config.mu * std::sqrt(config.lambda / 2.0);
    case Family::MasslessSn:
      return config.mu * config.mu * std::sqrt(config.lambda / 2.0);
    case Family::SsbDn: {
      const double v = config.vev();
      return config.lambda * v * v / 2.0;
    }
  }
  throw std::invalid_argument("dispersion: unknown family");
}

/// Elliptic parameter m = k^2 of the solution. The sn modulus is imaginary,
/// m = -sqrt(2 lambda) mu^2 / (2 mu0^2 + sqrt(2 lambda) mu^2); the massless
/// and SSB families sit at m = -1.
inline double modulus_parameter(const FieldConfig& config) {
  config.validate();
  if (config.kind != Family::MassiveSn) return -1.0;
  const double s = std::sqrt(2.0 * config.lambda) * config.mu * config.mu;
  if (s == 0.0) return 0.0;  // linear-theory limit
  return -s / (2.0 * config.mu0 * config.mu0 + s);
}

inline EllipticParameter modulus(const FieldConfig& config) {
  return EllipticParameter(modulus_parameter(config));
}

struct WaveFrame {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};  // (p^0, p^1, p^2, p^3)
  double theta = 0.0;

  double momentum_squared() const {
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
  }
  double dot(const std::array<double, 4>& x) const {
    return p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
  }
  double phase(const std::array<double, 4>& x) const { return dot(x) + theta; }
};

/// Rest frame p = (sqrt(p^2), 0, 0, 0) for the family's dispersion value.
inline WaveFrame rest_frame(const FieldConfig& config, double theta = 0.0) {
  return {{std::sqrt(dispersion(config)), 0.0, 0.0, 0.0}, theta};
}

/// A frame with spatial momentum q, boosted on shell.
inline WaveFrame boosted_frame(const FieldConfig& config,
                               const std::array<double, 3>& q,
                               double theta = 0.0) {
  const double p2 = dispersion(config);
  const double e = std::sqrt(p2 + q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
  return {{e, q[0], q[1], q[2]}, theta};
}

inline bool is_on_shell(const FieldConfig& config, const WaveFrame& frame,
                        double rtol = 1e-9) {
  const double p2 = dispersion(config);
  return std::abs(frame.momentum_squared() - p2) <= rtol * std::max(1.0, std::abs(p2));
}

/// phi(x) for the family; branch = +1 or -1 selects the Z2 partner.
inline double evaluate(const FieldConfig& config, const WaveFrame& frame,
                       const std::array<double, 4>& x, int branch = +1) {
  if (!is_on_shell(config, frame)) {
    throw std::invalid_argument("evaluate: frame is off shell for this configuration");
  }
  const double u = frame.phase(x);
  const double mp = modulus_parameter(config);
  const JacobiTriple t = jacobi(u, mp);
  const double shape = (config.kind == Family::SsbDn) ? t.dn : t.sn;
  return branch * config.amplitude() * shape;
}

namespace detail {

inline double mass_term_sign(Family kind) {
  switch (kind) {
    case Family::MassiveSn: return +1.0;
    case Family::MasslessSn: return 0.0;
    case Family::SsbDn: return -1.0;
  }
  return 0.0;
}

}  // namespace detail

/// Field-equation residual d_t^2 phi - lap phi +/- mu0^2 phi + lambda phi^3
/// at x, second derivatives by fourth-order central differences with step h.
inline double eom_residual(const FieldConfig& config, const WaveFrame& frame,
                           const std::array<double, 4>& x, double h,
                           int branch = +1) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("eom_residual: step h must be positive");
  }
  auto phi = [&](const std::array<double, 4>& y) {
    return evaluate(config, frame, y, branch);
  };
  const double phi0 = phi(x);
  double d2[4];
  for (int axis = 0; axis < 4; ++axis) {
    std::array<double, 4> xp = x, xpp = x, xm = x, xmm = x;
    xp[axis] += h;
    xpp[axis] += 2.0 * h;
    xm[axis] -= h;
    xmm[axis] -= 2.0 * h;
    d2[axis] = (-phi(xpp) + 16.0 * phi(xp) - 30.0 * phi0 + 16.0 * phi(xm) - phi(xmm)) /
               (12.0 * h * h);
  }
  const double s = detail::mass_term_sign(config.kind);
  return d2[0] - d2[1] - d2[2] - d2[3] + s * config.mu0 * config.mu0 * phi0 +
         config.lambda * phi0 * phi0 * phi0;
}

/// Energy density (1/2)(d_t phi)^2 + (1/2)(grad phi)^2 + V(phi), with the
/// gradient taken from the exact elliptic derivative identities.
inline double hamiltonian_density(const FieldConfig& config, const WaveFrame& frame,
                                  const std::array<double, 4>& x, int branch = +1) {
  if (!is_on_shell(config, frame)) {
    throw std::invalid_argument("hamiltonian_density: frame is off shell");
  }
  const double u = frame.phase(x);
  const double mp = modulus_parameter(config);
  const JacobiTriple t = jacobi(u, mp);
  const double A = config.amplitude();
  const double shape = (config.kind == Family::SsbDn) ? t.dn : t.sn;
  const double dshape = (config.kind == Family::SsbDn) ? -mp * t.sn * t.cn
                                                       : t.cn * t.dn;
  const double phi = branch * A * shape;
  const double dphi_du = branch * A * dshape;
  const double dt_phi = frame.p[0] * dphi_du;
  const double grad_sq = (frame.p[1] * frame.p[1] + frame.p[2] * frame.p[2] +
                          frame.p[3] * frame.p[3]) *
                         dphi_du * dphi_du;
  const double s = detail::mass_term_sign(config.kind);
  const double potential = 0.5 * s * config.mu0 * config.mu0 * phi * phi +
                           0.25 * config.lambda * phi * phi * phi * phi;
  return 0.5 * dt_phi * dt_phi + 0.5 * grad_sq + potential;
}

}  // namespace elliptica
