// Rest-frame Green functions, their normalization Z_Delta, propagator pole
// sums and Kallen-Lehmann spectral weights for the three solution families.
//
// The retarded kernel solves the oscillator equation with a delta source,
//
//   d_t^2 Dbar + W(t) Dbar = delta(t),  W(t) = mu0^2 + 3 lambda phi_0^2(t)
//                                              (shifted by -mu0^2 for SSB)
//
// normalized so that Dbar(0) = 0 and Dbar'(0+) = -1. The elliptic closed
// forms are
//
//   sn families:  Dbar_n(t) = Z_Delta cn(m t + theta_n) dn(m t + theta_n),
//                 theta_n = (4n+1) K(m_param)
//   SSB:          Dbar_n(t) = sqrt(3/2)/mu0 sn(w t + theta_n) cn(w t + theta_n),
//                 w = mu0/sqrt(3), theta_n = (2n+1) K(-1)
//
// The overall sign is fixed by the slope orientation at the source.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptica/elliptic.hpp"
#include "elliptica/io.hpp"
#include "elliptica/solutions.hpp"

namespace elliptica {

/// Effective mass of the field excitations: sqrt(p^2) on shell. For the sn
/// families this is sqrt(mu0^2 + mu^2 sqrt(lambda/2)); for SSB mu0/sqrt(3).
inline double effective_mass(const FieldConfig& config) {
  return std::sqrt(dispersion(config));
}

/// Z_Delta closed form,
///   (2 m^2)^{7/2} / 4 (sqrt2 9 mu0^4 mu^4 lambda + sqrt8 mu0^8
///     + 10 mu0^6 mu^2 sqrt(lambda) + sqrt2 mu^8 lambda^2
///     + 7 mu0^2 mu^6 lambda^{3/2}).
/// Algebraically equal to the reduced form m/(mu0^2 + sqrt(2 lambda) mu^2)
/// and to the jump normalization 1/(m (1 - m_param)).
inline double z_delta(const FieldConfig& config) {
  if (config.kind == Family::SsbDn) {
    throw std::invalid_argument("z_delta: defined for the sn families only");
  }
  const double m2 = dispersion(config);
  const double mu0_2 = config.mu0 * config.mu0;
  const double mu_2 = config.mu * config.mu;
  const double sl = std::sqrt(config.lambda);
  const double s2 = std::numbers::sqrt2;
  const double denom = s2 * 9.0 * mu0_2 * mu0_2 * mu_2 * mu_2 * config.lambda +
                       std::sqrt(8.0) * std::pow(mu0_2, 4) +
                       10.0 * std::pow(mu0_2, 3) * mu_2 * sl +
                       s2 * std::pow(mu_2, 4) * config.lambda * config.lambda +
                       7.0 * mu0_2 * std::pow(mu_2, 3) * sl * config.lambda;
  return std::pow(2.0 * m2, 3.5) / (4.0 * denom);
}

/// Reduced form m / (mu0^2 + sqrt(2 lambda) mu^2).
inline double z_delta_reduced(const FieldConfig& config) {
  if (config.kind == Family::SsbDn) {
    throw std::invalid_argument("z_delta_reduced: defined for the sn families only");
  }
  return effective_mass(config) /
         (config.mu0 * config.mu0 +
          std::sqrt(2.0 * config.lambda) * config.mu * config.mu);
}

/// Jump-condition form 1 / (m (1 - m_param)).
inline double z_delta_jump(const FieldConfig& config) {
  if (config.kind == Family::SsbDn) {
    throw std::invalid_argument("z_delta_jump: defined for the sn families only");
  }
  return 1.0 / (effective_mass(config) * (1.0 - modulus_parameter(config)));
}

/// Phase theta_n of the n-th Green-function branch: (4n+1) K(m_param) for the
/// sn families, (2n+1) K(-1) for SSB.
inline double green_phase(const FieldConfig& config, int n) {
  const double K = complete_K(modulus_parameter(config));
  if (config.kind == Family::SsbDn) return (2 * n + 1) * K;
  return (4 * n + 1) * K;
}

/// Retarded rest-frame Green function Dbar_n(t); zero for t < 0, slope -1 at
/// t = 0+.
inline double rest_frame_green(const FieldConfig& config, int n, double t) {
  config.validate();
  if (t < 0.0) return 0.0;
  const double mp = modulus_parameter(config);
  const double w = effective_mass(config);
  const double u = w * t + green_phase(config, n);
  const JacobiTriple j = jacobi(u, mp);
  if (config.kind == Family::SsbDn) {
    return std::sqrt(1.5) / config.mu0 * j.sn * j.cn;
  }
  return z_delta(config) * j.cn * j.dn;
}

/// Potential W(t) of the rest-frame oscillator equation for branch n.
inline double green_potential(const FieldConfig& config, int n, double t) {
  const double mp = modulus_parameter(config);
  const double w = effective_mass(config);
  const double u = w * t + green_phase(config, n);
  const JacobiTriple j = jacobi(u, mp);
  if (config.kind == Family::SsbDn) {
    return config.mu0 * config.mu0 * (2.0 * j.dn * j.dn - 1.0);
  }
  return config.mu0 * config.mu0 +
         3.0 * std::sqrt(2.0 * config.lambda) * config.mu * config.mu * j.sn * j.sn;
}

/// Pole masses: (2n+1) pi/(2K) m for the sn families (n = 0..N-1), the
/// integer ladder k pi/K(-1) mu0/sqrt(3) for SSB (k = 0..N-1).
inline std::vector<double> mass_spectrum(const FieldConfig& config, int N) {
  if (N < 1) throw std::invalid_argument("mass_spectrum: N must be >= 1");
  config.validate();
  const double K = complete_K(modulus_parameter(config));
  std::vector<double> masses;
  masses.reserve(N);
  if (config.kind == Family::SsbDn) {
    for (int k = 0; k < N; ++k) {
      masses.push_back(k * (std::numbers::pi / K) * (config.mu0 / std::sqrt(3.0)));
    }
  } else {
    const double m = effective_mass(config);
    for (int n = 0; n < N; ++n) {
      masses.push_back((2 * n + 1) * (std::numbers::pi / (2.0 * K)) * m);
    }
  }
  return masses;
}

struct PoleEntry {
  double mass;
  double residue;
};

/// Truncated pole-sum representation of a propagator / spectral function.
struct PoleSum {
  std::vector<PoleEntry> entries;
  double epsilon = 0.0;
  // SSB only: the k = 0 entry is kept with residue 0 rather than resolving
  // the non-commuting zero-momentum double limit.
  bool contains_formal_zero_mode = false;
};

/// Kallen-Lehmann weights. Massless:
///   rho_r = pi^3/(4 K^3(-1)) (2r+1)^2 e^{-(r+1/2)pi} / (1 + e^{-(2r+1)pi}).
/// SSB:
///   rho_k = sqrt2 pi^3/K^3(-1) k^2 e^{-k pi} / (1 + e^{-2k pi}).
/// Massive, through the signed nome q = q(m_param) < 0:
///   rho_r = Z m pi^3 (2r+1)^2 |q|^{r+1/2} / (2 sqrt|m_param| K^3 (1 - q^{2r+1})),
/// which reduces to the massless line as mu0 -> 0 and reproduces the
/// time-domain kernel on resummation.
inline PoleSum kl_weights(const FieldConfig& config, int N) {
  if (N < 1) throw std::invalid_argument("kl_weights: N must be >= 1");
  config.validate();
  const std::vector<double> masses = mass_spectrum(config, N);
  const double K = complete_K(modulus_parameter(config));
  const double pi3 = std::pow(std::numbers::pi, 3);
  PoleSum sum;
  sum.entries.reserve(N);
  switch (config.kind) {
    case Family::MasslessSn:
      for (int r = 0; r < N; ++r) {
        const double num = std::exp(-(r + 0.5) * std::numbers::pi);
        const double den = 1.0 + std::exp(-(2 * r + 1) * std::numbers::pi);
        const double rho = pi3 / (4.0 * K * K * K) * (2 * r + 1) * (2 * r + 1) * num / den;
        sum.entries.push_back({masses[r], rho});
      }
      break;
    case Family::SsbDn:
      for (int k = 0; k < N; ++k) {
        const double num = std::exp(-k * std::numbers::pi);
        const double den = 1.0 + std::exp(-2.0 * k * std::numbers::pi);
        const double rho =
            std::numbers::sqrt2 * pi3 / (K * K * K) * double(k) * k * num / den;
        sum.entries.push_back({masses[k], rho});
      }
      sum.contains_formal_zero_mode = true;
      break;
    case Family::MassiveSn: {
      const double mp = modulus_parameter(config);
      const double q = nome(mp);
      const double zm = z_delta(config) * effective_mass(config);
      const double pref = zm * pi3 / (2.0 * std::sqrt(std::abs(mp)) * K * K * K);
      for (int r = 0; r < N; ++r) {
        const double qn = std::pow(std::abs(q), r + 0.5);
        const double den = 1.0 - std::pow(q, 2 * r + 1);
        sum.entries.push_back({masses[r], pref * (2 * r + 1) * (2 * r + 1) * qn / den});
      }
      break;
    }
  }
  double m0 = 0.0;
  for (const PoleEntry& e : sum.entries) {
    if (e.mass > 0.0) { m0 = e.mass; break; }
  }
  sum.epsilon = 1e-9 * m0 * m0;
  return sum;
}

/// Truncated propagator sum_r rho_r / (p^2 - m_r^2 + i eps).
inline std::complex<double> propagator(const FieldConfig& config, double p_squared,
                                       int N, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("propagator: epsilon must be positive");
  }
  const PoleSum poles = kl_weights(config, N);
  std::complex<double> total = 0.0;
  for (const PoleEntry& e : poles.entries) {
    total += e.residue /
             std::complex<double>(p_squared - e.mass * e.mass, epsilon);
  }
  return total;
}

inline std::string to_csv(const PoleSum& sum) {
  std::string out = "r,mass,residue\n";
  for (std::size_t r = 0; r < sum.entries.size(); ++r) {
    out += io::csv_row({std::to_string(r), io::format_g17(sum.entries[r].mass),
                        io::format_g17(sum.entries[r].residue)});
  }
  return out;
}

inline std::string to_json(const PoleSum& sum) {
  std::string out = "[";
  for (std::size_t r = 0; r < sum.entries.size(); ++r) {
    if (r) out += ',';
    out += "{\"mass\":" + io::format_g17(sum.entries[r].mass) +
           ",\"residue\":" + io::format_g17(sum.entries[r].residue) + "}";
  }
  out += "]";
  return out;
}

}  // namespace elliptica
