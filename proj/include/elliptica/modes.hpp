// Linearized (Lame-type) fluctuation operators around the exact solutions and
// verification of their claimed eigenpairs.
//
// Acting on functions of the single variable u = p.x, the operator
// L = -box + V''(phi_0) reduces to
//
//   L g = p^2 g''(u) + W(u) g(u)
//
// with W = 3 lambda A^2 sn^2(u,-1) for the massless background and
// W = -mu0^2 + 3 lambda v^2 dn^2(u,-1) for the SSB background. The claimed
// eigenfunctions are the elliptic products cn dn, sn dn and sn cn; they are
// checked, not searched for.

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "elliptica/elliptic.hpp"
#include "elliptica/green.hpp"
#include "elliptica/solutions.hpp"

namespace elliptica {

enum class OperatorKind { Massless, Ssb };

struct LinearizedOperator {
  OperatorKind kind;
  FieldConfig config;
  WaveFrame frame;

  LinearizedOperator(OperatorKind k, const FieldConfig& c, const WaveFrame& f)
      : kind(k), config(c), frame(f) {
    config.validate();
    if (kind == OperatorKind::Massless && config.kind != Family::MasslessSn) {
      throw std::invalid_argument("LinearizedOperator: massless kind needs a massless background");
    }
    if (kind == OperatorKind::Ssb && config.kind != Family::SsbDn) {
      throw std::invalid_argument("LinearizedOperator: SSB kind needs an SSB background");
    }
    if (!is_on_shell(config, frame)) {
      throw std::invalid_argument("LinearizedOperator: frame is off shell");
    }
  }

  double momentum_squared() const { return dispersion(config); }

  /// W(u); both backgrounds sit at elliptic parameter -1.
  double potential(double u) const {
    const JacobiTriple t = jacobi(u, -1.0);
    if (kind == OperatorKind::Ssb) {
      const double v = config.vev();
      return -config.mu0 * config.mu0 +
             3.0 * config.lambda * v * v * t.dn * t.dn;
    }
    const double A = config.amplitude();
    return 3.0 * config.lambda * A * A * t.sn * t.sn;
  }

  /// Common real period of the backgrounds and mode products, 4K(-1).
  double period() const { return 4.0 * complete_K(-1.0); }
};

enum class ModeProduct { CnDn, SnDn, SnCn };

inline double mode_product(ModeProduct product, double u) {
  const JacobiTriple t = jacobi(u, -1.0);
  switch (product) {
    case ModeProduct::CnDn: return t.cn * t.dn;
    case ModeProduct::SnDn: return t.sn * t.dn;
    case ModeProduct::SnCn: return t.sn * t.cn;
  }
  throw std::invalid_argument("mode_product: unknown product");
}

struct ModeFunction {
  ModeProduct product;
  double normalization = 1.0;
  double claimed_eigenvalue = 0.0;

  double operator()(double u) const {
    return normalization * mode_product(product, u);
  }
};

/// p^2 g'' + W g on a uniform grid u_j = j * period / N, j = 0..N-1, with the
/// second derivative taken spectrally (trigonometric differentiation).
inline std::vector<double> apply_reduced(const LinearizedOperator& op,
                                         std::span<const double> g) {
  const std::size_t N = g.size();
  if (N < 64) {
    throw std::invalid_argument("apply_reduced: grid must have at least 64 points per period");
  }
  const double period = op.period();
  const double p2 = op.momentum_squared();
  const std::size_t half = N / 2;

  // DFT coefficients of the real samples.
  std::vector<double> A(half + 1, 0.0), B(half + 1, 0.0);
  for (std::size_t k = 0; k <= half; ++k) {
    double ak = 0.0, bk = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      const double arg = 2.0 * std::numbers::pi * double(j) * double(k) / double(N);
      ak += g[j] * std::cos(arg);
      bk += g[j] * std::sin(arg);
    }
    A[k] = ak;
    B[k] = bk;
  }

  std::vector<double> out(N);
  for (std::size_t j = 0; j < N; ++j) {
    double d2 = 0.0;
    for (std::size_t k = 1; k <= half; ++k) {
      const double wk = 2.0 * std::numbers::pi * double(k) / period;
      const double arg = 2.0 * std::numbers::pi * double(j) * double(k) / double(N);
      const double weight = (k == half && N % 2 == 0) ? 1.0 : 2.0;
      d2 -= weight * wk * wk * (A[k] * std::cos(arg) + B[k] * std::sin(arg));
    }
    d2 /= double(N);
    const double u = period * double(j) / double(N);
    out[j] = p2 * d2 + op.potential(u) * g[j];
  }
  return out;
}

struct EigenCheck {
  double measured;  // Rayleigh quotient over one period
  double residual;  // max |L chi - eps chi| / max |chi|
};

/// Measure the eigenvalue of a claimed mode by the period-average Rayleigh
/// quotient and report the pointwise residual.
inline EigenCheck eigenvalue_check(const LinearizedOperator& op,
                                   const ModeFunction& mode,
                                   std::size_t grid_points = 1024) {
  const double period = op.period();
  std::vector<double> g(grid_points);
  for (std::size_t j = 0; j < grid_points; ++j) {
    g[j] = mode(period * double(j) / double(grid_points));
  }
  const std::vector<double> lg = apply_reduced(op, g);
  double num = 0.0, den = 0.0, gmax = 0.0;
  for (std::size_t j = 0; j < grid_points; ++j) {
    num += g[j] * lg[j];
    den += g[j] * g[j];
    gmax = std::max(gmax, std::abs(g[j]));
  }
  const double eps = num / den;
  double rmax = 0.0;
  for (std::size_t j = 0; j < grid_points; ++j) {
    rmax = std::max(rmax, std::abs(lg[j] - eps * g[j]));
  }
  return {eps, rmax / gmax};
}

struct FixedPhasePair {
  double shifted_product;  // product evaluated at u + K(-1)
  double closed_form;      // the equivalent sn/cn/dn^2 expression
};

/// Quarter-period-shifted mode products at m = -1 and their closed forms:
///   cn dn (u+K) = -2 sn / dn^2
///   sn cn (u+K) = -sqrt2 sn cn / dn^2
///   sn dn (u+K) =  sqrt2 cn / dn^2
/// (The shift identities carry the factor k' = sqrt2; any leftover constant
/// belongs to the mode normalization.)
inline FixedPhasePair fixed_phase_form(ModeProduct product, double u) {
  const double K = complete_K(-1.0);
  const double shifted = mode_product(product, u + K);
  const JacobiTriple t = jacobi(u, -1.0);
  const double dn2 = t.dn * t.dn;
  double closed = 0.0;
  switch (product) {
    case ModeProduct::CnDn: closed = -2.0 * t.sn / dn2; break;
    case ModeProduct::SnCn: closed = -std::numbers::sqrt2 * t.sn * t.cn / dn2; break;
    case ModeProduct::SnDn: closed = std::numbers::sqrt2 * t.cn / dn2; break;
  }
  return {shifted, closed};
}

}  // namespace elliptica
