// Self-check suite: every closed-form object in the library is replayed
// against the independent oracle machinery and the cross-module identities.
// Used by the `verify` CLI subcommand; the test suite runs the same checks at
// full sample counts.

#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "elliptica/elliptic.hpp"
#include "elliptica/fourier.hpp"
#include "elliptica/green.hpp"
#include "elliptica/modes.hpp"
#include "elliptica/oracle.hpp"
#include "elliptica/solutions.hpp"

namespace elliptica {

struct CheckResult {
  std::string name;
  bool pass;
  double value;  // the measured worst-case quantity
  double tol;
};

struct VerifyOptions {
  std::string only;                     // empty = run everything
  double tol = 1e-8;                    // series/eigenpair tolerance
  double inject_dispersion_error = 0.0; // relative p^2 perturbation (negative control)
  unsigned seed = 20260823;
  int identity_samples = 2000;
  int eom_samples = 100;
  int zdelta_samples = 1000;
};

namespace detail {

inline FieldConfig massive_config() { return {Family::MassiveSn, 1.0, 1.0, 2.0}; }
inline FieldConfig massless_config() { return {Family::MasslessSn, 0.0, 1.0, 2.0}; }
inline FieldConfig ssb_config() { return {Family::SsbDn, std::sqrt(3.0), 0.0, 2.0}; }

// Field-equation residual with an optional relative perturbation of the
// on-shell p^2, bypassing the library's on-shell guard so that a wrong
// dispersion shows up as a failed residual rather than a rejected frame.
inline double perturbed_eom_residual(const FieldConfig& config,
                                     const std::array<double, 3>& q,
                                     double theta,
                                     const std::array<double, 4>& x, double h,
                                     double p2_error) {
  const double p2 = dispersion(config) * (1.0 + p2_error);
  const double e = std::sqrt(p2 + q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
  const std::array<double, 4> p{e, q[0], q[1], q[2]};
  const double mp = modulus_parameter(config);
  const double A = config.amplitude();
  auto phi = [&](const std::array<double, 4>& y) {
    const double u = p[0] * y[0] - p[1] * y[1] - p[2] * y[2] - p[3] * y[3] + theta;
    const JacobiTriple t = jacobi(u, mp);
    return A * (config.kind == Family::SsbDn ? t.dn : t.sn);
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
  const double s = config.kind == Family::MassiveSn   ? 1.0
                   : config.kind == Family::SsbDn     ? -1.0
                                                      : 0.0;
  const double r = d2[0] - d2[1] - d2[2] - d2[3] +
                   s * config.mu0 * config.mu0 * phi0 +
                   config.lambda * phi0 * phi0 * phi0;
  return std::abs(r) / std::max(1.0, std::abs(phi0 * phi0 * phi0));
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(opt.seed);
  auto wanted = [&](const std::string& name) {
    return opt.only.empty() || opt.only == name;
  };
  auto record = [&](const std::string& name, double value, double tol) {
    results.push_back({name, value <= tol, value, tol});
  };

  if (wanted("k_golden")) {
    record("k_golden", std::abs(complete_K(-1.0) - 1.3110287), 1e-7);
  }

  if (wanted("identities")) {
    std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-50.0, 50.0);
    double worst = 0.0;
    for (int i = 0; i < opt.identity_samples; ++i) {
      const double m = um(rng), u = uu(rng);
      const JacobiTriple t = jacobi(u, m);
      worst = std::max(worst, std::abs(t.sn * t.sn + t.cn * t.cn - 1.0));
      worst = std::max(worst, std::abs(t.dn * t.dn + m * t.sn * t.sn - 1.0));
    }
    record("identities", worst, 1e-11);
  }

  if (wanted("defining_ode")) {
    std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double m = um(rng), u = uu(rng);
      auto sn = [m](double v) { return jacobi(v, m).sn; };
      const double lhs = oracle::finite_diff(sn, u, 2, 2e-3);
      const double s = jacobi(u, m).sn;
      worst = std::max(worst, std::abs(lhs - (-(1.0 + m) * s + 2.0 * m * s * s * s)));
    }
    record("defining_ode", worst, 1e-8);
  }

  if (wanted("eom")) {
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uq(-1.0, 1.0);
    double worst = 0.0;
    for (const FieldConfig& c : {detail::massive_config(), detail::massless_config(),
                                 detail::ssb_config()}) {
      for (int i = 0; i < opt.eom_samples; ++i) {
        const std::array<double, 3> q{uq(rng), uq(rng), uq(rng)};
        const std::array<double, 4> x{ux(rng), ux(rng), ux(rng), ux(rng)};
        worst = std::max(worst,
                         detail::perturbed_eom_residual(c, q, 0.3, x, 1e-3,
                                                        opt.inject_dispersion_error));
      }
    }
    record("eom", worst, 1e-5);
  }

  if (wanted("zdelta")) {
    std::uniform_real_distribution<double> up(0.1, 3.0);
    double worst = 0.0;
    for (int i = 0; i < opt.zdelta_samples; ++i) {
      const FieldConfig c{Family::MassiveSn, up(rng), up(rng), up(rng)};
      const double a = z_delta(c), b = z_delta_reduced(c), d = z_delta_jump(c);
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
      worst = std::max(worst, std::abs(a - d) / std::abs(a));
    }
    record("zdelta", worst, 1e-10);
  }

  if (wanted("green_oracle")) {
    double worst = 0.0;
    for (const FieldConfig& c : {detail::massive_config(), detail::massless_config(),
                                 detail::ssb_config()}) {
      const double w = effective_mass(c);
      const double period = 4.0 * complete_K(modulus_parameter(c)) / w;
      std::vector<double> ts;
      for (int i = 1; i <= 200; ++i) ts.push_back(2.0 * period * i / 200.0);
      oracle::OdeProblem problem;
      problem.frequency_sq = [&c](double t) { return green_potential(c, 0, t); };
      problem.y0 = 0.0;
      problem.yp0 = -1.0;
      problem.t1 = 2.0 * period;
      problem.tol = 1e-12;
      const auto traj = oracle::integrate(problem, ts);
      for (const auto& pt : traj) {
        worst = std::max(worst, std::abs(pt.y - rest_frame_green(c, 0, pt.t)));
      }
    }
    record("green_oracle", worst, 1e-6);
  }

  if (wanted("eigenpairs")) {
    const FieldConfig ml = detail::massless_config();
    const FieldConfig sb = detail::ssb_config();
    const LinearizedOperator lop(OperatorKind::Massless, ml, rest_frame(ml));
    const LinearizedOperator sop(OperatorKind::Ssb, sb, rest_frame(sb));
    const double p2m = lop.momentum_squared();
    const double p2s = sop.momentum_squared();
    double worst = 0.0;
    auto check = [&](const LinearizedOperator& op, ModeProduct prod, double claimed,
                     double p2) {
      const EigenCheck ec = eigenvalue_check(op, {prod, 1.0, claimed});
      worst = std::max(worst, std::abs(ec.measured - claimed) / p2);
    };
    check(lop, ModeProduct::CnDn, 0.0, p2m);
    check(lop, ModeProduct::SnDn,
          3.0 * ml.mu * ml.mu * std::sqrt(ml.lambda / 2.0), p2m);
    check(sop, ModeProduct::SnCn, 0.0, p2s);
    check(sop, ModeProduct::CnDn, sb.mu0 * sb.mu0, p2s);
    record("eigenpairs", worst, opt.tol);
  }

  if (wanted("kl_sum")) {
    const PoleSum poles = kl_weights(detail::massless_config(), 10);
    double total = 0.0;
    for (const PoleEntry& e : poles.entries) total += e.residue;
    record("kl_sum", std::abs(total - 1.0), 1e-3);
  }

  if (wanted("fourier")) {
    double worst = 0.0;
    const double K = complete_K(-1.0);
    for (int i = 0; i <= 200; ++i) {
      const double u = 4.0 * K * i / 200.0;
      worst = std::max(worst, std::abs(sn_series(u, -1.0, 16) - jacobi(u, -1.0).sn));
      worst = std::max(worst, std::abs(dn_series(u, 16) - jacobi(u, -1.0).dn));
    }
    record("fourier", worst, opt.tol);
  }

  if (wanted("spectra")) {
    double worst = 0.0;
    for (const FieldConfig& c : {detail::massive_config(), detail::massless_config(),
                                 detail::ssb_config()}) {
      const auto a = mass_spectrum(c, 32);
      const auto b = epsilon_spectrum(c, 32);
      for (int n = 0; n < 32; ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
    }
    record("spectra", worst, 0.0);
  }

  if (wanted("zero_mode_shift")) {
    const double K = complete_K(-1.0);
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double u = 4.0 * K * i / 400.0;
      const FixedPhasePair p = fixed_phase_form(ModeProduct::CnDn, u);
      worst = std::max(worst, std::abs(p.shifted_product - p.closed_form));
    }
    record("zero_mode_shift", worst, 1e-10);
  }

  return results;
}

}  // namespace elliptica
