#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "elliptica/elliptic.hpp"
#include "elliptica/oracle.hpp"

using namespace elliptica;

namespace {

// Quadrature oracle for K(m): the defining integral, integrated adaptively.
double K_quadrature(double m) {
  return oracle::quadrature(
      [m](double theta) {
        const double s = std::sin(theta);
        return 1.0 / std::sqrt(1.0 - m * s * s);
      },
      0.0, std::numbers::pi / 2.0, 1e-14);
}

}  // namespace

TEST_CASE("complete_K special values") {
  REQUIRE(complete_K(0.0) == Catch::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
  REQUIRE(std::abs(complete_K(-1.0) - 1.3110287) < 1e-7);
  REQUIRE(std::abs(complete_K(0.5) - K_quadrature(0.5)) < 1e-12 * complete_K(0.5));
  REQUIRE_THROWS_AS(complete_K(1.0), std::domain_error);
  REQUIRE_THROWS_AS(complete_K(2.0), std::domain_error);
}

TEST_CASE("complete_K matches the quadrature oracle across m in [-10, 0.99]") {
  for (double m = -10.0; m < 0.995; m += 0.37) {
    const double k = complete_K(m);
    REQUIRE(std::abs(k - K_quadrature(m)) < 1e-12 * k);
  }
}

TEST_CASE("jacobi origin and quarter-period values") {
  for (double m : {-5.0, -1.0, -0.2, 0.0, 0.3, 0.9}) {
    const JacobiTriple t0 = jacobi(0.0, m);
    REQUIRE(t0.sn == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(t0.cn == Catch::Approx(1.0).epsilon(1e-14));
    REQUIRE(t0.dn == Catch::Approx(1.0).epsilon(1e-14));

    const double K = complete_K(m);
    const JacobiTriple tk = jacobi(K, m);
    REQUIRE(std::abs(tk.sn - 1.0) < 1e-10);
    REQUIRE(std::abs(tk.cn) < 1e-10);
    REQUIRE(std::abs(tk.dn - std::sqrt(1.0 - m)) < 1e-10);
  }
}

TEST_CASE("jacobi at u = K(-1), m = -1") {
  const double K = complete_K(-1.0);
  const JacobiTriple t = jacobi(K, -1.0);
  REQUIRE(std::abs(t.sn - 1.0) < 1e-12);
  REQUIRE(std::abs(t.cn) < 1e-12);
  REQUIRE(std::abs(t.dn - std::numbers::sqrt2) < 1e-12);

  const JacobiTriple d = jacobi_derivatives(K, -1.0);
  REQUIRE(std::abs(d.sn) < 1e-11);                       // cn dn
  REQUIRE(std::abs(d.cn + std::numbers::sqrt2) < 1e-11); // -sn dn
  REQUIRE(std::abs(d.dn) < 1e-11);                       // -m sn cn
}

TEST_CASE("periodicity in 4K") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double m = um(rng), u = uu(rng);
    const double period = 4.0 * complete_K(m);
    const JacobiTriple a = jacobi(u, m);
    const JacobiTriple b = jacobi(u + period, m);
    REQUIRE(std::abs(a.sn - b.sn) < 1e-10);
    REQUIRE(std::abs(a.cn - b.cn) < 1e-10);
    REQUIRE(std::abs(a.dn - b.dn) < 1e-10);
  }
}

TEST_CASE("algebraic identities over random (u, m)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double m = um(rng), u = uu(rng);
    const JacobiTriple t = jacobi(u, m);
    REQUIRE(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0) < 1e-11);
    REQUIRE(std::abs(t.dn * t.dn + m * t.sn * t.sn - 1.0) < 1e-11);
    REQUIRE(std::abs(t.sn) <= 1.0 + 1e-12);
    REQUIRE(t.dn > 0.0);
  }
}

TEST_CASE("defining ODE sn'' = -(1+m) sn + 2 m sn^3 by finite differences") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double m = um(rng), u = uu(rng);
    auto sn = [m](double v) { return jacobi(v, m).sn; };
    const double s = sn(u);
    const double lhs = oracle::finite_diff(sn, u, 2, 2e-3);
    REQUIRE(std::abs(lhs - (-(1.0 + m) * s + 2.0 * m * s * s * s)) < 1e-8);
  }
}

TEST_CASE("first derivatives match finite differences") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> um(-5.0, 0.99), uu(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double m = um(rng), u = uu(rng);
    const JacobiTriple d = jacobi_derivatives(u, m);
    auto sn = [m](double v) { return jacobi(v, m).sn; };
    auto cn = [m](double v) { return jacobi(v, m).cn; };
    auto dn = [m](double v) { return jacobi(v, m).dn; };
    REQUIRE(std::abs(oracle::finite_diff(sn, u, 1, 1e-3) - d.sn) < 1e-9);
    REQUIRE(std::abs(oracle::finite_diff(cn, u, 1, 1e-3) - d.cn) < 1e-9);
    REQUIRE(std::abs(oracle::finite_diff(dn, u, 1, 1e-3) - d.dn) < 1e-9);
  }
}

TEST_CASE("jacobi rejects bad input") {
  REQUIRE_THROWS_AS(jacobi(0.5, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(jacobi(std::numeric_limits<double>::infinity(), 0.5),
                    std::domain_error);
}

TEST_CASE("nome: special values and sign convention") {
  REQUIRE(nome(0.0) == 0.0);
  // Self-complementary point: K' = K, q = e^{-pi}.
  REQUIRE(std::abs(nome(0.5) - std::exp(-std::numbers::pi)) < 1e-13);
  REQUIRE(std::abs(nome(-1.0) + std::exp(-std::numbers::pi)) < 1e-13);
  REQUIRE_THROWS_AS(nome(1.0), std::domain_error);
  for (double m : {-5.0, -1.0, -0.1, 0.2, 0.9}) {
    const double q = nome(m);
    REQUIRE(std::abs(q) < 1.0);
    REQUIRE((m < 0 ? q < 0 : q > 0));
  }
}

TEST_CASE("nome(-1) from a quadrature fit of the dn Fourier series") {
  // First cosine coefficient of dn(u,-1): c1 = (2 pi / K) q / (1 + q^2).
  const double K = complete_K(-1.0);
  auto dn = [](double u) { return jacobi(u, -1.0).dn; };
  const double c1 = oracle::fourier_cos_coefficient(dn, 2.0 * K, 1);
  const double a = c1 * K / (2.0 * std::numbers::pi);
  // Solve a (1 + q^2) = q for the root with |q| < 1.
  const double q = (1.0 - std::sqrt(1.0 - 4.0 * a * a)) / (2.0 * a);
  REQUIRE(std::abs(q - nome(-1.0)) < 1e-10);
  REQUIRE(q < 0.0);
}

TEST_CASE("EllipticParameter derived data") {
  const EllipticParameter half(0.5);
  REQUIRE(half.K > 0.0);
  REQUIRE(std::abs(half.Kprime - half.K) < 1e-13);  // self-complementary
  REQUIRE(std::abs(half.q - std::exp(-std::numbers::pi)) < 1e-13);

  const EllipticParameter zero(0.0);
  REQUIRE(zero.K == Catch::Approx(std::numbers::pi / 2.0));
  REQUIRE(zero.q == 0.0);

  const EllipticParameter neg(-1.0);
  REQUIRE(std::abs(neg.K - 1.3110287) < 1e-7);
  REQUIRE(neg.q < 0.0);
  // Co-period is defined through the signed nome: |q| = exp(-pi K'/K).
  REQUIRE(std::abs(std::exp(-std::numbers::pi * neg.Kprime / neg.K) -
                   std::abs(neg.q)) < 1e-15);
  for (double m : {-3.0, -0.5, 0.1, 0.8}) {
    REQUIRE(EllipticParameter(m).K > 0.0);
  }
}
