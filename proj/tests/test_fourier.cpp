#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "elliptica/fourier.hpp"
#include "elliptica/green.hpp"
#include "elliptica/oracle.hpp"

using namespace elliptica;

namespace {

const FieldConfig kMassive{Family::MassiveSn, 1.0, 1.0, 2.0};
const FieldConfig kMassless{Family::MasslessSn, 0.0, 1.0, 2.0};
const FieldConfig kSsb{Family::SsbDn, std::sqrt(3.0), 0.0, 2.0};

}  // namespace

TEST_CASE("sn series: odd function, peak value, convergence") {
  REQUIRE(sn_series(0.0, -1.0, 8) == Catch::Approx(0.0).margin(1e-15));
  const double K = complete_K(-1.0);
  REQUIRE(std::abs(sn_series(K, -1.0, 8) - 1.0) < 1e-4);

  for (int i = 0; i <= 100; ++i) {
    const double u = -2.0 * K + 4.0 * K * i / 100.0;
    REQUIRE(std::abs(sn_series(u, -1.0, 8) - jacobi(u, -1.0).sn) < 1e-4);
    REQUIRE(std::abs(sn_series(u, -1.0, 16) - jacobi(u, -1.0).sn) < 1e-8);
  }
}

TEST_CASE("sn series for the massive parameter") {
  const double mp = modulus_parameter(kMassive);  // -1/2
  const double K = complete_K(mp);
  for (int i = 0; i <= 100; ++i) {
    const double u = 4.0 * K * i / 100.0;
    REQUIRE(std::abs(sn_series(u, mp, 16) - jacobi(u, mp).sn) < 1e-8);
  }
  // Positive parameters use the plain positive nome.
  for (int i = 0; i <= 50; ++i) {
    const double u = 4.0 * complete_K(0.4) * i / 50.0;
    REQUIRE(std::abs(sn_series(u, 0.4, 16) - jacobi(u, 0.4).sn) < 1e-8);
  }
  REQUIRE(sn_series(0.7, 0.0, 4) == std::sin(0.7));
}

TEST_CASE("dn series: value at zero, constant term, periodicity") {
  REQUIRE(std::abs(dn_series(0.0, 8) - 1.0) < 1e-4);
  REQUIRE(std::abs(dn_series(0.0, 24) - 1.0) < 1e-12);

  const double K = complete_K(-1.0);
  REQUIRE(std::numbers::pi / (2.0 * K) == Catch::Approx(1.19814).epsilon(1e-5));

  for (int i = 0; i <= 50; ++i) {
    const double u = 2.0 * K * i / 50.0;
    REQUIRE(dn_series(u, 8) == Catch::Approx(dn_series(u + 2.0 * K, 8)).margin(1e-13));
    REQUIRE(std::abs(dn_series(u, 16) - jacobi(u, -1.0).dn) < 1e-8);
  }
}

TEST_CASE("dn constant term equals the period average by quadrature") {
  const double K = complete_K(-1.0);
  auto dn = [](double u) { return jacobi(u, -1.0).dn; };
  const double mean = oracle::fourier_cos_coefficient(dn, 2.0 * K, 0);
  REQUIRE(std::abs(mean - std::numbers::pi / (2.0 * K)) < 1e-10);
}

TEST_CASE("dn series signs match quadrature coefficients") {
  // The oscillatory coefficients alternate: quadrature decides the sign
  // convention, term by term.
  const double K = complete_K(-1.0);
  const double q = nome(-1.0);
  auto dn = [](double u) { return jacobi(u, -1.0).dn; };
  for (int n = 1; n <= 6; ++n) {
    const double measured = oracle::fourier_cos_coefficient(dn, 2.0 * K, n);
    const double series = 2.0 * std::numbers::pi / K * std::pow(q, n) /
                          (1.0 + std::pow(q, 2 * n));
    REQUIRE(measured == Catch::Approx(series).margin(1e-12));
    REQUIRE(((n % 2 == 1) ? measured < 0.0 : measured > 0.0));
  }
}

TEST_CASE("Parseval: oscillatory power of dn(u,-1)") {
  const double K = complete_K(-1.0);
  const SeriesSpec spec = series_spec(kSsb, 24);
  const double v = kSsb.vev();
  double coeff_power = 0.0;
  for (int n = 1; n < spec.order; ++n) {
    const double c = spec.coefficients[n] / v;  // bare dn coefficients
    coeff_power += 0.5 * c * c;
  }
  const double mean = std::numbers::pi / (2.0 * K);
  auto f = [mean](double u) {
    const double d = jacobi(u, -1.0).dn - mean;
    return d * d;
  };
  const double direct = oracle::fourier_cos_coefficient(f, 2.0 * K, 0);
  REQUIRE(std::abs(coeff_power - direct) < 1e-8);
}

TEST_CASE("coefficients decay geometrically") {
  // The nome power grows by one per stored coefficient in every family.
  for (const FieldConfig& c : {kMassive, kMassless, kSsb}) {
    const SeriesSpec spec = series_spec(c, 16);
    const double ratio = std::abs(spec.q);
    for (int n = 4; n + 1 < spec.order; ++n) {
      REQUIRE(std::abs(spec.coefficients[n + 1]) <=
              ratio * std::abs(spec.coefficients[n]) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("field series reproduces the solutions, amplitude attached") {
  for (const FieldConfig& c : {kMassive, kMassless, kSsb}) {
    const WaveFrame frame = rest_frame(c);
    const double K = complete_K(modulus_parameter(c));
    for (int i = 0; i <= 60; ++i) {
      const double u = 4.0 * K * i / 60.0;
      const std::array<double, 4> x{u / frame.p[0], 0.0, 0.0, 0.0};
      REQUIRE(std::abs(field_series(c, u, 20) - evaluate(c, frame, x)) < 1e-8);
      REQUIRE(field_series(c, u, 20, -1) == -field_series(c, u, 20, +1));
    }
  }
}

TEST_CASE("epsilon spectrum equals the propagator mass spectrum exactly") {
  for (const FieldConfig& c : {kMassive, kMassless, kSsb}) {
    const auto eps = epsilon_spectrum(c, 32);
    const auto masses = mass_spectrum(c, 32);
    for (int n = 0; n < 32; ++n) {
      REQUIRE(eps[n] == masses[n]);  // bitwise
    }
  }
  REQUIRE(epsilon_spectrum(kSsb, 4)[0] == 0.0);
  REQUIRE(epsilon_spectrum(kMassless, 1)[0] == Catch::Approx(1.19814).epsilon(1e-5));
}

TEST_CASE("argument guards") {
  REQUIRE_THROWS_AS(sn_series(0.0, -1.0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(sn_series(0.0, 1.5, 4), std::domain_error);
  REQUIRE_THROWS_AS(dn_series(0.0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(epsilon_spectrum(kMassless, 0), std::invalid_argument);
}
