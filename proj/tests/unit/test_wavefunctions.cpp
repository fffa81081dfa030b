#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/spectrum.hpp"
#include "landau/wavefunctions.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace landau;

namespace {

const ModelGeometry kGeom{40.0, 1.0};

// Least-squares constant K with integral ~ K * closed, and the worst
// relative deviation after the fit.
double fitted_deviation(const std::vector<Complex>& closed, const std::vector<Complex>& integral) {
  Complex num(0.0);
  double den = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    num += std::conj(closed[i]) * integral[i];
    den += std::norm(closed[i]);
  }
  const Complex k = num / den;
  double worst = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i)
    worst = std::max(worst, std::abs(integral[i] - k * closed[i]) / std::abs(integral[i]));
  return worst;
}

}  // namespace

TEST(Phi, EigenEquationSecondOrder) {
  for (Parity p : {Parity::even, Parity::odd}) {
    const double e = 10.0;
    std::vector<double> log_h, log_r;
    for (double h = 1e-2; h > 1e-3; h /= 2.0) {
      double worst = 0.0;
      for (double q : {0.7, 1.3, 2.9, -1.7}) {
        const Complex d = (phi_parity(q + h, e, p) - phi_parity(q - h, e, p)) / (2.0 * h);
        const Complex lhs = Complex(0.0, -1.0) * (q * d + 0.5 * phi_parity(q, e, p));
        worst = std::max(worst, std::abs(lhs - e * phi_parity(q, e, p)));
      }
      log_h.push_back(std::log(h));
      log_r.push_back(std::log(worst));
    }
    EXPECT_NEAR(oracle::fit_slope(log_h, log_r), 2.0, 0.1);
  }
}

TEST(Phi, ParityAndSingularity) {
  EXPECT_EQ(phi_parity(-2.0, 3.0, Parity::even), phi_parity(2.0, 3.0, Parity::even));
  EXPECT_EQ(phi_parity(-2.0, 3.0, Parity::odd), -phi_parity(2.0, 3.0, Parity::odd));
  try {
    phi_parity(0.0, 3.0, Parity::even);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::singularity);
  }
}

TEST(ClosedForm, ParitySymmetry) {
  Draw d(8008);
  for (int i = 0; i < 200; ++i) {
    const double x = d.uniform(-10.0, 10.0), y = d.uniform(-10.0, 10.0), e = d.uniform(0.0, 30.0);
    const Complex ev = psi_closed_form(x, y, e, kGeom, Parity::even);
    const Complex od = psi_closed_form(x, y, e, kGeom, Parity::odd);
    ASSERT_LE(std::abs(psi_closed_form(-x, -y, e, kGeom, Parity::even) - ev), 1e-12 * std::abs(ev));
    ASSERT_LE(std::abs(psi_closed_form(-x, -y, e, kGeom, Parity::odd) + od), 1e-12 * std::abs(od));
  }
  EXPECT_EQ(psi_closed_form(0.0, 0.0, 10.0, kGeom, Parity::odd), Complex(0.0, 0.0));
  EXPECT_EQ(psi_closed_form(0.0, 0.0, 10.0, kGeom, Parity::even), Complex(1.0, 0.0));
}

TEST(ClosedForm, IntegralRepresentation) {
  Draw d(9009);
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<Complex> closed, integral;
    const double e = 10.0;
    for (int i = 0; i < 10; ++i) {
      const double x = d.uniform(-10.0, 10.0), y = d.uniform(-10.0, 10.0);
      closed.push_back(psi_closed_form(x, y, e, kGeom, p));
      integral.push_back(psi_integral_rep(x, y, e, kGeom, p));
    }
    EXPECT_LT(fitted_deviation(closed, integral), 1e-8);
    // The fitted constant is the analytic one.
    const Complex k = integral_constant(e, kGeom, p);
    for (std::size_t i = 0; i < closed.size(); ++i)
      EXPECT_LT(std::abs(integral[i] - k * closed[i]), 1e-8 * std::abs(integral[i]));
  }
}

TEST(Edge, AsymptoticConverges) {
  for (Parity p : {Parity::even, Parity::odd}) {
    double prev = INFINITY;
    for (double big : {10.0, 20.0, 40.0}) {
      const ModelGeometry g{big, 1.0};
      double worst = 0.0;
      for (double x : {0.5, 1.0, 2.0}) {
        const double exact = std::abs(psi_closed_form(big, x, 10.0, g, p));
        const double asym = std::abs(edge_asymptotic(x, 10.0, g, p, Edge::x_edge));
        worst = std::max(worst, std::fabs(exact / asym - 1.0));
      }
      EXPECT_LT(worst, prev) << big;
      prev = worst;
    }
  }
}

TEST(Edge, YEdgeMatchesClosedFormAtLargeL) {
  // The y = L edge sits on the decaying side of M and is accurate already.
  const ModelGeometry g{40.0, 1.0};
  for (Parity p : {Parity::even, Parity::odd}) {
    const Complex exact = psi_closed_form(1.0, 40.0, 10.0, g, p);
    const Complex asym = edge_asymptotic(1.0, 10.0, g, p, Edge::y_edge);
    EXPECT_LT(std::abs(exact - asym) / std::abs(exact), 0.3);
  }
}

TEST(Grid, SymmetryAndNormalization) {
  const auto g = ModelGeometry::from_log_ratio(10.0);
  const auto grid = grid_field(10.0, g, Parity::even, 40);
  EXPECT_EQ(grid.x(0), -10.0);
  EXPECT_EQ(grid.x(39), 10.0);
  for (std::size_t j = 0; j < 40; ++j)
    for (std::size_t i = 0; i < 40; ++i) {
      const Complex a = grid.at(i, j), b = grid.at(39 - i, 39 - j);
      ASSERT_LE(std::abs(a - b), 1e-10 * std::abs(a));
    }
  const auto odd = grid_field(10.0, g, Parity::odd, 41);
  EXPECT_EQ(odd.at(20, 20), Complex(0.0, 0.0));
  const auto sup = grid_field(10.0, g, Parity::even, 40, NormalizationMode::sup_one);
  double peak = 0.0;
  for (const auto& v : sup.values) peak = std::max(peak, std::abs(v));
  EXPECT_NEAR(peak, 1.0, 1e-15);
  EXPECT_THROW(grid_field(10.0, g, Parity::even, 8), DomainError);
}

TEST(Ridge, SyntheticHyperbola) {
  FieldGrid grid;
  grid.x_min = grid.y_min = -10.0;
  grid.x_max = grid.y_max = 10.0;
  grid.n_x = grid.n_y = 101;
  grid.values.resize(101 * 101);
  for (std::size_t j = 0; j < 101; ++j)
    for (std::size_t i = 0; i < 101; ++i) {
      const double s = grid.x(i) * grid.y(j) - 10.0;
      grid.values[j * 101 + i] = std::exp(-s * s);
    }
  const auto hit = ridge_report(grid, 10.0);
  EXPECT_GT(hit.checked, 20u);
  EXPECT_TRUE(hit.within_one_cell());
  const auto miss = ridge_report(grid, 30.0);
  EXPECT_FALSE(miss.within_one_cell());
}
