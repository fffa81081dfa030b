#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "landau/counting.hpp"
#include "landau/errors.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace landau;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<double>& oracle_zeros() {
  static const std::vector<double> zeros = oracle::z_sign_changes(150.0, 0.01);
  return zeros;
}

}  // namespace

TEST(SmoothCount, ZeroAndAsymptotics) {
  EXPECT_EQ(smooth_count(0.0), 1.0);
  const double e = 1000.0, x = e / kTwoPi;
  EXPECT_NEAR(smooth_count(e) - (x * std::log(x) - x), 0.875, 1e-5);
  // The 7/8 constant itself, from the 50-digit oracle at a height where the
  // next correction 1/(48 pi E) is below 1e-9.
  EXPECT_NEAR(oracle::smooth_count_offset(1e7), 0.875, 1e-9);
  EXPECT_NEAR(oracle::smooth_count_offset(1000.0), smooth_count(1000.0) - (x * std::log(x) - x), 1e-10);
  EXPECT_THROW(smooth_count(-1.0), DomainError);
}

TEST(ExactCount, OracleZeros) {
  const auto& ref = oracle_zeros();
  const auto below_100 = std::count_if(ref.begin(), ref.end(), [](double z) { return z < 100.0; });
  EXPECT_EQ(below_100, 29);
  EXPECT_EQ(exact_count(100.0), 29);
  const auto zeros = locate_zeros(150.0);
  ASSERT_EQ(zeros.size(), ref.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) EXPECT_NEAR(zeros[i], ref[i], 1e-8) << i;
  EXPECT_TRUE(std::is_sorted(zeros.begin(), zeros.end(), std::less_equal<>{}) &&
              std::adjacent_find(zeros.begin(), zeros.end()) == zeros.end());
  EXPECT_NEAR(zeros.front(), 14.134725141734693, 1e-8);
}

TEST(ExactCount, EdgeCases) {
  EXPECT_THROW(exact_count(0.0), DomainError);
  EXPECT_EQ(exact_count(14.0), 0);
  EXPECT_EQ(exact_count(14.2), 1);
  EXPECT_TRUE(locate_zeros(10.0).empty());
  try {
    exact_count(600.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ceiling_exceeded);
  }
}

TEST(ExactCount, NonDecreasing) {
  std::int64_t prev = 0;
  for (double e = 1.0; e <= 100.0; e += 1.0) {
    const auto n = exact_count(e);
    ASSERT_GE(n, prev) << e;
    prev = n;
  }
}

TEST(Fluctuation, CountingIdentity) {
  const auto& ref = oracle_zeros();
  Draw d(5005);
  int checked = 0;
  while (checked < 50) {
    const double e = d.uniform(1.0, 150.0);
    const bool near_zero = std::any_of(ref.begin(), ref.end(), [&](double z) { return std::fabs(z - e) < 1e-3; });
    if (near_zero) continue;
    const double lhs = smooth_count(e) + fluctuation(e);
    ASSERT_LT(std::fabs(lhs - static_cast<double>(exact_count(e))), 1e-6) << e;
    ++checked;
  }
}

TEST(Fluctuation, SmallValuesAndMean) {
  // Below the first zero N = 0, so S = -N-bar.
  EXPECT_NEAR(fluctuation(10.0), -smooth_count(10.0), 1e-10);
  double sum = 0.0;
  for (int i = 0; i < 500; ++i) sum += fluctuation(20.0 + 100.0 * (i + 0.5) / 500.0);
  EXPECT_LT(std::fabs(sum / 500.0), 0.1);
}

TEST(Fluctuation, ZeroProximity) {
  AccuracySpec acc;
  acc.abs_tol = 1e-6;
  try {
    fluctuation(14.134725141734693, acc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_proximity);
  }
}

TEST(CountingTable, Consistency) {
  std::vector<double> grid;
  for (double e = 0.0; e <= 60.0; e += 2.5) grid.push_back(e);
  const auto geom = ModelGeometry::from_log_ratio(10.0);
  const auto rows = counting_table(grid, geom);
  ASSERT_EQ(rows.size(), grid.size());
  EXPECT_FALSE(rows.front().s_fluct.has_value());
  EXPECT_EQ(rows.front().n_exact, 0);
  EXPECT_EQ(rows.front().n_sc, 0.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].s_fluct.has_value());
    EXPECT_EQ(rows[i].n_exact, std::llround(rows[i].n_smooth + *rows[i].s_fluct));
    EXPECT_EQ(rows[i].n_exact, exact_count(grid[i]));
    EXPECT_GE(rows[i].n_exact, rows[i - 1].n_exact);
  }
}

TEST(Geometry, Validation) {
  EXPECT_THROW((ModelGeometry{0.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((ModelGeometry{1.0, 2.0}.validate()), DomainError);
  EXPECT_THROW((ModelGeometry{5.0, -1.0}.validate()), DomainError);
  const auto g = ModelGeometry::from_log_ratio(10.0, 0.5);
  EXPECT_NEAR(g.log_ratio(), 10.0, 1e-13);
  EXPECT_NEAR(g.L * g.L / (kTwoPi * 0.25), std::exp(10.0), 1e-8 * std::exp(10.0));
  EXPECT_THROW((HigherLevelParams{1.0, 0.5}.validate()), DomainError);
  EXPECT_THROW((HigherLevelParams{50.0, -0.1}.validate()), DomainError);
}

TEST(Semiclassical, MatchesQuadratureArea) {
  Draw d(6006);
  for (int i = 0; i < 20; ++i) {
    const double ell = d.log_uniform(0.2, 5.0);
    const double L = ell * d.log_uniform(2.0, 300.0);
    const ModelGeometry g{L, ell};
    const double e = d.uniform(1e-3, 1.0) * g.e_max();
    const double exact = semiclassical_count(e, g);
    const double area = area_count_numeric(e, g, AreaMethod::quadrature);
    ASSERT_LT(std::fabs(exact - area), 1e-10 * std::max(1.0, std::fabs(exact))) << e << " " << L << " " << ell;
  }
}

TEST(Semiclassical, Edges) {
  const auto g = ModelGeometry::from_log_ratio(10.0);
  EXPECT_EQ(semiclassical_count(0.0, g), 0.0);
  EXPECT_THROW(semiclassical_count(g.e_max() * 1.01, g), DomainError);
  EXPECT_THROW(semiclassical_count(-1.0, g), DomainError);
  // At E = L^2/l^2 the region is the whole square.
  EXPECT_NEAR(semiclassical_count(g.e_max(), g), g.e_max() / kTwoPi, 1e-9 * g.e_max());
}

TEST(MonteCarlo, AgreesAndIsReproducible) {
  const ModelGeometry g{10.0, 1.0};
  const double exact = semiclassical_count(10.0, g);
  const double mc = area_count_numeric(10.0, g, AreaMethod::monte_carlo, 42, 1'000'000);
  EXPECT_NEAR(mc, exact, 5e-3);
  EXPECT_EQ(mc, area_count_numeric(10.0, g, AreaMethod::monte_carlo, 42, 1'000'000));
  EXPECT_NE(mc, area_count_numeric(10.0, g, AreaMethod::monte_carlo, 43, 1'000'000));
  try {
    area_count_numeric(10.0, g, AreaMethod::monte_carlo, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::sample_budget);
  }
}

TEST(MissingStates, Values) {
  const auto g = ModelGeometry::from_log_ratio(10.0);
  const auto m0 = missing_states(0.0, g);
  EXPECT_EQ(m0.continuum_term, 1.0);
  EXPECT_EQ(m0.n_missing, 1.0);
  const double e = 30.0;
  const auto a = missing_states(e, g);
  const auto b = missing_states(e, ModelGeometry{2.0 * g.L, g.ell});
  EXPECT_NEAR(b.continuum_term - a.continuum_term, e / kTwoPi * 2.0 * std::log(2.0), 1e-12);
  EXPECT_EQ(a.n_missing, smooth_count(e));
}

TEST(HigherLevel, Reduction) {
  Draw d(7007);
  for (int i = 0; i < 50; ++i) {
    const ModelGeometry g{d.log_uniform(5.0, 500.0), 1.0};
    const double e = d.uniform(0.0, g.e_max());
    EXPECT_EQ(higher_level_count(e, g, {d.uniform(1.5, 200.0), 0.0}), semiclassical_count(e, g));
  }
  const ModelGeometry g{100.0, 1.0};
  const double e = 10.0, gamma = 50.0, z = 1.0;
  const double expected = gamma * z * z / kTwoPi * (g.log_ratio() - std::log(e / kTwoPi));
  EXPECT_NEAR(higher_level_count(e, g, {gamma, z}) - semiclassical_count(e, g), expected, 1e-11);
  EXPECT_THROW(higher_level_count(0.0, g, {gamma, z}), DomainError);
}
