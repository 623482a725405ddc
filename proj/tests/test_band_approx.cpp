#include <doctest.h>

#include "fixtures.hpp"
#include "sfrkit/band_approx.hpp"
#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"

using namespace sfrkit;

namespace {

PfrGrid coarse_grid() { return PfrGrid::uniform(40.0, 200.0, 40.0); }

}  // namespace

TEST_CASE("single-band inputs are recovered exactly") {
  const Eigen::ArrayXd t = fit_time_grid();
  const EquivalentBand fast = fit_equivalent_band({{210.0, 0.4}, {0.0, 2.0}}, t);
  CHECK(fast.pfr_mw == doctest::Approx(210.0).epsilon(1e-6));
  CHECK(fast.tau_s == doctest::Approx(0.4).epsilon(1e-6));
  const EquivalentBand slow = fit_equivalent_band({{0.0, 0.4}, {210.0, 2.0}}, t);
  CHECK(slow.pfr_mw == doctest::Approx(210.0).epsilon(1e-6));
  CHECK(slow.tau_s == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(slow.fit_residual < 1e-6);
}

TEST_CASE("two-band equivalent") {
  const EquivalentBand eq = fit_equivalent_band({{130.0, 0.4}, {80.0, 2.0}}, fit_time_grid());
  CHECK(eq.tau_s >= 0.75);
  CHECK(eq.tau_s <= 0.90);
  CHECK(eq.tau_s == doctest::Approx(0.832).epsilon(1e-3));
  CHECK(std::abs(eq.pfr_mw - 210.0) / 210.0 <= 0.02);
  CHECK(eq.fit_residual > 0.0);
}

TEST_CASE("fit input validation") {
  const Eigen::ArrayXd t = fit_time_grid();
  CHECK_THROWS_AS(fit_equivalent_band({{0.0, 0.4}, {0.0, 2.0}}, t), InvalidInput);
  CHECK_THROWS_AS(fit_equivalent_band({{-10.0, 0.4}, {80.0, 2.0}}, t), InvalidInput);
  CHECK_THROWS_AS(fit_equivalent_band({{130.0, 2.0}, {80.0, 0.4}}, t), InvalidInput);
  CHECK_THROWS_AS(fit_equivalent_band({{130.0, 0.4}, {80.0, 2.0}}, fit_time_grid(5.0, 0.01)), InvalidInput);
}

TEST_CASE("tau surface model") {
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  CHECK(model.tau_at_ratio(0.0) == doctest::Approx(0.4));
  CHECK(model.tau_at_ratio(80.0 / 130.0) == doctest::Approx(0.822758641507).epsilon(1e-11));
  double previous = model.tau_at_ratio(0.0);
  for (int i = 1; i <= 200; ++i) {
    const double tau = model.tau_at_ratio(0.1 * i);
    CHECK(tau > previous);
    CHECK(tau < model.a + model.tau1_s);
    previous = tau;
  }
}

TEST_CASE("canonical equivalent band") {
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  const EquivalentBand eq = canonical_equivalent(130.0, 80.0, model);
  CHECK(eq.pfr_mw == 210.0);
  CHECK(eq.tau_s == doctest::Approx(0.8228).epsilon(1e-4));
  CHECK(canonical_equivalent(75.0, 0.0, model).tau_s == doctest::Approx(0.4));

  const EquivalentBand pass = canonical_equivalent(0.0, 210.0, model);
  CHECK(pass.pfr_mw == 210.0);
  CHECK(pass.tau_s == 2.0);
  const EquivalentBand forced = canonical_equivalent(0.0, 210.0, model, DegenerateMode::ForceRatioFormula);
  CHECK(forced.tau_s == doctest::Approx(0.4 + 1.3141629));

  CHECK_THROWS_AS(canonical_equivalent(0.0, 0.0, model), InvalidInput);
  CHECK_THROWS_AS(canonical_equivalent(-1.0, 10.0, model), InvalidInput);
}

TEST_CASE("surface fit on a coarse grid") {
  const SurfaceFit fit = build_tau_surface(0.4, 2.0, coarse_grid());
  CHECK(fit.samples.size() == 25);
  CHECK(fit.skipped_cells == 0);
  CHECK(fit.model.tau1_s == 0.4);
  CHECK(fit.model.tau2_s == 2.0);
  CHECK(fit.model.a > 1.0);
  CHECK(fit.model.a < 1.6);
  CHECK(fit.model.b > 0.4);
  CHECK(fit.model.b < 0.8);
  CHECK(fit.max_pfr_deviation <= 0.02);
  CHECK(fit.rms_residual < 0.05);
  for (const auto& s : fit.samples) {
    CHECK(s.fitted.tau_s >= 0.4 - 1e-9);
    CHECK(s.fitted.tau_s <= 2.0 + 1e-9);
  }
}

TEST_CASE("surface fit is independent of thread count") {
  SurfaceOptions serial, threaded;
  threaded.threads = 4;
  const SurfaceFit a = build_tau_surface(0.4, 2.0, coarse_grid(), serial);
  const SurfaceFit b = build_tau_surface(0.4, 2.0, coarse_grid(), threaded);
  CHECK(a.model.a == b.model.a);
  CHECK(a.model.b == b.model.b);
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].fitted.tau_s == b.samples[i].fitted.tau_s);
}

TEST_CASE("degenerate surfaces") {
  const SurfaceFit same = build_tau_surface(0.8, 0.8, coarse_grid());
  CHECK(same.model.a == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
  for (const auto& s : same.samples) CHECK(s.fitted.tau_s == doctest::Approx(0.8).epsilon(1e-6));

  PfrGrid row;
  row.pfr1_mw = {50.0, 100.0, 150.0};
  row.pfr2_mw = {0.0};
  const SurfaceFit flat = build_tau_surface(0.4, 2.0, row);
  CHECK(flat.model.tau_at_ratio(0.0) == doctest::Approx(0.4));
  for (const auto& s : flat.samples) CHECK(s.fitted.tau_s == doctest::Approx(0.4).epsilon(1e-6));

  PfrGrid with_zero;
  with_zero.pfr1_mw = {0.0, 80.0, 160.0};
  with_zero.pfr2_mw = {40.0, 120.0};
  const SurfaceFit skipped = build_tau_surface(0.4, 2.0, with_zero);
  CHECK(skipped.skipped_cells == 2);
  CHECK(skipped.warnings.size() == 1);

  PfrGrid zeros;
  zeros.pfr1_mw = {0.0};
  zeros.pfr2_mw = {40.0};
  CHECK_THROWS_AS(build_tau_surface(0.4, 2.0, zeros), InvalidInput);
  CHECK_THROWS_AS(build_tau_surface(2.0, 0.4, coarse_grid()), InvalidInput);
}

TEST_CASE("pfr grids") {
  const PfrGrid grid = PfrGrid::default_grid();
  REQUIRE(grid.pfr1_mw.size() == 20);
  CHECK(grid.pfr1_mw.front() == 10.0);
  CHECK(grid.pfr1_mw.back() == 200.0);
  CHECK(square_cells(grid).size() == 400);
  const auto iso = default_mape_cells();
  REQUIRE(iso.size() == 20);
  CHECK(iso.front() == PfrCell{10.0, 200.0});
  CHECK(iso.back() == PfrCell{200.0, 10.0});
  CHECK_THROWS_AS(PfrGrid::uniform(0.0, 10.0, 0.0), InvalidInput);
}

TEST_CASE("MAPE metric") {
  FrequencyTrace exact{0.0, 1.0, Eigen::VectorXd(2)};
  FrequencyTrace approx = exact;
  exact.samples << -1.0, -2.0;
  approx.samples << -1.1, -2.2;
  CHECK(mape(exact, approx) == doctest::Approx(10.0));
  CHECK(mape(exact, exact) == 0.0);

  FrequencyTrace with_zero{0.0, 1.0, Eigen::VectorXd(3)};
  FrequencyTrace approx_zero = with_zero;
  with_zero.samples << 0.0, -1.0, -2.0;
  approx_zero.samples << 0.5, -1.1, -2.2;
  CHECK(mape(with_zero, approx_zero) == doctest::Approx(10.0));

  FrequencyTrace shorter{0.0, 1.0, Eigen::VectorXd::Ones(1)};
  CHECK_THROWS_AS(mape(exact, shorter), InvalidInput);
  FrequencyTrace zeros{0.0, 1.0, Eigen::VectorXd::Zero(2)};
  CHECK_THROWS_AS(mape(zeros, zeros), InvalidInput);
}

TEST_CASE("MAPE map") {
  const SfrSystem sys = fixtures::reference_system();
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  const PfrCell cells[] = {{210.0, 0.0}, {130.0, 80.0}, {0.0, 210.0}};
  const MapeReport report = mape_map(sys, 0.4, 2.0, cells, model);
  REQUIRE(report.cells.size() == 3);
  CHECK(report.cells[0].mape_pct <= 1e-9);
  CHECK(report.cells[2].mape_pct <= 1e-9);
  CHECK(report.cells[1].mape_pct > 0.0);
  CHECK(report.cells[1].mape_pct < 5.0);
  CHECK(report.max_pct == report.cells[1].mape_pct);
  CHECK(report.mean_pct == doctest::Approx(report.cells[1].mape_pct / 3.0));

  // A single cell equals the direct metric.
  const PfrCell one[] = {{130.0, 80.0}};
  const LagBand exact[] = {{130.0, 0.4}, {80.0, 2.0}};
  const LagBand approx[] = {canonical_equivalent(130.0, 80.0, model).band()};
  const TimeGrid grid{30.0, 0.01};
  CHECK(mape_map(sys, 0.4, 2.0, one, model).mean_pct ==
        doctest::Approx(mape(lag_trace(sys, exact, grid), lag_trace(sys, approx, grid))));

  MapeOptions forced;
  forced.mode = DegenerateMode::ForceRatioFormula;
  const PfrCell slow_only[] = {{0.0, 210.0}};
  CHECK(mape_map(sys, 0.4, 2.0, slow_only, model, forced).max_pct > 1.0);

  CHECK_THROWS_AS(mape_map(sys, 0.4, 2.0, std::span<const PfrCell>{}, model), InvalidInput);
  CHECK_THROWS_AS(mape_map(sys, 0.2, 2.0, one, model), InvalidInput);
}

TEST_CASE("MAPE shrinks as the time constants converge") {
  const SfrSystem sys = fixtures::reference_system();
  TauSweepOptions options;
  options.fit_grid = coarse_grid();
  const double tau1[] = {0.8};
  const double tau2[] = {0.8, 0.88, 2.0, 4.0};
  const TauSweepReport report = mape_tau_sweep(sys, tau1, tau2, options);
  REQUIRE(report.cells.size() == 4);
  CHECK(report.cells[0].max_mape_pct <= 1e-6);
  CHECK(report.cells[1].max_mape_pct <= 0.5);
  CHECK(report.cells[1].max_mape_pct < report.cells[2].max_mape_pct);
  CHECK(report.max_pct >= report.cells[3].max_mape_pct);

  const double reversed[] = {0.4};
  const double too_small[] = {0.2};
  CHECK_THROWS_AS(mape_tau_sweep(sys, reversed, too_small, options), InvalidInput);
}
