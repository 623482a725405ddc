#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"

using namespace sfrkit;

namespace {

// Direct transcriptions used as independent references.
double nadir_time_rate_form(double dp, double h, double p, double pfr, double tau) {
  return std::log(1.0 + (p / pfr) * (dp * tau / (2.0 * h) - 1.0)) / (dp / (2.0 * h) - 1.0 / tau);
}

double nadir_time_group_form(double a, double k, double tau) { return tau * std::log(1.0 + k * (a - 1.0)) / (a - 1.0); }

double nadir_deviation_power_form(double dp, double pfr, double a, double k) {
  const double b = 1.0 + k * (a - 1.0);
  const double c = a / (a - 1.0);
  return pfr / dp * ((c + k - 1.0) * std::pow(b, -c) - c * std::pow(b, -c / a) - k + 1.0);
}

struct RandomCase {
  SfrSystem sys;
  LagBand band;
  double a;
  double k;
};

RandomCase random_solvable(std::mt19937_64& gen, double min_gap_from_one) {
  for (;;) {
    const double p_load = fixtures::uniform(gen, 500.0, 5000.0);
    const double d = fixtures::uniform(gen, 0.01, 0.08);
    const double ke = fixtures::uniform(gen, 2000.0, 20000.0);
    const double p = fixtures::uniform(gen, 50.0, 600.0);
    const double pfr = fixtures::uniform(gen, 50.0, 600.0);
    const double tau = fixtures::uniform(gen, 0.1, 10.0);
    const SfrSystem sys({50.0, ke, p_load, d, p});
    const double a = sys.d_prime() * tau / (2.0 * sys.inertia());
    const double k = p / pfr;
    if (std::abs(a - 1.0) < min_gap_from_one) continue;
    if (1.0 + k * (a - 1.0) <= 1e-3) continue;
    return {sys, {pfr, tau}, a, k};
  }
}

}  // namespace

TEST_CASE("lag closed form at the reference setting") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand band{270.0, 2.0};
  CHECK(lag_delta_f(sys, band, 0.0) == 0.0);
  CHECK(lag_delta_f(sys, band, 3.4576) == doctest::Approx(-0.9739).epsilon(1e-4));
  CHECK(lag_delta_f(sys, band, 1e3) == doctest::Approx(-0.375).epsilon(1e-12));
  CHECK(lag_delta_f(sys, band, 1e3) == doctest::Approx(asymptotic_nadir(sys, 270.0)).epsilon(1e-12));
}

TEST_CASE("multi-lag closed form") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand single[] = {{270.0, 2.0}};
  const LagBand two[] = {{130.0, 0.4}, {80.0, 2.0}};
  const LagBand swapped[] = {{80.0, 2.0}, {130.0, 0.4}};
  for (double t : {0.0, 0.5, 2.0, 7.0, 30.0}) {
    CHECK(multi_lag_delta_f(sys, single, t) == lag_delta_f(sys, single[0], t));
    CHECK(multi_lag_delta_f(sys, two, t) == doctest::Approx(multi_lag_delta_f(sys, swapped, t)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(multi_lag_delta_f(sys, std::span<const LagBand>{}, 1.0), InvalidInput);
}

TEST_CASE("ramp closed form") {
  const SfrSystem sys = fixtures::reference_system();
  CHECK(ramp_delta_f(sys, {270.0, 6.0}, 1.0) == doctest::Approx(-0.689118187929).epsilon(1e-11));
  CHECK(ramp_delta_f(sys, {270.0, 6.0}, 0.0) == 0.0);
  // Deliberately unclamped: the ramp keeps growing past t_r.
  CHECK(ramp_delta_f(sys, {270.0, 1.0}, 30.0) > 10.0);
}

TEST_CASE("closed forms need damping and valid inputs") {
  auto sc = fixtures::reference_conditions();
  sc.d_relief = 0.0;
  const SfrSystem undamped(sc);
  CHECK_THROWS_AS(lag_delta_f(undamped, {270.0, 2.0}, 1.0), InvalidInput);
  CHECK_THROWS_AS(ramp_delta_f(undamped, {270.0, 2.0}, 1.0), InvalidInput);
  CHECK_THROWS_AS(asymptotic_nadir(undamped, 270.0), InvalidInput);
  const SfrSystem sys = fixtures::reference_system();
  CHECK_THROWS_AS(lag_delta_f(sys, {270.0, 2.0}, -1.0), InvalidInput);
  CHECK_THROWS_AS(lag_delta_f(sys, {-270.0, 2.0}, 1.0), InvalidInput);
}

TEST_CASE("nadir solvability") {
  const SfrSystem sys = fixtures::reference_system();
  CHECK(nadir_solvable(sys, {270.0, 2.0}));
  CHECK_FALSE(nadir_solvable(sys, {210.0, 0.4}));
  CHECK(nadir_solvable(sys, {300.0, 0.1}));
  // Threshold PFR = P_cont (1 - A) = 273.33 MW at tau = 0.4 s.
  CHECK_FALSE(nadir_solvable(sys, {273.3, 0.4}));
  CHECK(nadir_solvable(sys, {273.4, 0.4}));
}

TEST_CASE("nadir time and deviation at the reference setting") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand band{270.0, 2.0};
  CHECK(lag_nadir_time(sys, band) == doctest::Approx(3.45766302067).epsilon(1e-11));
  CHECK(lag_nadir_deviation(sys, band) == doctest::Approx(-0.974034440408).epsilon(1e-11));

  const NadirResult r = lag_nadir(sys, band);
  CHECK(r.kind == NadirKind::InteriorMinimum);
  REQUIRE(r.t_nadir_s.has_value());
  CHECK(*r.t_nadir_s == doctest::Approx(3.45766302067).epsilon(1e-11));
  CHECK(r.max_rocof_hz_per_s == doctest::Approx(-0.8333333333333).epsilon(1e-12));

  // Stationarity of the trace at the nadir.
  const double t = lag_nadir_time(sys, band);
  const double h = 1e-4;
  CHECK(std::abs((lag_delta_f(sys, band, t + h) - lag_delta_f(sys, band, t - h)) / (2 * h)) <= 1e-6);
}

TEST_CASE("asymptotic branch") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand band{210.0, 0.4};
  CHECK_THROWS_AS(lag_nadir_time(sys, band), BranchError);
  CHECK_THROWS_AS(lag_nadir_deviation(sys, band), BranchError);
  CHECK(asymptotic_nadir(sys, 210.0) == doctest::Approx(-1.125));
  CHECK(asymptotic_nadir(sys, 300.0) == 0.0);
  const NadirResult r = lag_nadir(sys, band);
  CHECK(r.kind == NadirKind::Asymptotic);
  CHECK_FALSE(r.t_nadir_s.has_value());
  CHECK(r.delta_f_nadir_hz == doctest::Approx(-1.125));
}

TEST_CASE("maximum RoCoF") {
  const SfrSystem sys = fixtures::reference_system();
  CHECK(max_rocof(sys) == doctest::Approx(-300.0 / 360.0));
  CHECK(max_rocof(sys.with_contingency(0.0)) == 0.0);
  CHECK(max_rocof(sys.with_contingency(-300.0)) == doctest::Approx(300.0 / 360.0));
  // Initial slope of the closed form.
  const double h = 1e-7;
  CHECK(lag_delta_f(sys, {270.0, 2.0}, h) / h == doctest::Approx(max_rocof(sys)).epsilon(1e-5));
}

TEST_CASE("over-frequency events mirror under-frequency events") {
  const SfrSystem under = fixtures::reference_system();
  const SfrSystem over = under.with_contingency(-300.0);
  CHECK(lag_nadir_deviation(over, {-270.0, 2.0}) == doctest::Approx(-lag_nadir_deviation(under, {270.0, 2.0})));
  CHECK(lag_nadir_time(over, {-270.0, 2.0}) == doctest::Approx(lag_nadir_time(under, {270.0, 2.0})));
}

TEST_CASE("nadir time limit at A = 1") {
  // D' = 80, H = 180: A = 1 at tau = 4.5 s. P_cont = 300, PFR = 270 gives K = 1.1111.
  const SfrSystem sys = fixtures::reference_system();
  CHECK(lag_nadir_time(sys, {270.0, 4.5}) == doctest::Approx(300.0 / 270.0 * 4.5).epsilon(1e-14));
  for (double s : {1.0 - 1e-6, 1.0 + 1e-6}) {
    const double tau = 4.5 * s;
    CHECK(lag_nadir_time(sys, {270.0, tau}) == doctest::Approx(300.0 / 270.0 * tau).epsilon(1e-6));
  }
}

TEST_CASE("lag closed form is continuous across D' tau = 2H") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand limit{270.0, 4.5};
  double worst = 0.0;
  for (double s : {1.0 - 1e-7, 1.0 + 1e-7}) {
    const LagBand near{270.0, 4.5 * s};
    for (int i = 0; i <= 3000; ++i) {
      const double t = i * 0.01;
      worst = std::max(worst, std::abs(lag_delta_f(sys, near, t) - lag_delta_f(sys, limit, t)));
    }
  }
  CHECK(worst <= 1e-6);
  // The limit-branch nadir also matches the trace.
  CHECK(lag_nadir_deviation(sys, limit) ==
        doctest::Approx(lag_delta_f(sys, limit, lag_nadir_time(sys, limit))).epsilon(1e-12));
}

TEST_CASE("nadir identities on random solvable inputs") {
  auto gen = fixtures::rng();
  double worst_identity = 0.0, worst_power = 0.0, worst_time = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const RandomCase c = random_solvable(gen, 1e-2);
    const double t = lag_nadir_time(c.sys, c.band);
    CHECK(t > 0.0);
    const double nadir = lag_nadir_deviation(c.sys, c.band);
    worst_identity = std::max(worst_identity, std::abs(nadir - lag_delta_f(c.sys, c.band, t)));
    worst_power = std::max(
        worst_power, std::abs(nadir - nadir_deviation_power_form(c.sys.d_prime(), c.band.pfr_mw, c.a, c.k)));
    const double rate_form =
        nadir_time_rate_form(c.sys.d_prime(), c.sys.inertia(), c.sys.p_cont(), c.band.pfr_mw, c.band.tau_s);
    worst_time = std::max(worst_time, fixtures::rel_err(nadir_time_group_form(c.a, c.k, c.band.tau_s), rate_form));
    CHECK(fixtures::rel_err(t, rate_form) <= 1e-9);
  }
  CHECK(worst_identity <= 1e-9);
  CHECK(worst_power <= 1e-9);
  CHECK(worst_time <= 1e-12);
}

TEST_CASE("nadir bracket") {
  CHECK(nadir_bracket(1.0, 1.0) == doctest::Approx(-std::exp(-1.0)));
  CHECK(nadir_bracket(0.5, 1.0) == doctest::Approx(-0.25).epsilon(1e-15));
  // B = 0 boundary: the bracket meets the asymptotic value 1 - K.
  const double k = 1.0 / 0.7;
  const double a_boundary = 1.0 - 1.0 / k;
  CHECK(nadir_bracket(a_boundary, k) == doctest::Approx(1.0 - k));
  CHECK(nadir_bracket(a_boundary * (1.0 + 1e-6), k) == doctest::Approx(1.0 - k).epsilon(1e-4));
  CHECK_THROWS_AS(nadir_bracket(0.1, k), BranchError);
}

TEST_CASE("closed-form traces") {
  const SfrSystem sys = fixtures::reference_system();
  const LagBand lag[] = {{270.0, 2.0}};
  const RampBand ramp[] = {{270.0, 6.0}};
  const FrequencyTrace lt = lag_trace(sys, lag, {30.0, 1e-3});
  CHECK(lt.size() == 30001);
  CHECK(lt.samples[0] == 0.0);
  CHECK(lt.samples[3458] == doctest::Approx(lag_delta_f(sys, lag[0], 3.458)));
  const FrequencyTrace two = lag_trace(sys, lag, {0.1, 0.1});
  CHECK(two.size() == 2);
  CHECK(two.samples[0] == 0.0);
  const FrequencyTrace rt = ramp_trace(sys, ramp, {10.0, 0.5});
  CHECK(rt.samples[2] == doctest::Approx(ramp_delta_f(sys, ramp[0], 1.0)));
  CHECK_THROWS_AS(lag_trace(sys, lag, {30.0, 0.0}), InvalidInput);
  const FrequencyTrace again = lag_trace(sys, lag, {30.0, 1e-3});
  CHECK((again.samples.array() == lt.samples.array()).all());
}
