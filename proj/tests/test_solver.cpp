#include <stdexcept>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ns1d/errors.hpp"
#include "ns1d/solver.hpp"
#include "oracles.hpp"

using namespace ns1d;

namespace {

constexpr double kPi = std::numbers::pi;

FluidParams params(double gamma, double A = 1.0, ViscosityLaw law = ViscosityLaw::constant(1.0)) {
  return {gamma, A, std::move(law)};
}

InitialData make_initial(std::function<double(double)> rho0, std::function<double(double)> u0,
                         bool normalize = false) {
  InitialData d;
  d.rho0 = std::move(rho0);
  d.u0 = std::move(u0);
  d.normalize_mass = normalize;
  return d;
}

}  // namespace

TEST_CASE("tridiagonal_solve: identity and 2x2") {
  std::vector<double> rhs{1.0, 2.0, 3.0};
  auto x = tridiagonal_solve({0.0, 0.0}, {1.0, 1.0, 1.0}, {0.0, 0.0}, rhs);
  for (std::size_t k = 0; k < 3; ++k) CHECK(x[k] == rhs[k]);

  // [[2,1],[1,2]] x = [3,3] -> x = [1,1]
  auto y = tridiagonal_solve({1.0}, {2.0, 2.0}, {1.0}, {3.0, 3.0});
  CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(tridiagonal_solve({}, {0.0}, {}, {1.0}), NumericalError);
}

TEST_CASE("tridiagonal_solve vs dense elimination oracle") {
  std::mt19937 rng(4711);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  const int n = 50;
  std::vector<double> lower(n - 1), diag(n), upper(n - 1), rhs(n);
  for (int k = 0; k < n - 1; ++k) {
    lower[k] = off(rng);
    upper[k] = off(rng);
  }
  for (int k = 0; k < n; ++k) {
    diag[k] = 3.0 + std::fabs(off(rng));  // strictly dominant
    rhs[k] = 10.0 * off(rng);
  }
  auto x = tridiagonal_solve(lower, diag, upper, rhs);

  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    a[k][k] = diag[k];
    if (k > 0) a[k][k - 1] = lower[k - 1];
    if (k < n - 1) a[k][k + 1] = upper[k];
  }
  auto ref = oracles::dense_solve(a, rhs);
  for (int k = 0; k < n; ++k) CHECK(std::fabs(x[k] - ref[k]) < 1e-10);

  // residual bound
  double bmax = 0.0, rmax = 0.0;
  for (int k = 0; k < n; ++k) {
    double ax = diag[k] * x[k];
    if (k > 0) ax += lower[k - 1] * x[k - 1];
    if (k < n - 1) ax += upper[k] * x[k + 1];
    rmax = std::max(rmax, std::fabs(ax - rhs[k]));
    bmax = std::max(bmax, std::fabs(rhs[k]));
  }
  CHECK(rmax <= 1e-10 * (1.0 + bmax));
}

TEST_CASE("init_state: sampling, normalization, endpoint checks") {
  Grid g(100);

  auto s = init_state(make_initial([](double) { return 1.0; }, [](double) { return 0.0; }), g);
  CHECK(integrate(s.rho, g) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.t == 0.0);

  // rho0 = 2x already has unit mass; normalization must not disturb it
  auto v = init_state(
      make_initial([](double x) { return 2.0 * x; }, [](double) { return 0.0; }, true), g);
  for (int i = 0; i < g.n; ++i) {
    CHECK(v.rho[i] == doctest::Approx(2.0 * g.cell_center(i)).epsilon(1e-13));
  }
  CHECK(integrate(v.rho, g) == doctest::Approx(1.0).epsilon(1e-14));

  // sin(pi x) vanishes at both ends, cos(pi x) does not
  CHECK_NOTHROW(init_state(
      make_initial([](double) { return 1.0; }, [](double x) { return std::sin(kPi * x); }), g));
  CHECK_THROWS_AS(
      init_state(make_initial([](double) { return 1.0; },
                              [](double x) { return std::cos(kPi * x); }),
                 g),
      std::invalid_argument);
  CHECK_THROWS_AS(
      init_state(make_initial([](double x) { return x - 0.5; }, [](double) { return 0.0; }),
                 g),
      std::invalid_argument);

  // endpoints pinned exactly even though sin(pi) is only ~1e-16
  auto w = init_state(
      make_initial([](double) { return 1.0; }, [](double x) { return std::sin(kPi * x); }), g);
  CHECK(w.u[0] == 0.0);
  CHECK(w.u[100] == 0.0);
}

TEST_CASE("compatibility residual") {
  Grid g(200);
  auto fp = params(2.0);

  // rest state with uniform density: P_x = 0 and u = 0 -> residual 0
  auto rest = init_state(make_initial([](double) { return 1.0; }, [](double) { return 0.0; }), g);
  auto r0 = compatibility_residual(rest, fp, g, 1e-8);
  CHECK(r0.residual == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r0.excluded_cells == 0);

  // rho=1, u0=sin(pi x), mu=1: g = -pi^2 sin(pi x), residual pi^2/sqrt(2)
  auto s = init_state(
      make_initial([](double) { return 1.0; }, [](double x) { return std::sin(kPi * x); }), g);
  auto r1 = compatibility_residual(s, fp, g, 1e-8);
  CHECK(r1.residual == doctest::Approx(6.978864199638879).epsilon(0.02));
  CHECK(r1.used_cells == 200);

  // vacuum-touching data: cells below the threshold are excluded and counted
  auto vac = init_state(
      make_initial([](double x) { return 2.0 * x; }, [](double) { return 0.0; }, true), g);
  auto r2 = compatibility_residual(vac, fp, g, 0.05);
  CHECK(r2.excluded_cells > 0);
  CHECK(r2.used_cells + r2.excluded_cells == 200);
  CHECK(std::isfinite(r2.residual));

  CHECK_THROWS_AS(compatibility_residual(vac, fp, g, 10.0), std::domain_error);
}

TEST_CASE("compute_dt") {
  Grid g(100);
  SolverConfig cfg;  // cfl 0.4, dt_max 0.01

  auto rest = init_state(make_initial([](double) { return 1.0; }, [](double) { return 0.0; }), g);
  CHECK(compute_dt(rest, cfg, params(2.0), g) ==
        doctest::Approx(0.0028284271247461903).epsilon(1e-13));

  // empty state: no signal speed at all
  State nothing;
  nothing.rho = CellField(100, 0.0);
  nothing.u = FaceField(101, 0.0);
  CHECK(compute_dt(nothing, cfg, params(2.0), g) == cfg.dt_max);

  // max(|u| + c) = 10 with cfl = 0.5 -> dt = 5e-4
  State fast;
  fast.rho = CellField(100, 0.0);
  fast.u = FaceField(101, 0.0);
  fast.u[50] = 10.0;
  SolverConfig half;
  half.cfl = 0.5;
  CHECK(compute_dt(fast, half, params(2.0), g) == doctest::Approx(5e-4).epsilon(1e-13));
}

TEST_CASE("step: rest state is a fixed point") {
  Grid g(100);
  SolverConfig cfg;
  auto fp = params(2.0);
  auto s = init_state(make_initial([](double) { return 1.0; }, [](double) { return 0.0; }), g);
  auto s1 = step(s, 1e-3, fp, ForceField::zero(), g, cfg);
  for (int i = 0; i < g.n; ++i) CHECK(s1.rho[i] == 1.0);
  for (int j = 0; j <= g.n; ++j) CHECK(s1.u[j] == 0.0);
  CHECK(s1.t == doctest::Approx(1e-3).epsilon(1e-15));
}

TEST_CASE("step: mass conservation and boundaries, random states") {
  Grid g(64);
  SolverConfig cfg;
  auto fp = params(1.4);
  auto force = ForceField::sinusoid(0.5, 1.0, 0.2);
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> rv(0.0, 2.0);
  std::uniform_real_distribution<double> uv(-0.5, 0.5);
  for (int trial = 0; trial < 25; ++trial) {
    State s;
    s.t = 0.0;
    s.rho = CellField(64);
    for (auto& r : s.rho.v) r = rv(rng);
    s.u = FaceField(65);
    for (auto& u : s.u.v) u = uv(rng);
    s.u[0] = 0.0;
    s.u[64] = 0.0;

    double dt = compute_dt(s, cfg, fp, g);
    auto s1 = step(s, dt, fp, force, g, cfg);
    CHECK(std::fabs(integrate(s1.rho, g) - integrate(s.rho, g)) <=
          1e-14 * std::max(1.0, integrate(s.rho, g)));
    CHECK(s1.u[0] == 0.0);
    CHECK(s1.u[64] == 0.0);
    for (double r : s1.rho.v) CHECK(r >= 0.0);
  }
}

TEST_CASE("step: discrete steady state persists (gamma=2, f=1)") {
  Grid g(200);
  SolverConfig cfg;
  auto fp = params(2.0);
  auto force = ForceField::constant(1.0);
  auto st = solve_stationary(force, fp, 1.0, g);

  State s;
  s.t = 0.0;
  s.rho = st.profile;
  s.u = FaceField(201, 0.0);
  double dt = compute_dt(s, cfg, fp, g);
  auto s1 = step(s, dt, fp, force, g, cfg);
  // the affine profile satisfies the discrete balance exactly, so the
  // post-step velocity is pure roundoff
  double umax = 0.0;
  for (double u : s1.u.v) umax = std::max(umax, std::fabs(u));
  CHECK(umax <= 1e-12);
}

TEST_CASE("step: steady-profile kick is O(dx^2), dt-independent") {
  auto fp = params(1.4);
  auto force = ForceField::sinusoid(1.0, 1.0, 0.0);
  auto kick = [&](int n, double dt_scale) {
    Grid g(n);
    SolverConfig cfg;
    auto st = solve_stationary(force, fp, 1.0, g);
    State s;
    s.rho = st.profile;
    s.u = FaceField(static_cast<std::size_t>(n) + 1, 0.0);
    double dt = dt_scale * compute_dt(s, cfg, fp, g);
    auto s1 = step(s, dt, fp, force, g, cfg);
    double umax = 0.0;
    for (double u : s1.u.v) umax = std::max(umax, std::fabs(u));
    return umax;
  };
  double k100 = kick(100, 1.0);
  double k200 = kick(200, 1.0);
  CHECK(k100 < 1e-3);
  CHECK(std::log2(k100 / k200) >= 1.5);  // spatial truncation only, ~order 2
  // halving dt must not grow the kick
  CHECK(kick(200, 0.5) <= k200 * 1.01);
}

TEST_CASE("velocity decays without forcing") {
  Grid g(100);
  SolverConfig cfg;
  auto fp = params(2.0);
  auto force = ForceField::zero();
  auto initial = make_initial([](double) { return 1.0; },
                              [](double x) { return 0.1 * std::sin(kPi * x); });
  State s = init_state(initial, g);
  double u0 = lp_norm(s.u, 2.0, g);
  while (s.t < 5.0) {
    s = step(s, compute_dt(s, cfg, fp, g), fp, force, g, cfg);
  }
  CHECK(lp_norm(s.u, 2.0, g) < u0);
}

TEST_CASE("discrete energy inequality without forcing") {
  // The explicit pressure/advection split exchanges an O(dt^2) amount of
  // energy per step, so the 1e-8 * E(0) budget binds a time-step regime;
  // assert the inequality there, and assert the quadratic shrink that
  // justifies it.
  Grid g(100);
  auto fp = params(2.0);
  auto force = ForceField::zero();
  auto initial = make_initial([](double) { return 1.0; },
                              [](double x) { return 0.05 * std::sin(kPi * x); });

  auto worst_uptick = [&](double cfl) {
    SolverConfig cfg;
    cfg.cfl = cfl;
    State s = init_state(initial, g);
    double e_prev = energy(s, fp, force, g);
    double worst = 0.0;
    while (s.t < 5.0) {
      s = step(s, compute_dt(s, cfg, fp, g), fp, force, g, cfg);
      double e = energy(s, fp, force, g);
      worst = std::max(worst, e - e_prev);
      e_prev = e;
    }
    return worst;
  };

  State s0 = init_state(initial, g);
  double e0 = energy(s0, fp, force, g);
  double w02 = worst_uptick(0.2);
  CHECK(w02 <= 1e-8 * e0);
  CHECK(worst_uptick(0.4) / w02 >= 3.0);  // O(dt^2)
}

TEST_CASE("an exact vacuum plateau runs without pivot failure") {
  // rho0 is identically zero on [0, 0.3]: interior faces there carry zero
  // mass, so the momentum rows are only weakly dominant and survive solely
  // because mu >= mu_lower > 0
  Grid g(100);
  SolverConfig cfg;
  auto fp = params(2.0, 1.0, ViscosityLaw::affine(1.0, 0.5));
  auto force = ForceField::constant(1.0);
  InitialData init;
  init.rho0 = [](double x) { return x < 0.3 ? 0.0 : 2.0 * (x - 0.3); };
  init.u0 = [](double x) { return 0.05 * x * (1.0 - x); };
  init.normalize_mass = true;
  auto result = run(init, fp, force, g, cfg, 0.5, 0.1);
  CHECK(result.final_state.t == doctest::Approx(0.5).epsilon(1e-12));
  for (double r : result.final_state.rho.v) CHECK(r >= 0.0);
  CHECK(std::fabs(integrate(result.final_state.rho, g) - 1.0) <= 1e-12);
}

TEST_CASE("vacuum-touching data runs without breakage") {
  Grid g(100);
  SolverConfig cfg;
  auto fp = params(2.0, 1.0, ViscosityLaw::power(0.5, 0.5, 1.0));
  auto force = ForceField::constant(1.0);
  auto initial = make_initial([](double x) { return 2.0 * x; }, [](double) { return 0.0; }, true);
  auto result = run(initial, fp, force, g, cfg, 1.0, 0.25);
  CHECK(result.final_state.t == doctest::Approx(1.0).epsilon(1e-12));
  for (double r : result.final_state.rho.v) CHECK(r >= 0.0);
  for (const auto& rec : result.records) {
    CHECK(std::fabs(rec.mass - 1.0) <= 1e-11);
  }
}

TEST_CASE("run: record cadence and t_end = 0") {
  Grid g(50);
  SolverConfig cfg;
  auto fp = params(2.0);
  auto initial = make_initial([](double) { return 1.0; }, [](double) { return 0.0; });

  auto r0 = run(initial, fp, ForceField::zero(), g, cfg, 0.0, 0.5);
  CHECK(r0.records.size() == 1);
  CHECK(r0.records[0].t == 0.0);

  auto r1 = run(initial, fp, ForceField::zero(), g, cfg, 1.0, 0.25);
  REQUIRE(r1.records.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(r1.records[k].t == doctest::Approx(0.25 * k).epsilon(1e-15));
}

TEST_CASE("self-convergence at order >= 0.9 on smooth data") {
  auto fp = params(1.4, 1.0, ViscosityLaw::power(0.5, 1.0, 1.0));
  auto force = ForceField::sinusoid(1.0, 1.0, 0.0);
  auto initial = make_initial(
      [](double x) { return 1.0 + 0.2 * std::sin(2.0 * kPi * x); },
      [](double x) { return 0.1 * std::sin(kPi * x); }, true);

  std::vector<State> finals;
  for (int n : {50, 100, 200}) {
    Grid g(n);
    SolverConfig cfg;
    finals.push_back(run(initial, fp, force, g, cfg, 0.5, 0.5).final_state);
  }
  double prev_err = 0.0;
  for (int k = 0; k + 1 < 3; ++k) {
    int nc = 50 << k;
    Grid cg(nc);
    CellField diff(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i) {
      diff[i] = finals[k].rho[i] - 0.5 * (finals[k + 1].rho[2 * i] + finals[k + 1].rho[2 * i + 1]);
    }
    double err = lp_norm(diff, 2.0, cg);
    if (k > 0) CHECK(std::log2(prev_err / err) >= 0.9);
    prev_err = err;
  }
}
