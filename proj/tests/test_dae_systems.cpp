#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "dae/elliptic.hpp"
#include "dae/system.hpp"
#include "rng.hpp"

using kandae::Rng;
using kandae::dae::DaeSystem;
using kandae::dae::IndexForm;
using kandae::dae::StateSample;
using kandae::dae::sncndn;
using kandae::dae::system_by_name;

namespace {

double rel(double got, double ref) {
  return std::abs(got - ref) / std::max(std::abs(ref), 1.0);
}

// solve the two dynamic rows for du[2], du[3] so that the full state moves
// along the flow; probes the residual instead of assuming a mass matrix
std::vector<double> flow_derivative(const DaeSystem& sys, const std::vector<double>& u,
                                    const std::vector<double>& z) {
  auto rows = [&](double a, double b) {
    std::vector<double> du = {u[2], u[3], a, b};
    std::vector<double> F;
    sys.residual(IndexForm::index3, 0.0, u, du, z, F);
    return std::array<double, 2>{F[2], F[3]};
  };
  const auto r0 = rows(0.0, 0.0);
  const auto ra = rows(1.0, 0.0);
  const auto rb = rows(0.0, 1.0);
  const double a11 = ra[0] - r0[0], a12 = rb[0] - r0[0];
  const double a21 = ra[1] - r0[1], a22 = rb[1] - r0[1];
  const double det = a11 * a22 - a12 * a21;
  REQUIRE(std::abs(det) > 1e-12);
  const double d2 = (-r0[0] * a22 + r0[1] * a12) / det;
  const double d3 = (-a11 * r0[1] + a21 * r0[0]) / det;
  return {u[2], u[3], d2, d3};
}

}  // namespace

TEST_SUITE("dae_systems") {

TEST_CASE("jacobi elliptic functions at parameter one half") {
  // (t, sn, cn, dn)
  const std::array<std::array<double, 4>, 8> table = {{
      {0.1, 0.099750685474624838, 0.99501246260905821, 0.99750934851442432},
      {0.25, 0.24615967096986146, 0.96922928989378439, 0.98473484156599475},
      {0.5, 0.47075047365565728, 0.88226639489044029, 0.94297242577738569},
      {0.73, 0.64505443033887504, 0.76413662515298232, 0.88991706970374195},
      {1.0, 0.80300182489564389, 0.59597656767214067, 0.82316100163159627},
      {1.37, 0.9397642993099296, 0.34182314395388304, 0.7472760740658425},
      {2.0, 0.99466232535801768, -0.10318361552776183, 0.71086104778408733},
      {3.1, 0.55707365408965212, -0.83046309004025135, 0.91914877574830143},
  }};
  for (const auto& row : table) {
    const auto j = sncndn(row[0], 0.5);
    CHECK(std::abs(j.sn - row[1]) <= 1e-13);
    CHECK(std::abs(j.cn - row[2]) <= 1e-13);
    CHECK(std::abs(j.dn - row[3]) <= 1e-13);
  }
}

TEST_CASE("jacobi identities and limits") {
  for (double m : {0.0, 0.1, 0.5, 0.9}) {
    for (double t = -4.0; t <= 8.0; t += 0.37) {
      const auto j = sncndn(t, m);
      CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) <= 1e-12);
      CHECK(std::abs(j.dn * j.dn + m * j.sn * j.sn - 1.0) <= 1e-12);
    }
  }
  const auto j0 = sncndn(0.8, 0.0);
  CHECK(j0.sn == doctest::Approx(std::sin(0.8)).epsilon(1e-15));
  CHECK(j0.cn == doctest::Approx(std::cos(0.8)).epsilon(1e-15));
  CHECK(j0.dn == 1.0);
  CHECK_THROWS_AS(sncndn(0.5, 1.0), kandae::Error);
  CHECK_THROWS_AS(sncndn(0.5, -0.1), kandae::Error);
}

TEST_CASE("pendulum exact solution against frozen states") {
  // (t, x, y, u, v, lambda)
  const std::array<std::array<double, 6>, 5> table = {{
      {0.3, 0.9989878074707742, -0.044981779919600499, -0.013491801793804561,
       -0.29963566397135988, 0.13494533975880149},
      {0.73, 0.96487697225872104, -0.26270216673039315, -0.19041908766338769,
       -0.69938895080936858, 0.78810650019117956},
      {2.0, -0.20419321478828042, -0.97893060583190838, -1.3697548850034142,
       0.28571448453499954, 2.9367918174957253},
      {5.1, -0.59004952999927174, -0.80736704920849878, 1.0259389752893948,
       -0.74978884854280425, 2.4221011476254963},
      {10.0, -0.81158644619130382, -0.58423235134539575, -0.63152914906501756,
       0.87728879884106936, 1.752697054036187},
  }};
  const auto& sys = system_by_name("pendulum");
  for (const auto& row : table) {
    const StateSample s = sys.exact_solution(row[0]);
    for (int i = 0; i < 4; ++i) CHECK(rel(s.u[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(i) + 1]) <= 1e-13);
    CHECK(rel(s.z[0], row[5]) <= 1e-13);
  }
}

TEST_CASE("exact solutions satisfy every index form") {
  struct Entry {
    const char* name;
    double t_hi;
  };
  for (const Entry e : {Entry{"pendulum", 10.0}, Entry{"particle", 6.28}, Entry{"robot", 6.28}}) {
    CAPTURE(e.name);
    const auto& sys = system_by_name(e.name);
    Rng rng(99);
    for (IndexForm form : {IndexForm::index1, IndexForm::index2, IndexForm::index3}) {
      for (int rep = 0; rep < 50; ++rep) {
        const double t = rng.uniform(0.0, e.t_hi);
        const StateSample s = sys.exact_solution(t);
        std::vector<double> F;
        sys.residual(form, t, s.u, s.du, s.z, F);
        REQUIRE(F.size() == 5);
        for (double f : F) CHECK(std::abs(f) <= 1e-12);
      }
    }
  }
}

TEST_CASE("initial conditions are consistent") {
  struct Want {
    const char* name;
    std::array<double, 5> ics;
  };
  const std::array<Want, 3> wants = {{
      {"pendulum", {1.0, 0.0, 0.0, 0.0, 0.0}},
      {"particle", {1.0, 0.0, 0.0, 1.0, 1.0}},
      {"robot", {0.0, 0.0, 1.0, -2.0, 1.0}},
  }};
  for (const auto& w : wants) {
    CAPTURE(w.name);
    const auto& sys = system_by_name(w.name);
    const std::vector<double> ics = sys.consistent_ics();
    REQUIRE(ics.size() == 5);
    for (int i = 0; i < 5; ++i)
      CHECK(std::abs(ics[static_cast<std::size_t>(i)] - w.ics[static_cast<std::size_t>(i)]) <= 1e-15);
    const StateSample s0 = sys.exact_solution(0.0);
    for (int level : {1, 2, 3})
      CHECK(std::abs(sys.constraint_residual(level, s0)) <= 1e-14);
  }
}

TEST_CASE("differentiating a constraint level yields the next one") {
  struct Case {
    const char* name;
    std::vector<double> u;
    std::vector<double> z;
    double factor32;  // d/dt(level 3) = factor * level 2 along the flow
  };
  // pendulum needs the position constraint satisfied for the level-2 to
  // level-1 step, so its base point sits on the unit circle
  const std::vector<Case> cases = {
      {"pendulum", {0.6, 0.8, 0.5, -0.2}, {0.7}, 2.0},
      {"pendulum", {-0.28, 0.96, -1.1, 0.35}, {-0.3}, 2.0},
      {"particle", {0.3, -1.1, 0.8, 0.25}, {-0.4}, 2.0},
      {"particle", {1.2, 0.5, -0.6, 0.9}, {1.3}, 2.0},
      {"robot", {0.4, -0.7, 1.2, 0.5}, {0.9}, 1.0},
      {"robot", {-1.1, 0.3, 0.2, -0.8}, {-0.5}, 1.0},
  };
  const double h = 1e-6;
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto& sys = system_by_name(c.name);
    const std::vector<double> du = flow_derivative(sys, c.u, c.z);

    auto shifted = [&](double s) {
      StateSample smp;
      smp.u = {c.u[0] + s * du[0], c.u[1] + s * du[1], c.u[2] + s * du[2],
               c.u[3] + s * du[3]};
      smp.du = du;
      smp.z = c.z;
      return smp;
    };
    const StateSample base = shifted(0.0);

    const double slope32 =
        (sys.constraint_residual(3, shifted(h)) - sys.constraint_residual(3, shifted(-h))) /
        (2.0 * h);
    CHECK(slope32 == doctest::Approx(c.factor32 * sys.constraint_residual(2, base))
                         .epsilon(1e-6)
                         .scale(1.0));

    const double slope21 =
        (sys.constraint_residual(2, shifted(h)) - sys.constraint_residual(2, shifted(-h))) /
        (2.0 * h);
    CHECK(slope21 ==
          doctest::Approx(sys.constraint_residual(1, base)).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("robot arm assembled quantities") {
  const auto& sys = system_by_name("robot");
  const std::vector<double> u = {0.0, 0.0, 0.3, -0.2};
  const std::vector<double> z = {0.55};

  // recover the mass matrix from the dependence of the dynamic rows on du
  auto rows = [&](double a, double b) {
    std::vector<double> du = {0.3, -0.2, a, b};
    std::vector<double> F;
    sys.residual(IndexForm::index3, 0.0, u, du, z, F);
    return std::array<double, 2>{F[2], F[3]};
  };
  const auto r0 = rows(0.0, 0.0);
  const auto ra = rows(1.0, 0.0);
  const auto rb = rows(0.0, 1.0);
  CHECK(ra[0] - r0[0] == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(rb[0] - r0[0] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(ra[1] - r0[1] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(rb[1] - r0[1] == doctest::Approx(1.0).epsilon(1e-15));

  // at u = 0 the force terms reduce to f = (2 v1, v1) and G = (2, 1)
  CHECK(r0[0] == doctest::Approx(-2.0 * 0.3 + 2.0 * 0.55).epsilon(1e-15));
  CHECK(r0[1] == doctest::Approx(-0.3 + 0.55).epsilon(1e-15));
}

TEST_CASE("specific constraint values") {
  const auto& sys = system_by_name("particle");
  StateSample s;
  s.u = {2.0, 0.0, 0.0, 0.0};
  s.du = {0.0, 0.0, 0.0, 0.0};
  s.z = {0.0};
  CHECK(sys.constraint_residual(3, s) == doctest::Approx(3.0).epsilon(1e-15));

  const auto& pend = system_by_name("pendulum");
  Rng rng(4321);
  for (int rep = 0; rep < 20; ++rep) {
    StateSample p;
    p.u = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0),
           rng.uniform(-2.0, 2.0)};
    p.du = {0.0, 0.0, 0.0, 0.0};
    p.z = {rng.uniform(-3.0, 3.0)};
    const double want = p.u[2] * p.u[2] + p.u[3] * p.u[3] - p.z[0] - p.u[1];
    CHECK(pend.constraint_residual(1, p) == doctest::Approx(want).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("scalar residual path matches the double path") {
  Rng rng(777);
  for (const char* name : {"pendulum", "particle", "robot"}) {
    CAPTURE(name);
    const auto& sys = system_by_name(name);
    kandae::ad::Record rec;
    std::vector<double> u, du, z;
    std::vector<kandae::ad::Scalar> su, sdu, sz;
    for (int i = 0; i < 4; ++i) {
      u.push_back(rng.uniform(-1.0, 1.0));
      du.push_back(rng.uniform(-1.0, 1.0));
      su.push_back(rec.parameter(u.back()));
      sdu.push_back(rec.parameter(du.back()));
    }
    z.push_back(rng.uniform(-1.0, 1.0));
    sz.push_back(rec.parameter(z.back()));
    const kandae::ad::Scalar st = rec.parameter(0.4);
    for (IndexForm form : {IndexForm::index1, IndexForm::index2, IndexForm::index3}) {
      std::vector<double> F;
      sys.residual(form, 0.4, u, du, z, F);
      std::vector<kandae::ad::Scalar> SF;
      sys.residual(form, st, su, sdu, sz, SF);
      REQUIRE(SF.size() == F.size());
      for (std::size_t i = 0; i < F.size(); ++i)
        CHECK(SF[i].value() == doctest::Approx(F[i]).epsilon(1e-15).scale(1.0));
    }
  }
}

TEST_CASE("system registry") {
  CHECK(kandae::dae::system_names().size() == 3);
  for (const auto& n : kandae::dae::system_names()) {
    const auto& sys = system_by_name(n);
    CHECK(sys.name() == n);
    CHECK(sys.n_diff() == 4);
    CHECK(sys.n_alg() == 1);
    CHECK(sys.variable_names().size() == 5);
    CHECK(sys.variable_names().back() == "lambda");
  }
  CHECK_THROWS_AS(system_by_name("nope"), kandae::Error);
  CHECK_THROWS_AS(kandae::dae::form_from_int(0), kandae::Error);
  CHECK_THROWS_AS(kandae::dae::form_from_int(4), kandae::Error);
}

TEST_CASE("pendulum index-1 ode agrees with the exact flow") {
  const auto& sys = system_by_name("pendulum");
  for (double t : {0.0, 0.73, 2.0, 5.1}) {
    const StateSample s = sys.exact_solution(t);
    std::array<double, 4> dy{};
    kandae::dae::pendulum_index1_rhs(t, s.u, dy);
    for (int i = 0; i < 4; ++i)
      CHECK(dy[static_cast<std::size_t>(i)] ==
            doctest::Approx(s.du[static_cast<std::size_t>(i)]).epsilon(1e-12).scale(1.0));
  }
}

}
