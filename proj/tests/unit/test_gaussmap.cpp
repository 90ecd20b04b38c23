#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slant/catalog.hpp"
#include "slant/gaussmap.hpp"

#include <cmath>
#include <random>

using namespace slant;

namespace {

std::mt19937_64 rng(13);

Vec3 runit3() {
  std::normal_distribution<double> n;
  return Vec3(n(rng), n(rng), n(rng)).normalized();
}

// Jacobian sample at (u, v), taken from a small patch centred on it.
GaussJacobianSample jacobian_at(const std::string& id, double u, double v) {
  Immersion f = catalog_immersion(id).with_domain({u - 0.02, u + 0.02, v - 0.02, v + 0.02});
  for (const auto& s : gauss_jacobians(f, GridSpec{5, 5}, Exec::Serial))
    if (std::abs(s.u - u) < 1e-12 && std::abs(s.v - v) < 1e-12) return s;
  throw std::runtime_error("centre node missing");
}

double max_entry(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Gauss map Jacobians match the autodiff oracle") {
  // frozen from tests/oracles/freeze.py; the oracle measures the second
  // factor in the unoriented eta4, eta5, eta6 basis, hence the sign flip
  struct Case {
    const char* id;
    double u, v, plus, minus_unoriented;
  } cases[] = {
      {"ex3.1-whitney", 0.4, 0.3, -0.311135990603612, 0},
      {"catenoid-e3", 0.5, 0.2, -0.461801807554206, 0.461801807554206},
      {"ex2.3", 0.3, 1.1, 0, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.id);
    GaussJacobianSample s = jacobian_at(c.id, c.u, c.v);
    CHECK(std::abs(s.det_plus - c.plus) <= 1e-6);
    CHECK(std::abs(s.det_minus + c.minus_unoriented) <= 1e-6);
    CHECK(s.residual_plus() <= 1e-6);
    CHECK(s.residual_minus() <= 1e-6);
  }
}

TEST_CASE("round sphere has degree one on both factors") {
  GaussJacobianSample s = jacobian_at("sphere", 1.0, 0.4);
  CHECK(s.det_plus == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(s.det_minus == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("Gauss map samples are unit decomposable") {
  for (const auto& s : gauss_field(catalog_immersion("ex3.1-whitney"), GridSpec{16, 16})) {
    REQUIRE(norm(s.nu) == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(s.decomposability <= 1e-12);
    REQUIRE((s.nu_plus + s.nu_minus - s.nu).c.norm() <= 1e-14);
  }
}

TEST_CASE("circle fit on synthetic data") {
  for (int n = 0; n < 100; ++n) {
    Vec3 axis = runit3();
    double offset = 0.9 * std::uniform_real_distribution<double>(0, 1)(rng);
    Vec3 a = axis.unitOrthogonal(), b = axis.cross(a);
    double r = std::sqrt(1 - offset * offset);
    std::vector<Vec3> pts;
    for (int k = 0; k < 200; ++k) {
      double t = 0.01 + 2.0 * k / 200;  // partial arc
      pts.push_back(offset * axis + r * (std::cos(t) * a + std::sin(t) * b));
    }
    CircleFit fit = fit_circle(pts);
    REQUIRE(fit.cls == FitClass::Circle);
    double sign = fit.axis.dot(axis) > 0 ? 1 : -1;
    REQUIRE((sign * fit.axis - axis).norm() <= 1e-9);
    REQUIRE(std::abs(fit.offset - std::abs(offset)) <= 1e-9);
    REQUIRE(fit.arc_extent == doctest::Approx(2.0 - 2.0 / 200).epsilon(1e-6));
  }
  std::vector<Vec3> same(150, Vec3(0, 0.6, 0.8));
  CHECK(fit_circle(same).cls == FitClass::Singleton);
  std::vector<Vec3> cloud;
  for (int k = 0; k < 300; ++k) cloud.push_back(runit3());
  CHECK(fit_circle(cloud).cls == FitClass::NotCircular);
  CHECK_THROWS_AS(fit_circle({Vec3(1, 0, 0)}), ConfigError);
}

TEST_CASE("detection on line times circle recovers four structures") {
  SlantDetection d = detect_slant_structures(catalog_immersion("ex3.2"), GridSpec{32, 32});
  CHECK(d.trichotomy == "four");
  CHECK(d.doubly_slant);
  REQUIRE(d.plus.structures.size() == 2);
  REQUIRE(d.minus.structures.size() == 2);
  auto near = [](const DetectedStructure& s, const ComplexStructure& J) {
    return max_entry(s.J.matrix() - J.matrix()) <= 1e-6 || max_entry(s.J.matrix() + J.matrix()) <= 1e-6;
  };
  for (const auto& s : d.plus.structures) {
    CHECK(near(s, standard::J1()));
    CHECK(std::abs(std::cos(s.alpha)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(s.verify_spread <= 1e-6);
  }
  for (const auto& s : d.minus.structures) CHECK(near(s, standard::J2()));
}

TEST_CASE("detection trichotomy across the catalog") {
  GridSpec g{24, 24};
  auto detect = [&](const char* id) { return detect_slant_structures(catalog_immersion(id), g); };
  SlantDetection cat = detect("catenoid-e3");
  CHECK(cat.plus.structures.empty());
  CHECK(cat.minus.structures.empty());
  CHECK(cat.trichotomy == "none");
  CHECK(detect("sphere").trichotomy == "none");
  SlantDetection plane = detect("ex2.1");
  CHECK(plane.trichotomy == "infinite");
  CHECK(plane.plus.fit.cls == FitClass::Singleton);
  CHECK(plane.minus.fit.cls == FitClass::Singleton);
  SlantDetection holo = detect("holo-j1");
  CHECK(holo.trichotomy == "infinite");
  REQUIRE(holo.plus.holomorphic.has_value());
  CHECK(max_entry(holo.plus.holomorphic->matrix() - standard::J1().matrix()) <= 1e-6);
  SlantDetection wh = detect("ex3.1-whitney");
  CHECK(wh.trichotomy == "two");
  CHECK(wh.minus.structures.size() == 2);
  for (const auto& s : wh.minus.structures) CHECK(s.alpha == doctest::Approx(M_PI / 2).epsilon(1e-6));
  CHECK(detect("torus").doubly_slant);
  CHECK_THROWS_AS(detect_slant_structures(catalog_immersion("ex3.2"), GridSpec{8, 8}), ConfigError);
}

TEST_CASE("flat torus has balanced Gauss map") {
  CHECK(norm(gauss_mean(catalog_immersion("torus"), GridSpec{64, 64})) <= 1e-3);
  // a sphere cap is not balanced
  CHECK(norm(gauss_mean(catalog_immersion("sphere").with_domain({0, 1, 0.2, 1}),
                        GridSpec{32, 32})) > 0.1);
}

TEST_CASE("reversing the chart order negates the Gauss map") {
  Immersion f = catalog_immersion("ex3.2");
  const Domain& d = f.domain();
  Immersion r = immersion_from_expressions("ex3.2-swapped", 4, {"v", "u", "k*cos(u)", "k*sin(u)"},
                                           {{"k", 1.0}}, {d.v0, d.v1, d.u0, d.u1});
  GridSpec g{12, 12};
  auto a = gauss_field(f, g), b = gauss_field(r, g);
  for (int i = 0; i < g.nu; ++i)
    for (int j = 0; j < g.nv; ++j)
      REQUIRE((a[i * g.nv + j].nu + b[j * g.nu + i].nu).c.norm() <= 1e-12);
  // detection returns the same +-J pairs with alpha replaced by pi - alpha
  SlantDetection x = detect_slant_structures(f, GridSpec{16, 16});
  SlantDetection y = detect_slant_structures(r, GridSpec{16, 16});
  REQUIRE(x.plus.structures.size() == y.plus.structures.size());
  for (const auto& s : x.plus.structures) {
    bool found = false;
    for (const auto& t : y.plus.structures)
      found = found || ((s.J.matrix() - t.J.matrix()).cwiseAbs().maxCoeff() <= 1e-9 &&
                        std::abs(s.alpha + t.alpha - M_PI) <= 1e-9);
    CHECK(found);
  }
}
