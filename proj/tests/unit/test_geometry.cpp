#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slant/catalog.hpp"
#include "slant/geometry.hpp"

#include <cmath>
#include <random>

using namespace slant;

namespace {

// Values frozen from tests/oracles/freeze.py (jax autodiff, Gram-Schmidt
// frames): G, G^D, |H| at one point per surface.
struct Frozen {
  const char* id;
  double u, v, G, GD, H;
};
const Frozen kFrozen[] = {
    {"ex2.3", 0.3, 1.1, -8.32667268468867e-17, -1.94289029309402e-16, 0.523837587470595},
    {"ex2.5", 1.2, 0.4, 4.41107053935849e-17, 1.27227461578715e-16, 0.386400770645654},
    {"ex2.6", 0.7, 1.3, -2.85338512181775e-34, 4.61693826079081e-18, 0.163178487966126},
    {"ex3.1-whitney", 0.4, 0.3, -0.311135990603612, -0.311135990603612, 0.660186397796806},
    {"catenoid-e3", 0.5, 0.2, -0.923603615108412, 0, 0},
};

std::mt19937_64 rng(5);

}  // namespace

TEST_CASE("curvatures match the autodiff oracle") {
  for (const auto& c : kFrozen) {
    CAPTURE(c.id);
    PointGeometry pg = point_geometry(catalog_immersion(c.id), c.u, c.v);
    CHECK(std::abs(pg.G - c.G) <= 1e-10);
    CHECK(std::abs(pg.GD - c.GD) <= 1e-10);
    CHECK(std::abs(pg.H.norm() - c.H) <= 1e-10);
  }
}

TEST_CASE("frames are orthonormal and positively oriented") {
  for (const char* id : {"ex2.3", "ex2.5", "ex3.1-whitney", "torus", "helical-cylinder"}) {
    Immersion f = catalog_immersion(id);
    const Domain& d = f.domain();
    for (int n = 0; n < 20; ++n) {
      double u = d.u0 + d.width() * (n + 0.5) / 20, v = d.v0 + d.height() * (n * 7 % 20 + 0.5) / 20;
      PointGeometry pg = point_geometry(f, u, v);
      REQUIRE((pg.frame.transpose() * pg.frame - Mat4::Identity()).norm() < 1e-12);
      REQUIRE(pg.frame.determinant() == doctest::Approx(1.0));
      REQUIRE((pg.coeff(0, 0) * pg.xu + pg.coeff(1, 0) * pg.xv - pg.e(0)).norm() < 1e-12);
      REQUIRE(pg.area_element == doctest::Approx(pg.xu.norm() * pg.xv.norm() *
                                                 std::sqrt(1 - std::pow(pg.xu.normalized().dot(pg.xv.normalized()), 2))));
      for (int k = 0; k < 3; ++k)
        REQUIRE(std::abs(pg.hvec[k].dot(pg.e(0))) + std::abs(pg.hvec[k].dot(pg.e(1))) < 1e-12);
    }
  }
}

TEST_CASE("line times helix: angle, mean curvature and flatness") {
  for (double k : {0.5, 1.0, 2.0}) {
    Immersion f = catalog_immersion("ex2.4", {{"k", k}});
    WirtingerStats w = wirtinger_field(f, GridSpec{16, 16}, standard::J0().matrix());
    CHECK(w.slant);
    CHECK(std::abs(w.mean - std::acos(1 / std::sqrt(1 + k * k))) <= 1e-9);
    PointGeometry pg = point_geometry(f, 0.2, 1.0);
    CHECK(std::abs(pg.H.norm() - k / (2 * (1 + k * k))) <= 1e-12);
    CHECK(std::abs(pg.G) <= 1e-12);
    CHECK(std::abs(pg.GD) <= 1e-12);
  }
}

TEST_CASE("structure blocks square to -I and P scales by cos theta") {
  std::uniform_real_distribution<double> U(0, 1);
  for (const char* id : {"ex2.3", "ex2.5", "ex2.6", "ex3.2", "helical-cylinder", "cone"}) {
    CAPTURE(id);
    Immersion f = catalog_immersion(id);
    ComplexStructure J = structure_by_id(f.structure());
    const Domain& d = f.domain();
    for (int n = 0; n < 30; ++n) {
      PointGeometry pg = point_geometry(f, d.u0 + d.width() * U(rng), d.v0 + d.height() * U(rng));
      StructureBlocks b = structure_blocks(pg, J);
      Mat4 B = assemble_blocks(b);
      REQUIRE((B * B + Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
      REQUIRE((B - pg.frame.transpose() * J.matrix() * pg.frame).cwiseAbs().maxCoeff() <= 1e-12);
      double c = std::cos(b.theta);
      for (int k = 0; k < 8; ++k) {
        Eigen::Vector2d X(std::cos(0.7 * k), std::sin(0.7 * k));
        REQUIRE(std::abs((b.P * X).norm() - c) <= 1e-9);
      }
      REQUIRE(std::abs(pg.G - normal_curvature_for(pg, J)) <= 1e-7);
    }
  }
}

TEST_CASE("normal curvature sign follows the class of J") {
  PointGeometry pg = point_geometry(catalog_immersion("ex3.1-whitney"), 0.4, 0.3);
  CHECK(normal_curvature_for(pg, standard::J0()) == pg.GD);
  CHECK(normal_curvature_for(pg, standard::J1()) == -pg.GD);
}

TEST_CASE("adapted frame") {
  Immersion f = catalog_immersion("ex2.3");
  PointGeometry pg = point_geometry(f, 0.1, 2.0);
  AdaptedSlantFrame a = adapted_frame(pg, standard::J0());
  Mat4 E = a.frame;
  CHECK((E.transpose() * E - Mat4::Identity()).norm() < 1e-12);
  double t = a.theta;
  Mat4 J = standard::J0().matrix();
  // e2 = sec(theta) P e1, e3 = csc(theta) F e1, e4 = csc(theta) F e2
  Vec4 Je1 = J * E.col(0), Je2 = J * E.col(1);
  Vec4 Pe1 = Je1.dot(E.col(0)) * E.col(0) + Je1.dot(E.col(1)) * E.col(1);
  Vec4 Pe2 = Je2.dot(E.col(0)) * E.col(0) + Je2.dot(E.col(1)) * E.col(1);
  CHECK((E.col(1) - Pe1 / std::cos(t)).norm() < 1e-12);
  CHECK((E.col(2) - (Je1 - Pe1) / std::sin(t)).norm() < 1e-12);
  CHECK((E.col(3) - (Je2 - Pe2) / std::sin(t)).norm() < 1e-12);
  CHECK(t == doctest::Approx(M_PI / 4));
  CHECK_THROWS_AS(adapted_frame(point_geometry(catalog_immersion("holo-j1"), 0.1, 0.2),
                                standard::J1()),
                  DegenerateError);
}

TEST_CASE("exponential cone: angle and mean curvature") {
  for (double k : {0.5, 1.0, 2.0}) {
    Immersion f = catalog_immersion("ex2.3", {{"k", k}});
    WirtingerStats w = wirtinger_field(f, GridSpec{16, 16}, standard::J0().matrix());
    CHECK(std::abs(w.mean - std::acos(k / std::sqrt(1 + k * k))) <= 1e-8);
    CHECK(w.spread <= 1e-8);
    for (double u : {-0.9, 0.0, 0.7})
      CHECK(std::abs(point_geometry(f, u, 0.3).H.norm() - std::exp(-k * u) / std::sqrt(1 + k * k)) <= 1e-8);
  }
}

TEST_CASE("Wirtinger field separates slant and non-slant surfaces") {
  GridSpec g{24, 24};
  CHECK_FALSE(wirtinger_field(catalog_immersion("sphere"), g, standard::J1().matrix()).slant);
  CHECK(wirtinger_field(catalog_immersion("sphere"), g, standard::J1().matrix()).spread > 0.1);
  WirtingerStats h = wirtinger_field(catalog_immersion("holo-j1"), g, standard::J1().matrix());
  CHECK(h.slant);
  CHECK(h.mean <= 1e-7);
  for (const char* id : {"ex2.2", "ex2.8"}) {
    Immersion f = catalog_immersion(id, {{"alpha", 0.4}});
    Eigen::MatrixXd J = structure_matrix_by_id(f.structure(), f.ambient_dim());
    WirtingerStats w = wirtinger_field(f, g, J);
    CHECK(w.slant);
    CHECK(w.mean == doctest::Approx(0.4).epsilon(1e-9));
  }
}

TEST_CASE("operator identities on a slant surface") {
  SlantOperatorReport r = slant_operator_checks(catalog_immersion("ex2.5"), GridSpec{12, 12},
                                                standard::J0());
  CHECK(r.af_symmetry <= r.tolerance);
  CHECK(r.q_residual <= r.tolerance);
  SlantOperatorReport m = slant_operator_checks(catalog_immersion("ex2.6"), GridSpec{12, 12},
                                                standard::J1());
  CHECK(m.af_symmetry <= m.tolerance);
}

TEST_CASE("grid specs") {
  CHECK(GridSpec::parse("64x32").nu == 64);
  CHECK(GridSpec::parse("64x32").nv == 32);
  CHECK(GridSpec::parse("8x9").str() == "8x9");
  for (const char* bad : {"64", "x64", "64x", "0x4", "1x5", "4x4x4", "ax4", "99999x2"})
    CHECK_THROWS_AS(GridSpec::parse(bad), ConfigError);
  CHECK(difference_step(Domain{0, 1, 0, 1}, GridSpec{4, 4}) <= 1e-3);
}

TEST_CASE("rotated circle: measured angle") {
  // the measured angle is arccos(k / sqrt(1 + k^2)) for every k sampled
  for (double k : {0.5, 1.0, 2.0}) {
    WirtingerStats w = wirtinger_field(catalog_immersion("ex2.5", {{"k", k}}), GridSpec{16, 16},
                                       standard::J0().matrix());
    CHECK(w.slant);
    CHECK(std::abs(w.mean - std::acos(k / std::sqrt(1 + k * k))) <= 1e-9);
  }
}
