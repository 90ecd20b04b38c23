#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slant/cxstruct.hpp"
#include "slant/errors.hpp"

#include <cmath>
#include <random>

using namespace slant;

namespace {

std::mt19937_64 rng(11);

Vec3 runit3() {
  std::normal_distribution<double> n;
  return Vec3(n(rng), n(rng), n(rng)).normalized();
}

Vec4 runit4() {
  std::normal_distribution<double> n;
  return Vec4(n(rng), n(rng), n(rng), n(rng)).normalized();
}

double maxabs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("standard structures") {
  struct Case {
    ComplexStructure J;
    StructureClass cls;
    Vec4 image;  // J applied to (1, 2, 3, 4)
  };
  std::vector<Case> cases{
      {standard::J0(), StructureClass::Minus, Vec4(-3, -4, 1, 2)},
      {standard::J1(), StructureClass::Plus, Vec4(-2, 1, -4, 3)},
      {standard::J1m(), StructureClass::Minus, Vec4(-2, 1, 4, -3)},
      {standard::J2(), StructureClass::Minus, Vec4(2, -1, -4, 3)},
  };
  for (const auto& c : cases) {
    CHECK(c.J.cls() == c.cls);
    CHECK((c.J.apply(Vec4(1, 2, 3, 4)) - c.image).norm() == 0);
    CHECK(maxabs(c.J.matrix() * c.J.matrix() + Mat4::Identity()) < 1e-15);
    CHECK(maxabs(c.J.matrix().transpose() * c.J.matrix() - Mat4::Identity()) < 1e-15);
    CHECK(norm(c.J.zeta()) == doctest::Approx(std::sqrt(2.0)));
  }
  CHECK((standard::J1().zeta().c - (Vec6() << 1, 0, 0, 0, 0, 1).finished()).norm() == 0);
}

TEST_CASE("zeta bijection round trips on random structures") {
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    bool plus = n % 2 == 0;
    TwoVector z = std::sqrt(2.0) * (plus ? from_plus_coords(runit3()) : from_minus_coords(runit3()));
    ComplexStructure J = structure_from_zeta(z);
    REQUIRE(J.cls() == (plus ? StructureClass::Plus : StructureClass::Minus));
    REQUIRE(is_complex_structure(J.matrix()));
    worst = std::max(worst, (zeta_of(J.matrix()) - z).c.norm());
    worst = std::max(worst, maxabs(ComplexStructure::from_matrix(J.matrix()).matrix() - J.matrix()));
    worst = std::max(worst, maxabs((-J).matrix() + J.matrix()));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("angle of a plane against a structure") {
  for (const auto& J : {standard::J0(), standard::J1(), standard::J2()}) {
    for (int n = 0; n < 200; ++n) {
      double a = M_PI * (n + 0.5) / 200;
      Vec4 e1 = runit4(), Je1 = J.apply(e1), w = runit4();
      w -= w.dot(e1) * e1 + w.dot(Je1) * Je1;
      w.normalize();
      OrientedPlane V = OrientedPlane::from_vectors(e1, std::cos(a) * Je1 + std::sin(a) * w);
      REQUIRE(alpha_of_plane(J, V) == doctest::Approx(a).epsilon(1e-9));
      REQUIRE(wirtinger_angle(alpha_of_plane(J, V)) == doctest::Approx(std::min(a, M_PI - a)));
    }
  }
}

TEST_CASE("every plane is a complex line for one structure per class") {
  for (int n = 0; n < 200; ++n) {
    OrientedPlane V = OrientedPlane::from_vectors(runit4(), runit4());
    auto [Jp, Jm] = j_v_plus_minus(V);
    CHECK(Jp.cls() == StructureClass::Plus);
    CHECK(Jm.cls() == StructureClass::Minus);
    CHECK((Jp.apply(V.e1) - V.e2).norm() < 1e-10);
    CHECK((Jm.apply(V.e1) - V.e2).norm() < 1e-10);
  }
}

TEST_CASE("structure ids") {
  CHECK(maxabs(structure_by_id("-J1").matrix() + standard::J1().matrix()) == 0);
  Mat4 ja = std::cos(0.3) * standard::J0().matrix() + std::sin(0.3) * standard::J1m().matrix();
  CHECK(maxabs(structure_by_id("Jalpha:0.3").matrix() - ja) < 1e-15);
  CHECK(maxabs(structure_by_id("zeta:2,0,0,0,0,2").matrix() - standard::J1().matrix()) < 1e-15);
  CHECK_THROWS_AS(structure_by_id("J7"), ConfigError);
  CHECK_THROWS_AS(structure_by_id("Jalpha:x"), ConfigError);
  CHECK_THROWS_AS(structure_by_id("zeta:1,0,0,0,0,0.5"), ConfigError);
  CHECK_THROWS_AS(ComplexStructure::from_matrix(Mat4::Identity()), ConfigError);
}

TEST_CASE("block structures on higher even dimensions") {
  for (int n : {2, 4, 6}) {
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    CHECK((j0_block(n) * j0_block(n) + I).norm() < 1e-15);
    CHECK((j1_minus(n) * j1_minus(n) + I).norm() < 1e-15);
    CHECK(is_complex_structure(j_alpha(n, 0.7)));
    CHECK((structure_matrix_by_id("J0", 2 * n) - j0_block(n)).norm() == 0);
  }
  CHECK((structure_matrix_by_id("J0", 4) - standard::J0().matrix()).norm() == 0);
  CHECK_THROWS_AS(j1_minus(3), ConfigError);
  CHECK_THROWS_AS(structure_matrix_by_id("J1", 8), ConfigError);
  CHECK_THROWS_AS(structure_matrix_by_id("J0", 5), ConfigError);
  CHECK_FALSE(is_complex_structure(Eigen::MatrixXd::Identity(4, 4)));
}
