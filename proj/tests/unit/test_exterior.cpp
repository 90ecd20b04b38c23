#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slant/catalog.hpp"
#include "slant/cxstruct.hpp"
#include "slant/errors.hpp"
#include "slant/exterior.hpp"

#include <cmath>
#include <random>

using namespace slant;

namespace {

std::mt19937_64 rng(7);

Vec4 rvec() {
  std::normal_distribution<double> n;
  return Vec4(n(rng), n(rng), n(rng), n(rng));
}

Eigen::VectorXd rvec(int dim) {
  std::normal_distribution<double> n;
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = n(rng);
  return x;
}

// Gram determinant det[<x_i, y_j>]
double gram(const std::vector<Eigen::VectorXd>& x, const std::vector<Eigen::VectorXd>& y) {
  Eigen::MatrixXd m(x.size(), y.size());
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) m(i, j) = x[i].dot(y[j]);
  return m.determinant();
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("wedge coordinates are the 2x2 minors") {
  Vec4 x(1, 2, 3, 4), y(-1, 0.5, 2, -3);
  TwoVector w = wedge2(x, y);
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    CHECK(w[k] == doctest::Approx(x[i] * y[j] - x[j] * y[i]));
  }
}

TEST_CASE("wedge inner product matches the Gram determinant oracle") {
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    Vec4 x = rvec(), y = rvec(), z = rvec(), w = rvec();
    double lhs = inner(wedge2(x, y), wedge2(z, w));
    double rhs = gram({x, y}, {z, w});
    worst = std::max(worst, rel(lhs, rhs));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Hodge star pairs to the 4x4 determinant") {
  double worst = 0;
  for (int n = 0; n < 1000; ++n) {
    Vec4 x = rvec(), y = rvec(), z = rvec(), w = rvec();
    Mat4 m;
    m << x, y, z, w;
    worst = std::max(worst, rel(inner(hodge_star(wedge2(x, y)), wedge2(z, w)), m.determinant()));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("self-dual and anti-self-dual projections") {
  for (int n = 0; n < 1000; ++n) {
    Vec6 c;
    c << rvec(), rvec().head<2>();
    TwoVector a(c);
    TwoVector p = project_plus(a), m = project_minus(a);
    REQUIRE((p + m - a).c.norm() <= 1e-12);
    REQUIRE((hodge_star(p) - p).c.norm() <= 1e-12);
    REQUIRE((hodge_star(m) + m).c.norm() <= 1e-12);
    REQUIRE((project_plus(p) - p).c.norm() <= 1e-12);
    REQUIRE(std::abs(inner(p, m)) <= 1e-12);
    REQUIRE((from_eta_coords(eta_coords(a)) - a).c.norm() <= 1e-12);
  }
}

TEST_CASE("eta basis is orthonormal and split by duality") {
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j)
      CHECK(inner(eta(i), eta(j)) == doctest::Approx(i == j ? 1.0 : 0.0));
    double sign = i <= 3 ? 1.0 : -1.0;
    CHECK((hodge_star(eta(i)) - sign * eta(i)).c.norm() < 1e-15);
  }
  CHECK_THROWS_AS(eta(7), ConfigError);
}

TEST_CASE("unit wedges split evenly between the two spheres") {
  for (int n = 0; n < 1000; ++n) {
    OrientedPlane V = OrientedPlane::from_vectors(rvec(), rvec());
    REQUIRE(norm(V.plucker) == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(plus_coords(V.plucker).norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    REQUIRE(minus_coords(V.plucker).norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    REQUIRE(is_decomposable(V.plucker));
    REQUIRE((V.reversed().plucker + V.plucker).c.norm() < 1e-14);
  }
}

TEST_CASE("decomposability test") {
  Vec6 c;
  c << 1, 0, 0, 0, 0, 1;  // e12 + e34
  CHECK_FALSE(is_decomposable(TwoVector(c)));
  CHECK(is_decomposable(wedge2(Vec4(1, 1, 0, 0), Vec4(0, 1, 1, 0))));
}

TEST_CASE("degenerate planes are rejected") {
  CHECK_THROWS_AS(OrientedPlane::from_vectors(Vec4::Zero(), Vec4(1, 0, 0, 0)), DegenerateError);
  CHECK_THROWS_AS(OrientedPlane::from_vectors(Vec4(1, 2, 0, 0), Vec4(2, 4, 0, 0)), DegenerateError);
}

TEST_CASE("skew matrix round trip") {
  Vec6 c;
  c << 1, -2, 3, 0.5, 0.25, -1;
  Mat4 m = skew_matrix(TwoVector(c));
  CHECK((m + m.transpose()).norm() == 0);
  CHECK((from_skew(m).c - c).norm() == 0);
}

TEST_CASE("multivector inner product matches the Gram determinant in E^8") {
  double worst = 0;
  for (int n = 0; n < 200; ++n) {
    int k = 2 + n % 3;
    std::vector<Eigen::VectorXd> x, y;
    for (int i = 0; i < k; ++i) {
      x.push_back(rvec(8));
      y.push_back(rvec(8));
    }
    MultiVector a = MultiVector::wedge(x), b = MultiVector::wedge(y);
    worst = std::max(worst, rel(a.inner(b), gram(x, y)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Kaehler power pairing against the Pfaffian") {
  // for k = 2 the signed permutation sum collapses to Pf(M)/3 with
  // M_ij = Omega(X_i, X_j)
  double worst1 = 0, worst2 = 0;
  for (int n = 0; n < 1000; ++n) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Random(6, 6);
    Eigen::MatrixXd W = A - A.transpose();
    std::vector<Eigen::VectorXd> x{rvec(6), rvec(6), rvec(6), rvec(6)};
    worst1 = std::max(worst1, rel(omega_power_pairing(W, {x[0], x[1]}), x[0].dot(W * x[1])));
    auto m = [&](int i, int j) { return x[i].dot(W * x[j]); };
    double pf = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    worst2 = std::max(worst2, rel(omega_power_pairing(W, x), pf / 3));
    worst2 = std::max(worst2, rel(omega_power_on(W, MultiVector::wedge(x)), pf / 3));
  }
  CHECK(worst1 <= 1e-10);
  CHECK(worst2 <= 1e-10);
}

TEST_CASE("mu normalization") {
  CHECK(mu(1) == doctest::Approx(1.0));
  CHECK(mu(2) == doctest::Approx(1.0 / 3));
  CHECK(mu(3) == doctest::Approx(1.0 / 15));
}

TEST_CASE("zeta-hat pairing on planes at a prescribed angle") {
  for (double a : {0.0, M_PI / 6, M_PI / 4, M_PI / 3, M_PI / 2}) {
    double c = std::cos(a), s = std::sin(a);
    Eigen::VectorXd x = Eigen::VectorXd::Unit(4, 0), y(4);
    y << 0, s, c, 0;
    CHECK(std::abs(zeta_hat_pairing(MultiVector::wedge({x, y})) - c) <= 1e-10);
    auto e = [](int i) { return Eigen::VectorXd::Unit(8, i); };
    Eigen::VectorXd e2 = c * e(4) + s * e(2), e4 = c * e(5) + s * e(3);
    double p = zeta_hat_pairing(MultiVector::wedge({e(0), e2, e(1), e4}));
    CHECK(std::abs(p - mu(2) * c * c) <= 1e-10);
  }
}

TEST_CASE("pairing on the fourfold in E^8") {
  // tangent 4-plane of x = (u, v, k sin w, k sin z, k w, k z, k cos w, k cos z):
  // J0 e1 = e5 makes angle pi/4 with the plane for every k, so the pairing
  // is mu_2 cos^2(pi/4) = 1/6 on the orientation (X1, X3, X2, X4) that pairs
  // each direction with the one J0 leans into
  for (double k : {0.5, 1.0, 3.0}) {
    for (double w : {0.0, 0.4, 2.0}) {
      auto t = fourfold_tangents(k, w, 1.1);
      MultiVector V = MultiVector::wedge({t[0], t[2], t[1], t[3]});
      CHECK(zeta_hat_pairing(MultiVector::wedge({t[0], t[1], t[2], t[3]})) ==
            doctest::Approx(-zeta_hat_pairing(V)));
      double p = zeta_hat_pairing(V) / V.norm();
      CHECK(p == doctest::Approx(1.0 / 6).epsilon(1e-12));
      // the angle measured directly from J0 and an orthonormal basis
      Eigen::MatrixXd B(8, 4);
      for (int i = 0; i < 4; ++i) B.col(i) = t[i];
      Eigen::MatrixXd Q = B.householderQr().householderQ() * Eigen::MatrixXd::Identity(8, 4);
      Eigen::VectorXd Je1 = j0_block(4) * Q.col(0);
      double c = (Q.transpose() * Je1).norm();
      CHECK(p == doctest::Approx(mu(2) * c * c).epsilon(1e-12));
    }
  }
}
