#include "slant/selfcheck.hpp"

#include "slant/catalog.hpp"
#include "slant/cxstruct.hpp"
#include "slant/exterior.hpp"
#include "slant/forms.hpp"
#include "slant/gaussmap.hpp"
#include "slant/geometry.hpp"
#include "slant/sphere3.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace slant {

namespace {

using Rng = std::mt19937_64;

Vec4 random_vec(Rng& r) {
  std::normal_distribution<double> n;
  return Vec4(n(r), n(r), n(r), n(r));
}

Vec4 random_unit(Rng& r) { return random_vec(r).normalized(); }

CheckResult make(const std::string& name, double value, double tol) {
  return {name, value, tol, value <= tol};
}

std::vector<std::string> proper_ids() {
  return {"ex2.2", "ex2.3", "ex2.4", "ex2.5", "ex2.6", "ex3.2", "helical-cylinder",
          "cylinder", "cone", "tandev"};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(Exec exec) {
  std::vector<CheckResult> out;
  Rng rng(20240611);

  {  // Gram determinant formula for wedges
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      Vec4 x = random_vec(rng), y = random_vec(rng);
      double lhs = inner(wedge2(x, y), wedge2(x, y));
      double rhs = x.squaredNorm() * y.squaredNorm() - std::pow(x.dot(y), 2);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    out.push_back(make("wedge inner product equals Gram determinant", worst, 1e-10));
  }
  {  // Hodge star involution and decomposability characterizations
    double inv = 0, dec = 0;
    for (int i = 0; i < 1000; ++i) {
      Vec6 c;
      c << random_vec(rng), random_vec(rng).head<2>();
      TwoVector xi(c);
      inv = std::max(inv, (hodge_star(hodge_star(xi)) - xi).c.norm());
      TwoVector w = wedge2(random_vec(rng), random_vec(rng));
      dec = std::max(dec, std::abs(norm(project_plus(w)) - norm(project_minus(w))));
    }
    out.push_back(make("Hodge star is an involution", inv, 1e-12));
    out.push_back(make("wedges have equal self-dual and anti-self-dual norms", dec, 1e-10));
  }
  {  // zeta bijection
    double worst = 0;
    std::vector<ComplexStructure> js{standard::J0(), standard::J1(), standard::J1m(),
                                     standard::J2()};
    for (int i = 0; i < 100; ++i) js.push_back(standard::Jalpha(2 * M_PI * i / 100));
    for (const auto& J : js) {
      worst = std::max(worst, (structure_from_zeta(zeta_of(J.matrix())).matrix() -
                               J.matrix()).cwiseAbs().maxCoeff());
      worst = std::max(worst, (structure_from_zeta(-J.zeta()).matrix() + J.matrix())
                                  .cwiseAbs().maxCoeff());
    }
    out.push_back(make("zeta bijection round trip", worst, 1e-10));
  }
  {  // planes at prescribed angle land on the circle <zeta_J, pi(V)> = cos a
    double worst = 0;
    ComplexStructure J = standard::J1();
    for (int i = 0; i < 100; ++i) {
      double a = M_PI * (i + 0.5) / 100;
      Vec4 e1 = random_unit(rng), Je1 = J.apply(e1);
      Vec4 w = random_vec(rng);
      w -= w.dot(e1) * e1 + w.dot(Je1) * Je1;
      w.normalize();
      OrientedPlane V = OrientedPlane::from_vectors(e1, std::cos(a) * Je1 + std::sin(a) * w);
      worst = std::max(worst, std::abs(inner(J.zeta(), project_plus(V.plucker)) - std::cos(a)));
      worst = std::max(worst, std::abs(alpha_of_plane(J, V) - a));
    }
    out.push_back(make("angle circles on S^2_+", worst, 1e-9));
  }
  {  // pairing with powers of the Kaehler form
    double worst = 0;
    for (double a : {0.0, M_PI / 6, M_PI / 4, M_PI / 3, M_PI / 2}) {
      double c = std::cos(a), s = std::sin(a);
      Eigen::VectorXd x(4), y(4);
      x << 1, 0, 0, 0;
      y << 0, s, c, 0;  // J0 e1 = e3
      worst = std::max(worst, std::abs(zeta_hat_pairing(MultiVector::wedge({x, y})) - c));
      Eigen::VectorXd e1 = Eigen::VectorXd::Unit(8, 0), e3 = Eigen::VectorXd::Unit(8, 1);
      Eigen::VectorXd e2 = c * Eigen::VectorXd::Unit(8, 4) + s * Eigen::VectorXd::Unit(8, 2);
      Eigen::VectorXd e4 = c * Eigen::VectorXd::Unit(8, 5) + s * Eigen::VectorXd::Unit(8, 3);
      double p = zeta_hat_pairing(MultiVector::wedge({e1, e2, e3, e4}));
      worst = std::max(worst, std::abs(p - mu(2) * c * c));
    }
    out.push_back(make("zeta-hat pairing equals mu_k cos^k alpha", worst, 1e-10));
  }
  {  // quaternion products match the matrix forms
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      Vec4 p = random_unit(rng), q = random_unit(rng);
      worst = std::max(worst, (qmul(p, q) - left_matrix(p) * q).norm());
      worst = std::max(worst, (qmul(q, p) - right_matrix(p) * q).norm());
      worst = std::max(worst, (phi(qmul(p, q)) - qmul(phi(q), phi(p))).norm());
    }
    out.push_back(make("quaternion product matrix forms and phi anti-homomorphism", worst, 1e-12));
  }
  {  // J1m eta = X~1 and J1 eta = right-invariant field
    double worst = 0;
    Mat4 J1m = standard::J1m().matrix(), J1 = standard::J1().matrix();
    for (int i = 0; i < 100; ++i) {
      Vec4 q = random_unit(rng);
      worst = std::max(worst, (J1m * q - left_invariant(1, q)).norm());
      worst = std::max(worst, (J1 * q - qmul(Vec4(0, 1, 0, 0), q)).norm());
    }
    out.push_back(make("structures on the position field of S^3", worst, 1e-10));
  }
  {  // helix diagnostics
    HelixParams hp;
    Curve3Sphere c = helix(hp, 0, 2 * M_PI, 8192);
    double tau = 0, bx = 0;
    for (int i = 0; i <= 64; ++i) {
      FrenetSample f = c.frenet_analytic(2 * M_PI * i / 64);
      tau = std::max(tau, std::abs(f.tau + 1));
      bx = std::max(bx, std::abs(f.b_dot_x1 - hp.a));
    }
    out.push_back(make("helix torsion -1", tau, 1e-4));
    out.push_back(make("helix binormal pairing with X~1", bx, 1e-6));
    out.push_back(make("helix norm drift", c.max_norm_drift(), 1e-9));
  }
  GridSpec g{32, 32};
  {  // block identity, G = G^D, Gauss map Jacobians over the catalog
    double block = 0, gd = 0, jac = 0, px = 0;
    for (const auto& e : catalog_entries()) {
      if (e.ambient_dim != 4) continue;
      Immersion f = catalog_immersion(e.id);
      ComplexStructure J = structure_by_id(f.structure().empty() ? "J1" : f.structure());
      WirtingerStats w = wirtinger_field(f, g, J.matrix(), exec);
      for (const auto& s : gauss_jacobians(f, g, exec))
        jac = std::max({jac, s.residual_plus(), s.residual_minus()});
      for (int i = 0; i < g.nu; ++i)
        for (int j = 0; j < g.nv; ++j) {
          PointGeometry pg =
              point_geometry(f, grid_u(f.domain(), g, i), grid_v(f.domain(), g, j));
          StructureBlocks b = structure_blocks(pg, J);
          Mat4 B = assemble_blocks(b);
          block = std::max(block, (B * B + Mat4::Identity()).cwiseAbs().maxCoeff());
          if (!w.slant) continue;
          gd = std::max(gd, std::abs(pg.G - normal_curvature_for(pg, J)));
          for (int k = 0; k < 8; ++k) {
            Eigen::Vector2d X(std::cos(0.4 * k), std::sin(0.4 * k));
            px = std::max(px, std::abs((b.P * X).norm() - std::cos(w.mean)));
          }
        }
    }
    out.push_back(make("(P, t; F, f) squares to -I", block, 1e-10));
    out.push_back(make("G = G^D on slant surfaces", gd, 1e-7));
    out.push_back(make("|PX| = cos(theta)|X| on slant surfaces", px, 1e-9));
    out.push_back(make("Gauss map Jacobians equal (G +- G^D)/2", jac, 1e-4));
  }
  {  // forms on proper slant surfaces
    double dual = 0, dth = 0, nab = 0, sym = 0, contr = 0, per = 0;
    for (const auto& id : proper_ids()) {
      Immersion f = catalog_immersion(id);
      ComplexStructure J = structure_by_id(f.structure());
      ThetaForm t = theta_form(f, J, g, exec);
      dual = std::max(dual, t.dual_path);
      sym = std::max(sym, t.symmetry);
      OneForm w = [&](double u, double v) { return theta_coefficients(f, J, u, v); };
      dth = std::max(dth, exterior_derivative(w, f.domain(), g, exec).max_abs());
      LambdaReport lam = lambda_form(f, J, GridSpec{8, 8}, exec);
      nab = std::max({nab, lam.nabla_p_difference, lam.nabla_p_identity});
      const Domain& d = f.domain();
      Loop sq = rectangle_loop(d.u0 + 0.3 * d.width(), d.u0 + 0.6 * d.width(),
                               d.v0 + 0.3 * d.height(), d.v0 + 0.6 * d.height());
      contr = std::max(contr, std::abs(loop_integral_psi(f, J, sq, 4096).value));
      for (const auto& p : f.periods())
        per = std::max(per, loop_integral_psi(f, J, period_loop(f, p.name), 4096).distance);
    }
    out.push_back(make("Theta dual-path agreement", dual, 1e-6));
    out.push_back(make("second fundamental form symmetry in adapted frames", sym, 1e-7));
    out.push_back(make("d Theta = 0", dth, 1e-5));
    out.push_back(make("nabla P = 0", nab, 1e-6));
    out.push_back(make("Psi over contractible loops", contr, 1e-6));
    out.push_back(make("Psi over period loops is an integer", per, 1e-4));
  }
  {  // mass symmetry of the Gauss map on the flat torus
    TwoVector m = gauss_mean(catalog_immersion("torus"), GridSpec{256, 256}, exec);
    out.push_back(make("mean Gauss map of the flat torus", norm(m), 1e-3));
  }
  {  // parallel and serial grid evaluation agree exactly
    Immersion f = catalog_immersion("ex2.3");
    auto a = curvature_table(f, g, standard::J0(), Exec::Serial);
    auto b = curvature_table(f, g, standard::J0(), Exec::Parallel);
    double diff = 0;
    for (size_t i = 0; i < a.size(); ++i)
      diff = std::max({diff, std::abs(a[i].G - b[i].G), std::abs(a[i].H_norm - b[i].H_norm)});
    out.push_back(make("serial and parallel grids agree", diff, 0));
  }
  return out;
}

}  // namespace slant
