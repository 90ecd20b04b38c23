#include "slant/geometry.hpp"

#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace slant {

namespace {

Vec4 as4(const Eigen::VectorXd& x) {
  if (x.size() != 4) throw ConfigError("point geometry needs ambient dimension 4");
  return Vec4(x);
}

// e4 completing (a, b, c) to a positively oriented orthonormal basis
Vec4 completion(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Mat4 m;
    m.col(0) = a;
    m.col(1) = b;
    m.col(2) = c;
    m.col(3) = Vec4::Unit(i);
    r[i] = m.determinant();
  }
  return r;
}

}  // namespace

TangentBasis tangent_basis(const SurfaceJet& j) {
  double E = j.xu.squaredNorm(), F = j.xu.dot(j.xv), G = j.xv.squaredNorm();
  double det = E * G - F * F;
  if (!(det > 1e-12)) throw DegenerateError("chart is not an immersion here");
  TangentBasis t;
  double nu = std::sqrt(E);
  t.e1 = j.xu / nu;
  Eigen::VectorXd w = j.xv - j.xv.dot(t.e1) * t.e1;
  double nw = w.norm();
  t.e2 = w / nw;
  t.coeff << 1 / nu, -F / (E * nw), 0, 1 / nw;
  t.area_element = std::sqrt(det);
  return t;
}

Vec4 PointGeometry::second_form(const Eigen::Vector2d& a,
                                const Eigen::Vector2d& b) const {
  return a[0] * b[0] * hvec[0] + (a[0] * b[1] + a[1] * b[0]) * hvec[1] +
         a[1] * b[1] * hvec[2];
}

PointGeometry point_geometry(const SurfaceJet& j, double u, double v) {
  TangentBasis tb = tangent_basis(j);
  PointGeometry pg;
  pg.u = u;
  pg.v = v;
  pg.x = as4(j.x);
  pg.xu = as4(j.xu);
  pg.xv = as4(j.xv);
  Vec4 e1 = as4(tb.e1), e2 = as4(tb.e2);
  pg.coeff = tb.coeff;
  pg.area_element = tb.area_element;

  Eigen::Matrix<double, 4, 2> T;
  T << e1, e2;
  Mat4 proj = Mat4::Identity() - T * T.transpose();
  int best = 0;
  double best_norm = -1;
  for (int k = 0; k < 4; ++k) {
    double n = (proj * Vec4::Unit(k)).norm();
    if (n > best_norm + 1e-12) {
      best_norm = n;
      best = k;
    }
  }
  Vec4 e3 = (proj * Vec4::Unit(best)).normalized();
  Vec4 e4 = completion(e1, e2, e3);
  pg.frame << e1, e2, e3, e4;

  Vec4 xuu = as4(j.xuu), xuv = as4(j.xuv), xvv = as4(j.xvv);
  auto d2 = [&](int a, int b) {
    const Mat2& C = pg.coeff;
    return Vec4(C(0, a) * C(0, b) * xuu +
                (C(0, a) * C(1, b) + C(1, a) * C(0, b)) * xuv +
                C(1, a) * C(1, b) * xvv);
  };
  pg.hvec[0] = proj * d2(0, 0);
  pg.hvec[1] = proj * (0.5 * (d2(0, 1) + d2(1, 0)));
  pg.hvec[2] = proj * d2(1, 1);
  for (int r = 0; r < 2; ++r) {
    Vec4 n = pg.frame.col(2 + r);
    double a = pg.hvec[0].dot(n), b = pg.hvec[1].dot(n), c = pg.hvec[2].dot(n);
    pg.h[r] << a, b, b, c;
  }
  pg.H = 0.5 * (pg.hvec[0] + pg.hvec[2]);
  const Mat2 &h3 = pg.h[0], &h4 = pg.h[1];
  pg.G = h3(0, 0) * h3(1, 1) - h3(0, 1) * h3(0, 1) + h4(0, 0) * h4(1, 1) -
         h4(0, 1) * h4(0, 1);
  pg.GD = h3(0, 0) * h4(0, 1) + h3(0, 1) * h4(1, 1) - h3(0, 1) * h4(0, 0) -
          h3(1, 1) * h4(0, 1);
  return pg;
}

PointGeometry point_geometry(const Immersion& f, double u, double v) {
  return point_geometry(f.jet(u, v), u, v);
}

StructureBlocks structure_blocks(const PointGeometry& pg,
                                 const ComplexStructure& J) {
  StructureBlocks b;
  b.in_frame = pg.frame.transpose() * J.matrix() * pg.frame;
  b.P = b.in_frame.topLeftCorner<2, 2>();
  b.F = b.in_frame.bottomLeftCorner<2, 2>();
  b.t = b.in_frame.topRightCorner<2, 2>();
  b.f = b.in_frame.bottomRightCorner<2, 2>();
  b.alpha = std::acos(std::clamp(b.P(1, 0), -1.0, 1.0));
  b.theta = std::acos(std::clamp(b.P.col(0).norm(), 0.0, 1.0));
  return b;
}

Mat4 assemble_blocks(const StructureBlocks& b) {
  Mat4 m;
  m << b.P, b.t, b.F, b.f;
  return m;
}

double normal_curvature_for(const PointGeometry& pg, const ComplexStructure& J) {
  return J.cls() == StructureClass::Minus ? pg.GD : -pg.GD;
}

AdaptedSlantFrame adapted_frame(const PointGeometry& pg,
                                const ComplexStructure& J, double margin) {
  const Mat4& Jm = J.matrix();
  Eigen::Matrix<double, 4, 2> T;
  T << pg.e(0), pg.e(1);
  auto tan_part = [&](const Vec4& x) { return Vec4(T * (T.transpose() * x)); };
  Vec4 e1 = pg.e(0);
  Vec4 Pe1 = tan_part(Jm * e1);
  double c = Pe1.norm();
  double theta = std::acos(std::clamp(c, 0.0, 1.0));
  if (theta < margin)
    throw DegenerateError("adapted frame undefined: surface is complex here");
  if (theta > M_PI / 2 - margin)
    throw DegenerateError("adapted frame undefined: surface is totally real here");
  double s = std::sin(theta);
  Vec4 e2 = Pe1 / c;
  Vec4 e3 = (Jm * e1 - Pe1) / s;
  Vec4 Je2 = Jm * e2;
  Vec4 e4 = (Je2 - tan_part(Je2)) / s;

  AdaptedSlantFrame a;
  a.theta = theta;
  a.frame << e1, e2, e3, e4;
  double orth = (a.frame.transpose() * a.frame - Mat4::Identity()).cwiseAbs().maxCoeff();
  if (orth > 1e-9)
    throw NumericError("adapted frame not orthonormal (point is not slant)");
  Eigen::Vector2d c1(1, 0), c2(e2.dot(pg.e(0)), e2.dot(pg.e(1)));
  std::array<Eigen::Vector2d, 2> cs{c1, c2};
  for (int r = 0; r < 2; ++r) {
    Vec4 n = a.frame.col(2 + r);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) a.h[r](i, k) = pg.second_form(cs[i], cs[k]).dot(n);
  }
  a.j_in_frame = a.frame.transpose() * Jm * a.frame;
  return a;
}

std::array<double, kWirtingerDirections> wirtinger_angles(
    const SurfaceJet& j, const Eigen::MatrixXd& J) {
  if (J.rows() != j.x.size())
    throw ConfigError("structure and surface dimensions differ");
  TangentBasis tb = tangent_basis(j);
  Mat2 P;
  Eigen::VectorXd Je1 = J * tb.e1, Je2 = J * tb.e2;
  P << tb.e1.dot(Je1), tb.e1.dot(Je2), tb.e2.dot(Je1), tb.e2.dot(Je2);
  std::array<double, kWirtingerDirections> out;
  for (int k = 0; k < kWirtingerDirections; ++k) {
    double phi = M_PI * k / kWirtingerDirections;
    Eigen::Vector2d X(std::cos(phi), std::sin(phi));
    out[k] = std::acos(std::clamp((P * X).norm(), 0.0, 1.0));
  }
  return out;
}

double alpha_at(const SurfaceJet& j, const Eigen::MatrixXd& J) {
  TangentBasis tb = tangent_basis(j);
  return std::acos(std::clamp((J * tb.e1).dot(tb.e2), -1.0, 1.0));
}

WirtingerStats wirtinger_field(const Immersion& f, const GridSpec& g,
                               const Eigen::MatrixXd& J, Exec exec) {
  struct Row {
    std::array<double, kWirtingerDirections> theta;
    double alpha;
  };
  auto rows = map_grid<Row>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        SurfaceJet j = f.jet(u, v);
        return Row{wirtinger_angles(j, J), alpha_at(j, J)};
      },
      exec);
  WirtingerStats s;
  s.min = s.alpha_min = INFINITY;
  s.max = s.alpha_max = -INFINITY;
  double sum = 0;
  for (const Row& r : rows) {
    for (double t : r.theta) {
      s.min = std::min(s.min, t);
      s.max = std::max(s.max, t);
      sum += t;
    }
    s.alpha_min = std::min(s.alpha_min, r.alpha);
    s.alpha_max = std::max(s.alpha_max, r.alpha);
  }
  s.samples = static_cast<int>(rows.size()) * kWirtingerDirections;
  s.mean = sum / s.samples;
  s.spread = s.max - s.min;
  s.slant = s.spread <= s.tolerance;
  s.purely_real = s.min > s.tolerance;
  return s;
}

SlantOperatorReport slant_operator_checks(const Immersion& f, const GridSpec& g,
                                          const ComplexStructure& J,
                                          Exec exec) {
  auto rows = map_grid<std::array<double, 4>>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        PointGeometry pg = point_geometry(f, u, v);
        StructureBlocks b = structure_blocks(pg, J);
        auto A = [&](const Eigen::Vector2d& xi) -> Mat2 {
          return xi[0] * pg.h[0] + xi[1] * pg.h[1];
        };
        Eigen::Vector2d E1(1, 0), E2(0, 1);
        double af = (A(b.F.col(0)) * E2 - A(b.F.col(1)) * E1).norm();
        double tr = std::max(std::abs(pg.h[0].trace()), std::abs(pg.h[1].trace()));
        double pf = 0;
        for (int r = 0; r < 2; ++r) {
          Eigen::Vector2d xi = Eigen::Vector2d::Unit(r);
          for (int i = 0; i < 2; ++i) {
            Eigen::Vector2d X = Eigen::Vector2d::Unit(i);
            pf = std::max(pf, (A(b.f * xi) * X + A(xi) * (b.P * X)).norm());
          }
        }
        double c2 = std::pow(std::cos(b.theta), 2);
        double q = (b.P * b.P + c2 * Mat2::Identity()).cwiseAbs().maxCoeff();
        return std::array<double, 4>{af, tr, pf, q};
      },
      exec);
  SlantOperatorReport r;
  for (const auto& x : rows) {
    r.af_symmetry = std::max(r.af_symmetry, x[0]);
    r.austere_trace = std::max(r.austere_trace, x[1]);
    r.parallel_f = std::max(r.parallel_f, x[2]);
    r.q_residual = std::max(r.q_residual, x[3]);
  }
  r.austere = r.austere_trace <= r.tolerance;
  return r;
}

std::vector<CurvatureSample> curvature_table(const Immersion& f,
                                             const GridSpec& g,
                                             const ComplexStructure& J,
                                             Exec exec) {
  return map_grid<CurvatureSample>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        PointGeometry pg = point_geometry(f, u, v);
        StructureBlocks b = structure_blocks(pg, J);
        return CurvatureSample{u,         v,       pg.G,   pg.GD,
                               normal_curvature_for(pg, J), pg.H.norm(),
                               b.theta,   b.alpha};
      },
      exec);
}

}  // namespace slant
