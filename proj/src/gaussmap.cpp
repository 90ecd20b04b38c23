#include "slant/gaussmap.hpp"

#include "slant/errors.hpp"
#include "slant/geometry.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace slant {

namespace {

TwoVector tangent_plane(const SurfaceJet& j) {
  TangentBasis b = tangent_basis(j);
  return wedge2(b.e1.head<4>(), b.e2.head<4>());
}

void require_four(const Immersion& f) {
  if (f.ambient_dim() != 4)
    throw ConfigError("Gauss map analysis needs a surface in E^4");
}

}  // namespace

const char* to_string(FitClass c) {
  switch (c) {
    case FitClass::Singleton: return "singleton";
    case FitClass::Circle: return "circle";
    default: return "not_circular";
  }
}

std::vector<GaussSample> gauss_field(const Immersion& f, const GridSpec& g,
                                     Exec exec) {
  require_four(f);
  return map_grid<GaussSample>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        GaussSample s;
        s.u = u;
        s.v = v;
        s.nu = tangent_plane(f.jet(u, v));
        s.nu_plus = project_plus(s.nu);
        s.nu_minus = project_minus(s.nu);
        s.decomposability = std::abs(inner(hodge_star(s.nu), s.nu));
        return s;
      },
      exec);
}

CircleFit fit_circle(const std::vector<Vec3>& points, const CircleFitOptions& opt) {
  if (points.size() < 3) throw ConfigError("circle fit needs at least 3 points");
  CircleFit fit;
  fit.count = static_cast<int>(points.size());
  for (const auto& p : points) fit.mean += p;
  fit.mean /= fit.count;
  for (const auto& p : points) fit.spread = std::max(fit.spread, (p - fit.mean).norm());

  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  for (const auto& p : points) {
    Vec3 d = p - fit.mean;
    M += d * d.transpose();
  }
  M /= fit.count;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(M);
  fit.axis = es.eigenvectors().col(0);
  fit.offset = fit.axis.dot(fit.mean);
  if (fit.offset < 0) {
    fit.axis = -fit.axis;
    fit.offset = -fit.offset;
  }
  double ss = 0;
  for (const auto& p : points) {
    double d = fit.axis.dot(p) - fit.offset;
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / fit.count);

  if (fit.spread < opt.singleton_spread) {
    fit.cls = FitClass::Singleton;
    return fit;
  }
  fit.cls = fit.residual < opt.circle_residual * std::sqrt(double(fit.count))
                ? FitClass::Circle
                : FitClass::NotCircular;

  // angular coverage around the circle centre
  Vec3 c = fit.offset * fit.axis;
  Vec3 a = es.eigenvectors().col(2), b = fit.axis.cross(a);
  std::vector<double> ang;
  ang.reserve(points.size());
  for (const auto& p : points) {
    Vec3 d = p - c;
    if (d.norm() > 1e-12) ang.push_back(std::atan2(d.dot(b), d.dot(a)));
  }
  std::sort(ang.begin(), ang.end());
  if (ang.size() >= 2) {
    double gap = ang.front() + 2 * M_PI - ang.back();
    for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    fit.arc_extent = 2 * M_PI - gap;
  }
  return fit;
}

namespace {

ClassDetection detect_class(const Immersion& f, const GridSpec& g,
                            const std::vector<GaussSample>& samples,
                            StructureClass cls, const CircleFitOptions& opt,
                            Exec exec) {
  ClassDetection out;
  out.cls = cls;
  bool plus = cls == StructureClass::Plus;
  std::vector<Vec3> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples)
    pts.push_back(plus ? plus_coords(s.nu_plus) : minus_coords(s.nu_minus));
  out.fit = fit_circle(pts, opt);
  auto to_zeta = [plus](const Vec3& c) {
    return plus ? from_plus_coords(c) : from_minus_coords(c);
  };

  if (out.fit.cls == FitClass::Singleton) {
    // pi(V) has norm 1/sqrt(2); the structure dual has norm sqrt(2)
    out.holomorphic = structure_from_zeta(to_zeta(2 * out.fit.mean));
    return out;
  }
  if (out.fit.cls != FitClass::Circle) return out;

  // <zeta_J, pi(V)> = sqrt(2) <axis, pi(V)> = sqrt(2) offset
  ComplexStructure J = structure_from_zeta(to_zeta(std::sqrt(2.0) * out.fit.axis));
  double alpha = std::acos(std::clamp(std::sqrt(2.0) * out.fit.offset, -1.0, 1.0));
  for (int sign : {1, -1}) {
    DetectedStructure d{sign > 0 ? J : -J, sign > 0 ? alpha : M_PI - alpha,
                        out.fit.residual};
    WirtingerStats w = wirtinger_field(f, g, d.J.matrix(), exec);
    d.verify_mean = w.mean;
    d.verify_spread = w.spread;
    out.structures.push_back(d);
  }
  return out;
}

}  // namespace

SlantDetection detect_slant_structures(const Immersion& f, const GridSpec& g,
                                       const CircleFitOptions& opt, Exec exec) {
  require_four(f);
  if (g.size() < 100)
    throw ConfigError("detection needs at least 100 grid points");
  auto samples = gauss_field(f, g, exec);
  SlantDetection d;
  d.samples = static_cast<int>(samples.size());
  d.plus = detect_class(f, g, samples, StructureClass::Plus, opt, exec);
  d.minus = detect_class(f, g, samples, StructureClass::Minus, opt, exec);
  auto has = [](const ClassDetection& c) {
    return c.holomorphic.has_value() || !c.structures.empty();
  };
  d.doubly_slant = has(d.plus) && has(d.minus);
  if (d.plus.holomorphic || d.minus.holomorphic) {
    d.trichotomy = "infinite";
  } else {
    size_t n = d.plus.structures.size() + d.minus.structures.size();
    d.trichotomy = n == 0 ? "none" : n == 2 ? "two" : "four";
  }
  return d;
}

double GaussJacobianSample::residual_plus() const {
  return std::abs(det_plus - 0.5 * (G + GD));
}
double GaussJacobianSample::residual_minus() const {
  return std::abs(det_minus - 0.5 * (G - GD));
}

std::vector<GaussJacobianSample> gauss_jacobians(const Immersion& f,
                                                 const GridSpec& g, Exec exec) {
  require_four(f);
  if (g.nu < 3 || g.nv < 3) throw ConfigError("Jacobians need a 3x3 grid or larger");
  GridSpec inner{g.nu - 2, g.nv - 2};
  double du = f.domain().width() / (g.nu - 1), dv = f.domain().height() / (g.nv - 1);
  Domain d{f.domain().u0 + du, f.domain().u1 - du, f.domain().v0 + dv,
           f.domain().v1 - dv};
  double h = difference_step(f.domain(), g);
  return map_grid<GaussJacobianSample>(
      d, inner,
      [&](int, int, double u, double v) {
        auto coords = [&](double a, double b) {
          return eta_coords(tangent_plane(f.jet(a, b)));
        };
        auto diff = [&](double a0, double b0, double sa, double sb) {
          Vec6 m2 = coords(a0 - 2 * sa, b0 - 2 * sb), m1 = coords(a0 - sa, b0 - sb);
          Vec6 p1 = coords(a0 + sa, b0 + sb), p2 = coords(a0 + 2 * sa, b0 + 2 * sb);
          return Vec6((m2 - 8 * m1 + 8 * p1 - p2) / (12 * h));
        };
        Vec6 y = coords(u, v), yu = diff(u, v, h, 0), yv = diff(u, v, 0, h);
        PointGeometry pg = point_geometry(f, u, v);
        GaussJacobianSample s;
        s.u = u;
        s.v = v;
        s.G = pg.G;
        s.GD = pg.GD;
        Vec3 p = y.head<3>(), pu = yu.head<3>(), pv = yv.head<3>();
        Vec3 m = y.tail<3>(), mu_ = yu.tail<3>(), mv = yv.tail<3>();
        s.det_plus = p.normalized().dot(pu.cross(pv)) / pg.area_element;
        s.det_minus = -m.normalized().dot(mu_.cross(mv)) / pg.area_element;
        return s;
      },
      exec);
}

TwoVector gauss_mean(const Immersion& f, const GridSpec& g, Exec exec) {
  require_four(f);
  const Domain& d = f.domain();
  double du = d.width() / g.nu, dv = d.height() / g.nv;
  Domain centres{d.u0 + du / 2, d.u1 - du / 2, d.v0 + dv / 2, d.v1 - dv / 2};
  struct Cell {
    TwoVector nu;
    double area;
  };
  auto cells = map_grid<Cell>(
      centres, g,
      [&](int, int, double u, double v) {
        SurfaceJet j = f.jet(u, v);
        TangentBasis b = tangent_basis(j);
        return Cell{wedge2(b.e1.head<4>(), b.e2.head<4>()), b.area_element};
      },
      exec);
  TwoVector sum;
  double area = 0;
  for (const auto& c : cells) {
    sum = sum + c.area * c.nu;
    area += c.area;
  }
  return (1.0 / area) * sum;
}

}  // namespace slant
