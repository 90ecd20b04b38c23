#include "slant/sphere3.hpp"

#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace slant {

Vec4 qmul(const Vec4& p, const Vec4& q) {
  return Vec4(p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
              p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
              p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
              p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]);
}

Vec4 qconj(const Vec4& q) { return Vec4(q[0], -q[1], -q[2], -q[3]); }

Mat4 left_matrix(const Vec4& p) {
  double a = p[0], b = p[1], c = p[2], d = p[3];
  Mat4 m;
  m << a, -b, -c, -d,
       b, a, -d, c,
       c, d, a, -b,
       d, -c, b, a;
  return m;
}

Mat4 right_matrix(const Vec4& p) {
  double a = p[0], b = p[1], c = p[2], d = p[3];
  Mat4 m;
  m << a, -b, -c, -d,
       b, a, d, -c,
       c, -d, a, b,
       d, c, -b, a;
  return m;
}

void require_unit(const Vec4& q, double tol) {
  if (std::abs(q.norm() - 1) > tol) throw ConfigError("quaternion is not a unit");
}

Vec4 left_translate(const Vec4& p, const Vec4& q) {
  require_unit(p);
  require_unit(q);
  return left_matrix(p) * q;
}

Vec4 right_translate(const Vec4& p, const Vec4& q) {
  require_unit(p);
  require_unit(q);
  return right_matrix(p) * q;
}

Vec4 left_invariant(int i, const Vec4& q) {
  if (i < 1 || i > 3) throw ConfigError("left-invariant field index is 1..3");
  return qmul(q, Vec4::Unit(i));
}

Vec4 phi(const Vec4& q) { return Vec4(q[0], q[1], q[3], q[2]); }

Mat4 phi_matrix() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

namespace {

Vec4 imag(const Vec3& w) { return Vec4(0, w[0], w[1], w[2]); }

// unit vector completing (c, t, n) to a positive orthonormal basis of E^4
Vec4 completion(const Vec4& c, const Vec4& t, const Vec4& n) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Mat4 m;
    m << c, t, n, Vec4::Unit(i);
    r[i] = m.determinant();
  }
  return r;
}

}  // namespace

Curve3Sphere::Curve3Sphere(FrameSpeeds speeds, double s0, double s1, int steps,
                           Vec4 start)
    : speeds_(std::move(speeds)), s0_(s0), s1_(s1) {
  if (!(s1 > s0) || steps < 8) throw ConfigError("bad curve range or step count");
  require_unit(start, 1e-12);
  h_ = (s1 - s0) / steps;
  samples_.reserve(steps + 1);
  Vec4 c = start;
  samples_.push_back(c);
  for (int i = 0; i < steps; ++i) {
    c = rk4_step(c, s0 + i * h_, h_);
    drift_ = std::max(drift_, std::abs(c.norm() - 1));
    c.normalize();
    samples_.push_back(c);
  }
}

Vec4 Curve3Sphere::rk4_step(const Vec4& c, double s, double h) const {
  auto rhs = [&](const Vec4& x, double t) { return qmul(x, imag(speeds_.f(t))); };
  Vec4 k1 = rhs(c, s);
  Vec4 k2 = rhs(c + 0.5 * h * k1, s + 0.5 * h);
  Vec4 k3 = rhs(c + 0.5 * h * k2, s + 0.5 * h);
  Vec4 k4 = rhs(c + h * k3, s + h);
  return c + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
}

Vec4 Curve3Sphere::position(double s) const {
  if (s < s0_ - 1e-12 || s > s1_ + 1e-12)
    throw ConfigError("curve parameter outside its range");
  double x = (s - s0_) / h_;
  int i = std::clamp(static_cast<int>(std::lround(x)), 0,
                     static_cast<int>(samples_.size()) - 1);
  double si = s0_ + i * h_;
  double d = s - si;
  if (std::abs(d) < 1e-15) return samples_[i];
  return rk4_step(samples_[i], si, d).normalized();
}

FrenetSample Curve3Sphere::frenet_analytic(double s) const {
  if (!speeds_.fprime || !speeds_.fsecond)
    throw ConfigError("curve has no analytic speed derivatives");
  Vec4 c = position(s);
  Vec3 w = speeds_.f(s), wp = speeds_.fprime(s);
  double kappa = wp.norm();
  if (kappa < 1e-12) throw DegenerateError("curve is a geodesic here");
  Vec3 nu = wp / kappa;
  Vec3 beta = w.cross(nu);
  // nabla_t n = c (nu' + w x nu) and <nu', beta> = <w'', beta> / kappa
  double tau = speeds_.fsecond(s).dot(beta) / kappa + w.cross(nu).dot(beta);
  FrenetSample r;
  r.s = s;
  r.position = c;
  r.t = qmul(c, imag(w));
  r.n = qmul(c, imag(nu));
  r.b = qmul(c, imag(beta));
  r.kappa = kappa;
  r.tau = tau;
  r.b_dot_x1 = r.b.dot(left_invariant(1, c));
  return r;
}

FrenetSample frenet_from_positions(const std::function<Vec4(double)>& pos,
                                   double s, double h) {
  Vec4 pm2 = pos(s - 2 * h), pm1 = pos(s - h), p0 = pos(s), pp1 = pos(s + h),
       pp2 = pos(s + 2 * h);
  Vec4 d1 = (pm2 - 8 * pm1 + 8 * pp1 - pp2) / (12 * h);
  Vec4 d2 = (-pm2 + 16 * pm1 - 30 * p0 + 16 * pp1 - pp2) / (12 * h * h);
  Vec4 d3 = (-pm2 + 2 * pm1 - 2 * pp1 + pp2) / (2 * h * h * h);
  FrenetSample r;
  r.s = s;
  r.position = p0;
  r.t = d1.normalized();
  // covariant acceleration in S^3: tangential part of c''
  Vec4 acc = d2 - d2.dot(p0) * p0 - d2.dot(r.t) * r.t;
  r.kappa = acc.norm();
  if (r.kappa < 1e-9) throw DegenerateError("curve is a geodesic here");
  r.n = acc / r.kappa;
  r.b = completion(p0, r.t, r.n);
  r.tau = d3.dot(r.b) / r.kappa;
  r.b_dot_x1 = r.b.dot(left_invariant(1, p0));
  return r;
}

FrenetSample Curve3Sphere::frenet_numeric(double s, int stride) const {
  double h = stride * h_;
  if (s - 2 * h < s0_ - 1e-12 || s + 2 * h > s1_ + 1e-12)
    throw ConfigError("stencil leaves the curve range");
  return frenet_from_positions([this](double x) { return position(x); }, s, h);
}

FrameSpeeds helix_speeds(const HelixParams& p) {
  if (std::abs(p.a * p.a + p.b * p.b - 1) > 1e-12)
    throw ConfigError("helix needs a^2 + b^2 = 1");
  if (p.b == 0) throw ConfigError("helix needs b != 0");
  double a = p.a, b = p.b, k = p.k(), s0 = p.s0;
  FrameSpeeds f;
  f.f = [=](double s) {
    return Vec3(b, a * std::cos(k * s + s0), a * std::sin(k * s + s0));
  };
  f.fprime = [=](double s) {
    return Vec3(0, -a * k * std::sin(k * s + s0), a * k * std::cos(k * s + s0));
  };
  f.fsecond = [=](double s) {
    return Vec3(0, -a * k * k * std::cos(k * s + s0),
                -a * k * k * std::sin(k * s + s0));
  };
  return f;
}

Curve3Sphere helix(const HelixParams& p, double s_begin, double s_end,
                   int steps) {
  return Curve3Sphere(helix_speeds(p), s_begin, s_end, steps);
}

namespace {

struct HelicalData {
  HelixParams p;
  std::shared_ptr<Curve3Sphere> curve;
  Vec4 w;  // gamma'(0)
};

HelicalData make_helical(const HelixParams& p) {
  if (!(p.a * p.b < 0)) throw ConfigError("helical cylinder needs a b < 0");
  HelicalData d;
  d.p = p;
  // c(0) = 1: integrate backwards to find the start at s = -1
  FrameSpeeds sp = helix_speeds(p), back;
  back.f = [sp](double x) { return Vec3(-sp.f(-x)); };
  Curve3Sphere rev(back, 0, 1, 4096);
  d.curve = std::make_shared<Curve3Sphere>(sp, -1, 1, 8192, rev.samples().back());
  Vec3 wp = helix_speeds(p).fprime(0);
  d.w = imag(wp.normalized());
  return d;
}

}  // namespace

Immersion helical_cylinder(const HelixParams& p, double t0, double t1) {
  HelicalData d = make_helical(p);
  FrameSpeeds sp = helix_speeds(p);
  auto chart = [d, sp](double s, double t) {
    Vec4 c = d.curve->position(s);
    Vec4 gamma = Vec4(std::cos(t), 0, 0, 0) + std::sin(t) * d.w;
    Vec4 dgamma = Vec4(-std::sin(t), 0, 0, 0) + std::cos(t) * d.w;
    Vec4 om = imag(sp.f(s)), omp = imag(sp.fprime(s));
    Vec4 cp = qmul(c, om);
    Vec4 cpp = qmul(c, Vec4(-1, 0, 0, 0) + omp);  // c (w^2 + w'), w^2 = -1
    SurfaceJet j;
    j.x = qmul(gamma, c);
    j.xu = qmul(gamma, cp);
    j.xv = qmul(dgamma, c);
    j.xuu = qmul(gamma, cpp);
    j.xuv = qmul(dgamma, cp);
    j.xvv = -j.x;
    return j;
  };
  Params params{{"a", p.a}, {"b", p.b}};
  // the chart folds where gamma'(0) c(s) meets the tangent c'(s); keep a
  // patch around the origin
  return Immersion("helical-cylinder", 4, Domain{-0.6, 0.6, t0, t1}, chart,
                   params, {}, "J1m");
}

Vec4 helical_cylinder_binormal(const HelixParams& p, const Vec4& x, double s) {
  Vec3 w = helix_speeds(p).f(s), wp = helix_speeds(p).fprime(s);
  // x = gamma(t) c(s), so gamma c beta = x beta
  return qmul(x, imag(w.cross(wp.normalized())));
}

Immersion compose_phi(const Immersion& f, const std::string& id) {
  Immersion g = transform(f, phi_matrix(), id);
  return Immersion(id, 4, g.domain(), [g](double u, double v) { return g.jet(u, v); },
                   f.params(), f.periods(), "J1");
}

Immersion ruled_cylinder(double beta) {
  if (!(beta > 0 && beta < M_PI)) throw ConfigError("pitch angle must lie in (0, pi)");
  double sb = std::sin(beta), cb = std::cos(beta), om = sb;  // radius 1
  auto chart = [=](double s, double t) {
    SurfaceJet j;
    j.x = Eigen::VectorXd(4);
    j.x << t, -s * cb, std::cos(om * s), std::sin(om * s);
    j.xu = Eigen::VectorXd(4);
    j.xu << 0, -cb, -sb * std::sin(om * s), sb * std::cos(om * s);
    j.xv = Eigen::VectorXd::Unit(4, 0);
    j.xuu = Eigen::VectorXd(4);
    j.xuu << 0, 0, -sb * om * std::cos(om * s), -sb * om * std::sin(om * s);
    j.xuv = Eigen::VectorXd::Zero(4);
    j.xvv = Eigen::VectorXd::Zero(4);
    return j;
  };
  return Immersion("cylinder", 4, Domain{0, 2 * M_PI, -1, 1}, chart,
                   {{"beta", beta}}, {}, "J1");
}

Immersion ruled_cone(double psi) {
  if (!(psi > 0 && psi < M_PI / 2)) throw ConfigError("half-angle must lie in (0, pi/2)");
  double sp = std::sin(psi), cp = std::cos(psi);
  auto chart = [=](double s, double t) {
    double cs = std::cos(s), ss = std::sin(s);
    SurfaceJet j;
    j.x = Eigen::VectorXd(4);
    j.x << t * sp * cs, t * sp * ss, t * cp, 0;
    j.xu = Eigen::VectorXd(4);
    j.xu << -t * sp * ss, t * sp * cs, 0, 0;
    j.xv = Eigen::VectorXd(4);
    j.xv << sp * cs, sp * ss, cp, 0;
    j.xuu = Eigen::VectorXd(4);
    j.xuu << -t * sp * cs, -t * sp * ss, 0, 0;
    j.xuv = Eigen::VectorXd(4);
    j.xuv << -sp * ss, sp * cs, 0, 0;
    j.xvv = Eigen::VectorXd::Zero(4);
    return j;
  };
  return Immersion("cone", 4, Domain{0, 2 * M_PI, 0.5, 1.5}, chart, {{"psi", psi}},
                   {{"period-u", 0, 2 * M_PI}}, "J1");
}

Immersion tangent_developable(double r, double h) {
  if (!(r > 0) || h == 0) throw ConfigError("developable needs r > 0 and h != 0");
  double L = std::sqrt(r * r + h * h);
  auto chart = [=](double s, double w) {
    double cs = std::cos(s / L), ss = std::sin(s / L);
    Eigen::VectorXd c(4), c1(4), c2(4), c3(4);
    c << r * cs, r * ss, h * s / L, 0;
    c1 << -r / L * ss, r / L * cs, h / L, 0;
    c2 << -r / (L * L) * cs, -r / (L * L) * ss, 0, 0;
    c3 << r / (L * L * L) * ss, -r / (L * L * L) * cs, 0, 0;
    SurfaceJet j;
    j.x = c + w * c1;
    j.xu = c1 + w * c2;
    j.xv = c1;
    j.xuu = c2 + w * c3;
    j.xuv = c2;
    j.xvv = Eigen::VectorXd::Zero(4);
    return j;
  };
  return Immersion("tandev", 4, Domain{0, 2 * M_PI, 0.5, 1.5}, chart,
                   {{"r", r}, {"h", h}}, {}, "J1");
}

}  // namespace slant
