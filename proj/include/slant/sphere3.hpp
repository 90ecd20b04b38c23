#pragma once

#include "slant/exterior.hpp"
#include "slant/immersion.hpp"

#include <functional>
#include <vector>

namespace slant {

// Quaternions a + ib + jc + kd stored as (a, b, c, d).
Vec4 qmul(const Vec4& p, const Vec4& q);
Vec4 qconj(const Vec4& q);
Mat4 left_matrix(const Vec4& p);   // L_p q = p q
Mat4 right_matrix(const Vec4& p);  // R_p q = q p
Vec4 left_translate(const Vec4& p, const Vec4& q);
Vec4 right_translate(const Vec4& p, const Vec4& q);
// X~_i(q) = q X_i for X_1 = i, X_2 = j, X_3 = k
Vec4 left_invariant(int i, const Vec4& q);
Vec4 phi(const Vec4& q);  // (a, b, c, d) -> (a, b, d, c)
Mat4 phi_matrix();

void require_unit(const Vec4& q, double tol = 1e-12);

// Unit-speed curve on S^3 with c' = c (f1 i + f2 j + f3 k).
struct FrameSpeeds {
  std::function<Vec3(double)> f;       // (f1, f2, f3)
  std::function<Vec3(double)> fprime;  // optional, empty if unknown
  std::function<Vec3(double)> fsecond;  // optional, empty if unknown
};

struct FrenetSample {
  double s;
  Vec4 position, t, n, b;
  double kappa, tau;
  double b_dot_x1;  // <b, X~_1(c)>
};

// Frenet data of a unit-speed curve on S^3 from 5-point stencils of its
// positions with spacing h; b completes (c, t, n) positively in E^4.
FrenetSample frenet_from_positions(const std::function<Vec4(double)>& pos,
                                   double s, double h);

class Curve3Sphere {
 public:
  Curve3Sphere(FrameSpeeds speeds, double s0, double s1, int steps,
               Vec4 start = Vec4(1, 0, 0, 0));

  double s0() const { return s0_; }
  double s1() const { return s1_; }
  double step() const { return h_; }
  const std::vector<Vec4>& samples() const { return samples_; }
  Vec3 speeds(double s) const { return speeds_.f(s); }
  const FrameSpeeds& frame_speeds() const { return speeds_; }

  // position at any s in [s0, s1], integrated from the nearest sample
  Vec4 position(double s) const;
  double max_norm_drift() const { return drift_; }

  // Frenet data from f and f' (requires fprime)
  FrenetSample frenet_analytic(double s) const;
  // Frenet data from 5-point stencils on positions spaced stride samples
  FrenetSample frenet_numeric(double s, int stride = 8) const;

 private:
  Vec4 rk4_step(const Vec4& c, double s, double h) const;

  FrameSpeeds speeds_;
  double s0_, s1_, h_;
  std::vector<Vec4> samples_;
  double drift_ = 0;
};

struct HelixParams {
  double a = 0.6;
  double b = -0.8;
  double s0 = 0;  // phase
  double k() const { return -2.0 / b; }
};

FrameSpeeds helix_speeds(const HelixParams& p);
// steps = 8192 by default over [s_begin, s_end]
Curve3Sphere helix(const HelixParams& p, double s_begin, double s_end,
                   int steps = 8192);

// f(s, t) = gamma(t) c(s), gamma(t) = cos t + w sin t with w the principal
// normal of c at s = 0.  Domain s in [-0.6, 0.6], t in [t0, t1]; the chart
// folds near s = 1.
Immersion helical_cylinder(const HelixParams& p, double t0 = -0.5,
                           double t1 = 0.5);
// Unit normal of the surface inside S^3 at the point x = f(s, t).
Vec4 helical_cylinder_binormal(const HelixParams& p, const Vec4& x, double s);

Immersion compose_phi(const Immersion& f, const std::string& id);

// Cylinder {c(s) + t e1} over a circular helix in e1^perp with axis -J1 e1
// and pitch angle beta.
Immersion ruled_cylinder(double beta);
// Circular cone t (sin psi cos s, sin psi sin s, cos psi, 0).
Immersion ruled_cone(double psi);
// Tangent developable c(s) + w c'(s) of the helix (r cos, r sin, h s) / L.
Immersion tangent_developable(double r, double h);

}  // namespace slant
