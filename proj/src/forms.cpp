#include "slant/forms.hpp"

#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>

namespace slant {

namespace {

template <class F>
auto stencil(F&& fn, double h) {
  using T = std::decay_t<decltype(fn(h))>;
  T r = (fn(-2 * h) - 8 * fn(-h) + 8 * fn(h) - fn(2 * h)) / (12 * h);
  return r;
}

Mat4 adapted_at(const Immersion& f, const ComplexStructure& J, double u, double v) {
  return adapted_frame(point_geometry(f, u, v), J).frame;
}

void require_four(const Immersion& f) {
  if (f.ambient_dim() != 4) throw ConfigError("form analysis needs a surface in E^4");
}

}  // namespace

double TwoFormField::max_abs() const {
  double m = 0;
  for (double c : coeff) m = std::max(m, std::abs(c));
  return m;
}

ConnectionSample connection_forms_at(const Immersion& f, const ComplexStructure& J,
                                     double u, double v, double h) {
  require_four(f);
  PointGeometry pg = point_geometry(f, u, v);
  AdaptedSlantFrame a = adapted_frame(pg, J);
  const Mat4& E = a.frame;
  Mat4 Eu = stencil([&](double d) { return Mat4(adapted_at(f, J, u + d, v)); }, h);
  Mat4 Ev = stencil([&](double d) { return Mat4(adapted_at(f, J, u, v + d)); }, h);

  ConnectionSample s;
  s.u = u;
  s.v = v;
  s.theta = a.theta;
  s.h = a.h;
  s.coord[0] = Eu.transpose() * E;
  s.coord[1] = Ev.transpose() * E;
  // adapted e_i in terms of x_u, x_v
  Mat2 R;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i) R(k, i) = pg.e(k).dot(E.col(i));
  Mat2 C = pg.coeff * R;
  for (int i = 0; i < 2; ++i) s.omega[i] = C(0, i) * s.coord[0] + C(1, i) * s.coord[1];

  double cot = std::cos(a.theta) / std::sin(a.theta);
  for (int j = 0; j < 2; ++j) {
    const Mat4& w = s.omega[j];
    s.antisymmetry = std::max(s.antisymmetry, (w + w.transpose()).cwiseAbs().maxCoeff());
    for (int i = 0; i < 2; ++i)
      for (int r = 0; r < 2; ++r)
        s.weingarten = std::max(s.weingarten, std::abs(w(i, 2 + r) - a.h[r](i, j)));
    double l41 = w(2, 3) - w(0, 1) + cot * a.h[j].trace();
    s.lemma41 = std::max(s.lemma41, std::abs(l41));
    s.symmetry = std::max(s.symmetry, std::abs(a.h[1](0, j) - a.h[0](1, j)));
  }
  return s;
}

std::vector<ConnectionSample> connection_forms(const Immersion& f,
                                               const ComplexStructure& J,
                                               const GridSpec& g, Exec exec) {
  double h = difference_step(f.domain(), g);
  return map_grid<ConnectionSample>(
      f.domain(), g,
      [&](int, int, double u, double v) { return connection_forms_at(f, J, u, v, h); },
      exec);
}

Vec2 theta_coefficients(const Immersion& f, const ComplexStructure& J, double u,
                        double v) {
  require_four(f);
  PointGeometry pg = point_geometry(f, u, v);
  double c = std::clamp(J.apply(pg.e(0)).dot(pg.e(1)), -1.0, 1.0);
  double s = std::sqrt(1 - c * c);
  if (s < 1e-6) throw DegenerateError("Theta undefined: surface is complex here");
  if (std::abs(c) < 1e-6)
    throw DegenerateError("Theta undefined: surface is totally real here");
  Vec4 JH = J.apply(pg.H);
  return Vec2(-2 / s * JH.dot(pg.xu), -2 / s * JH.dot(pg.xv));
}

ThetaForm theta_form(const Immersion& f, const ComplexStructure& J,
                     const GridSpec& g, Exec exec) {
  require_four(f);
  double h = difference_step(f.domain(), g);
  struct Node {
    Vec2 canonical, connection;
    double anti, wein, l41, sym, alpha;
  };
  auto nodes = map_grid<Node>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        ConnectionSample c = connection_forms_at(f, J, u, v, h);
        Node n;
        n.canonical = theta_coefficients(f, J, u, v);
        n.connection = Vec2(c.coord[0](0, 2) + c.coord[0](1, 3),
                            c.coord[1](0, 2) + c.coord[1](1, 3));
        n.anti = c.antisymmetry;
        n.wein = c.weingarten;
        n.l41 = c.lemma41;
        n.sym = c.symmetry;
        n.alpha = alpha_at(f.jet(u, v), J.matrix());
        return n;
      },
      exec);
  ThetaForm t;
  t.canonical = {f.domain(), g, {}};
  t.connection = {f.domain(), g, {}};
  t.alpha_min = M_PI;
  for (const auto& n : nodes) {
    t.canonical.coeff.push_back(n.canonical);
    t.connection.coeff.push_back(n.connection);
    t.dual_path = std::max(t.dual_path, (n.canonical - n.connection).cwiseAbs().maxCoeff());
    t.antisymmetry = std::max(t.antisymmetry, n.anti);
    t.weingarten = std::max(t.weingarten, n.wein);
    t.lemma41 = std::max(t.lemma41, n.l41);
    t.symmetry = std::max(t.symmetry, n.sym);
    t.alpha_min = std::min(t.alpha_min, n.alpha);
    t.alpha_max = std::max(t.alpha_max, n.alpha);
  }
  return t;
}

TwoFormField exterior_derivative(const OneFormField& w) {
  const GridSpec& g = w.grid;
  if (g.nu < 2 || g.nv < 2) throw ConfigError("exterior derivative needs 2x2 nodes");
  if (static_cast<int>(w.coeff.size()) != g.size())
    throw ConfigError("form does not match its grid");
  double du = w.domain.width() / (g.nu - 1), dv = w.domain.height() / (g.nv - 1);
  auto at = [&](int i, int j) -> const Vec2& { return w.coeff[size_t(i) * g.nv + j]; };
  TwoFormField out{w.domain, {g.nu - 1, g.nv - 1}, true, {}};
  out.coeff.reserve(size_t(out.grid.size()));
  for (int i = 0; i + 1 < g.nu; ++i) {
    for (int j = 0; j + 1 < g.nv; ++j) {
      double circ = 0.5 * du * (at(i, j)[0] + at(i + 1, j)[0]) +
                    0.5 * dv * (at(i + 1, j)[1] + at(i + 1, j + 1)[1]) -
                    0.5 * du * (at(i, j + 1)[0] + at(i + 1, j + 1)[0]) -
                    0.5 * dv * (at(i, j)[1] + at(i, j + 1)[1]);
      out.coeff.push_back(circ / (du * dv));
    }
  }
  return out;
}

TwoFormField exterior_derivative(const OneForm& w, const Domain& d,
                                 const GridSpec& g, Exec exec) {
  if (g.nu < 2 || g.nv < 2) throw ConfigError("exterior derivative needs 2x2 nodes");
  double du = d.width() / (g.nu - 1), dv = d.height() / (g.nv - 1);
  static const double x3 = std::sqrt(0.6);
  static const double gx[3] = {-x3, 0, x3}, gw[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};
  GridSpec cells{g.nu - 1, g.nv - 1};
  Domain centres{d.u0 + du / 2, d.u1 - du / 2, d.v0 + dv / 2, d.v1 - dv / 2};
  TwoFormField out{d, cells, true, {}};
  out.coeff = map_grid<double>(
      centres, cells,
      [&](int, int, double uc, double vc) {
        double circ = 0;
        for (int k = 0; k < 3; ++k) {
          double u = uc + 0.5 * du * gx[k], v = vc + 0.5 * dv * gx[k];
          circ += gw[k] * 0.5 * du * (w(u, vc - dv / 2)[0] - w(u, vc + dv / 2)[0]);
          circ += gw[k] * 0.5 * dv * (w(uc + du / 2, v)[1] - w(uc - du / 2, v)[1]);
        }
        return circ / (du * dv);
      },
      exec);
  return out;
}

Loop period_loop(const Immersion& f, const std::string& name,
                 std::optional<double> fixed) {
  for (const auto& p : f.periods()) {
    if (p.name != name) continue;
    const Domain& d = f.domain();
    int c = p.coordinate;
    double other = fixed ? *fixed : c == 0 ? 0.5 * (d.v0 + d.v1) : 0.5 * (d.u0 + d.u1);
    double start = c == 0 ? d.u0 : d.v0, period = p.period;
    return {name, 1, [=](int, double t) {
              Vec2 x, dx = Vec2::Zero();
              x[c] = start + t * period;
              x[1 - c] = other;
              dx[c] = period;
              return std::make_pair(x, dx);
            }};
  }
  throw ConfigError("surface '" + f.id() + "' declares no loop named '" + name + "'");
}

Loop rectangle_loop(double u0, double u1, double v0, double v1) {
  if (!(u1 > u0) || !(v1 > v0)) throw ConfigError("rectangle loop needs u0 < u1, v0 < v1");
  return {"rectangle", 4, [=](int side, double s) {
            double a = u1 - u0, b = v1 - v0;
            switch (side) {
              case 0: return std::make_pair(Vec2(u0 + s * a, v0), Vec2(a, 0));
              case 1: return std::make_pair(Vec2(u1, v0 + s * b), Vec2(0, b));
              case 2: return std::make_pair(Vec2(u1 - s * a, v1), Vec2(-a, 0));
              default: return std::make_pair(Vec2(u0, v1 - s * b), Vec2(0, -b));
            }
          }};
}

Loop expression_loop(const std::string& u_expr, const std::string& v_expr,
                     const Params& params) {
  std::set<std::string> names;
  for (const auto& [k, _] : params) names.insert(k);
  dsl::NodePtr eu = dsl::parse(u_expr, names), ev = dsl::parse(v_expr, names);
  dsl::Env env;
  env.values = params;
  env.first = "t";
  return {"expression", 1, [eu, ev, env](int, double t) mutable {
            env.values["t"] = t;
            Jet2 a = dsl::eval_jet2(eu, env), b = dsl::eval_jet2(ev, env);
            return std::make_pair(Vec2(a.val, b.val), Vec2(a.d1, b.d1));
          }};
}

LoopIntegral loop_integral_psi(const Immersion& f, const ComplexStructure& J,
                               const Loop& loop, int steps) {
  require_four(f);
  if (steps < 2) throw ConfigError("loop integration needs at least 2 steps");
  const Domain& d = f.domain();
  Vec2 p0 = loop.at(0, 0).first, p1 = loop.at(loop.pieces - 1, 1).first;
  Vec2 shift = p1 - p0;
  // endpoints may differ by declared periods only
  for (int c = 0; c < 2; ++c) {
    if (std::abs(shift[c]) <= 1e-9) continue;
    bool ok = false;
    for (const auto& p : f.periods()) {
      if (p.coordinate != c) continue;
      double n = shift[c] / p.period;
      if (std::abs(n - std::round(n)) * p.period <= 1e-9 && std::round(n) != 0) ok = true;
    }
    if (!ok) throw ConfigError("loop '" + loop.name + "' is not closed");
  }
  if (steps % loop.pieces != 0)
    throw ConfigError("step count must be a multiple of the loop's piece count");
  LoopIntegral r;
  r.loop = loop.name;
  r.steps = steps;
  r.shift = shift;
  const int n = steps / loop.pieces;
  double sum = 0;
  for (int piece = 0; piece < loop.pieces; ++piece) {
    double part = 0;
    for (int k = 0; k <= n; ++k) {
      auto [x, dx] = loop.at(piece, double(k) / n);
      if (x[0] < d.u0 - 1e-9 || x[0] > d.u1 + 1e-9 || x[1] < d.v0 - 1e-9 ||
          x[1] > d.v1 + 1e-9)
        throw ConfigError("loop '" + loop.name + "' leaves the domain");
      double a = alpha_at(f.jet(x[0], x[1]), J.matrix());
      if (piece == 0 && k == 0) r.alpha = a;
      double w = (k == 0 || k == n) ? 0.5 : 1.0;
      part += w * theta_coefficients(f, J, x[0], x[1]).dot(dx) / std::sin(a);
    }
    sum += part / n;
  }
  r.value = sum / (2 * M_PI);
  r.sqrt2_normalized = r.value / std::sqrt(2.0);
  r.nearest = std::round(r.value);
  r.distance = std::abs(r.value - r.nearest);
  return r;
}

LambdaReport lambda_form(const Immersion& f, const ComplexStructure& J,
                         const GridSpec& g, Exec exec) {
  require_four(f);
  const Mat4& Jm = J.matrix();
  double h = difference_step(f.domain(), g);
  struct Node {
    double lam, e12, dp, id;
  };
  auto tangent_P = [&](const PointGeometry& pg) {
    Mat2 P;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) P(k, l) = pg.e(k).dot(Jm * pg.e(l));
    return P;
  };
  auto nodes = map_grid<Node>(
      f.domain(), g,
      [&](int, int, double u, double v) {
        PointGeometry pg = point_geometry(f, u, v);
        Node n;
        n.lam = pg.xu.dot(Jm * pg.xv);
        n.e12 = pg.e(0).dot(Jm * pg.e(1));

        // nabla_X P = X(P) + W^T P - P W^T, W(k, l) = <D_X e_k, e_l>
        auto Pat = [&](double a, double b) { return tangent_P(point_geometry(f, a, b)); };
        auto Fr = [&](double a, double b) { return Mat4(point_geometry(f, a, b).frame); };
        Mat2 Pu = stencil([&](double s) { return Mat2(Pat(u + s, v)); }, h);
        Mat2 Pv = stencil([&](double s) { return Mat2(Pat(u, v + s)); }, h);
        Mat4 Fu = stencil([&](double s) { return Fr(u + s, v); }, h);
        Mat4 Fv = stencil([&](double s) { return Fr(u, v + s); }, h);
        Mat2 P = tangent_P(pg);
        n.dp = 0;
        n.id = 0;
        for (int i = 0; i < 2; ++i) {
          double cu = pg.coeff(0, i), cv = pg.coeff(1, i);
          Mat2 XP = cu * Pu + cv * Pv;
          Mat4 D = cu * Fu + cv * Fv;
          Mat2 W = (D.transpose() * pg.frame).topLeftCorner<2, 2>();
          Mat2 nab = XP + W.transpose() * P - P * W.transpose();
          n.dp = std::max(n.dp, nab.cwiseAbs().maxCoeff());
          // identity route: t h(X, Y) + A_{FY} X
          for (int j = 0; j < 2; ++j) {
            Eigen::Vector2d X = Eigen::Vector2d::Unit(i), Y = Eigen::Vector2d::Unit(j);
            Vec4 hxy = pg.second_form(X, Y);
            Vec4 Jh = Jm * hxy;
            Vec4 th = pg.tangent(Eigen::Vector2d(pg.e(0).dot(Jh), pg.e(1).dot(Jh)));
            Vec4 JY = Jm * pg.e(j);
            Vec4 FY = JY - pg.tangent(Eigen::Vector2d(pg.e(0).dot(JY), pg.e(1).dot(JY)));
            Vec4 AX = pg.second_form(X, Eigen::Vector2d::Unit(0)).dot(FY) * pg.e(0) +
                      pg.second_form(X, Eigen::Vector2d::Unit(1)).dot(FY) * pg.e(1);
            n.id = std::max(n.id, (th + AX).norm());
          }
        }
        return n;
      },
      exec);
  LambdaReport r;
  r.lambda = {f.domain(), g, false, {}};
  r.e12_min = 1e300;
  r.e12_max = -1e300;
  for (const auto& n : nodes) {
    r.lambda.coeff.push_back(n.lam);
    r.e12_min = std::min(r.e12_min, n.e12);
    r.e12_max = std::max(r.e12_max, n.e12);
    r.nabla_p_difference = std::max(r.nabla_p_difference, n.dp);
    r.nabla_p_identity = std::max(r.nabla_p_identity, n.id);
  }
  r.expected = -std::cos(alpha_at(f.jet(grid_u(f.domain(), g, 0), grid_v(f.domain(), g, 0)), Jm));
  r.nondegenerate = std::min(std::abs(r.e12_min), std::abs(r.e12_max)) > 1e-9 &&
                    r.e12_min * r.e12_max > 0;
  return r;
}

}  // namespace slant
