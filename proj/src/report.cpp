#include "slant/report.hpp"

#include "slant/catalog.hpp"
#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace slant {

namespace {

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dump_into(const Json& j, int indent, int level, std::string& out) {
  auto newline = [&](int lv) {
    if (indent < 0) return;
    out += '\n';
    out.append(size_t(indent * lv), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, level + 1, out);
      }
      newline(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short numeric rows stay on one line
      bool flat = j.size() <= 8 && std::all_of(j.begin(), j.end(), [](const Json& x) {
                    return x.is_number() || x.is_boolean();
                  });
      out += '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(level + 1);
        dump_into(x, indent, level + 1, out);
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(m(i, k) == 0 ? 0.0 : m(i, k));
    rows.push_back(r);
  }
  return rows;
}

Json vec_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i] == 0 ? 0.0 : v[i]);
  return a;
}

Json check(double value, double tol, bool required, std::vector<std::string>& bad,
           const std::string& name) {
  bool pass = value <= tol;
  if (required && !pass) bad.push_back(name);
  return Json{{"value", value}, {"tolerance", tol}, {"pass", pass}};
}

bool proper(const WirtingerStats& w) {
  return w.slant && w.mean > 1e-6 && w.mean < M_PI / 2 - 1e-6;
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

Json to_json(const ComplexStructure& J) {
  return Json{{"class", to_string(J.cls())},
              {"matrix", matrix_json(J.matrix())},
              {"zeta", vec_json(J.zeta().c)}};
}

Json to_json(const Immersion& f) {
  Json params = Json::object();
  for (const auto& [k, v] : f.params()) params[k] = v;
  Json periods = Json::array();
  for (const auto& p : f.periods())
    periods.push_back({{"name", p.name},
                       {"coordinate", p.coordinate == 0 ? "u" : "v"},
                       {"period", p.period}});
  const Domain& d = f.domain();
  return Json{{"id", f.id()},
              {"ambient_dim", f.ambient_dim()},
              {"params", params},
              {"domain", Json::array({Json::array({d.u0, d.u1}), Json::array({d.v0, d.v1})})},
              {"periods", periods}};
}

Json to_json(const WirtingerStats& w) {
  return Json{{"min", w.min},
              {"max", w.max},
              {"mean", w.mean},
              {"spread", w.spread},
              {"alpha_min", w.alpha_min},
              {"alpha_max", w.alpha_max},
              {"slant", w.slant},
              {"purely_real", w.purely_real},
              {"samples", w.samples},
              {"tolerance", w.tolerance}};
}

namespace {

Json class_json(const ClassDetection& c, const CircleFitOptions& opt) {
  Json fit{{"classification", to_string(c.fit.cls)},
           {"axis", vec_json(c.fit.axis)},
           {"offset", c.fit.offset},
           {"residual", c.fit.residual},
           {"residual_tolerance", opt.circle_residual * std::sqrt(double(c.fit.count))},
           {"spread", c.fit.spread},
           {"singleton_tolerance", opt.singleton_spread},
           {"arc_extent", c.fit.arc_extent},
           {"points", c.fit.count}};
  Json out{{"class", to_string(c.cls)}, {"fit", fit}};
  if (c.holomorphic) {
    out["holomorphic_for"] = to_json(*c.holomorphic);
    out["slant_for_every_structure_in_class"] = true;
  }
  Json list = Json::array();
  for (const auto& s : c.structures) {
    Json e = to_json(s.J);
    e["alpha"] = s.alpha;
    e["wirtinger_angle"] = wirtinger_angle(s.alpha);
    e["residual"] = s.residual;
    e["verify_mean"] = s.verify_mean;
    e["verify_spread"] = s.verify_spread;
    e["verify_tolerance"] = 1e-6;
    list.push_back(e);
  }
  out["structures"] = list;
  return out;
}

}  // namespace

Json to_json(const SlantDetection& d, const CircleFitOptions& opt) {
  size_t n = d.plus.structures.size() + d.minus.structures.size();
  return Json{{"samples", d.samples},
              {"plus", class_json(d.plus, opt)},
              {"minus", class_json(d.minus, opt)},
              {"structure_count", d.trichotomy == "infinite" ? Json("infinite") : Json(n)},
              {"trichotomy", d.trichotomy},
              {"doubly_slant", d.doubly_slant}};
}

Json to_json(const LoopIntegral& r) {
  bool contractible = r.shift.isZero(0);
  double tol = contractible ? 1e-6 : r.tolerance;
  double err = contractible ? std::abs(r.value) : r.distance;
  return Json{{"loop", r.loop},
              {"steps", r.steps},
              {"value", r.value},
              {"sqrt2_normalized", r.sqrt2_normalized},
              {"nearest_integer", r.nearest},
              {"distance", r.distance},
              {"contractible", contractible},
              {"error", err},
              {"tolerance", tol},
              {"pass", err <= tol},
              {"alpha", r.alpha},
              {"shift", vec_json(r.shift)}};
}

Report analyze_report(const Immersion& f, const GridSpec& g,
                      const std::string& structure_id, Exec exec) {
  Report rep;
  auto& bad = rep.violations;
  Json& b = rep.body;
  b["command"] = "analyze";
  b["immersion"] = to_json(f);
  b["grid"] = g.str();
  b["structure_id"] = structure_id;

  Eigen::MatrixXd Jm = structure_matrix_by_id(structure_id, f.ambient_dim());
  WirtingerStats w = wirtinger_field(f, g, Jm, exec);
  if (f.ambient_dim() != 4) {
    b["structure"] = Json{{"matrix", matrix_json(Jm)}};
    b["wirtinger"] = to_json(w);
    b["note"] = "curvature, detection and form analyses need a surface in E^4";
    b["violations"] = bad;
    return rep;
  }
  ComplexStructure J = structure_by_id(structure_id);
  b["structure"] = to_json(J);
  b["wirtinger"] = to_json(w);

  auto table = curvature_table(f, g, J, exec);
  double gmin = 1e300, gmax = -1e300, dmin = 1e300, dmax = -1e300;
  double hmin = 1e300, hmax = -1e300, hsum = 0, gd_res = 0;
  for (const auto& c : table) {
    gmin = std::min(gmin, c.G);
    gmax = std::max(gmax, c.G);
    dmin = std::min(dmin, c.GD);
    dmax = std::max(dmax, c.GD);
    hmin = std::min(hmin, c.H_norm);
    hmax = std::max(hmax, c.H_norm);
    hsum += c.H_norm;
    gd_res = std::max(gd_res, std::abs(c.G - c.GD_J));
  }
  const double flat_tol = 1e-9;
  b["curvature"] = Json{{"H_norm", hsum / table.size()},
                        {"H_norm_min", hmin},
                        {"H_norm_max", hmax},
                        {"G_min", gmin},
                        {"G_max", gmax},
                        {"GD_min", dmin},
                        {"GD_max", dmax},
                        {"flat", std::max(std::abs(gmin), std::abs(gmax)) <= flat_tol},
                        {"normally_flat", std::max(std::abs(dmin), std::abs(dmax)) <= flat_tol},
                        {"tolerance", flat_tol}};

  // identities
  double block = 0;
  for (int i = 0; i < g.nu; ++i)
    for (int j = 0; j < g.nv; ++j) {
      PointGeometry pg = point_geometry(f, grid_u(f.domain(), g, i), grid_v(f.domain(), g, j));
      Mat4 B = assemble_blocks(structure_blocks(pg, J));
      block = std::max(block, (B * B + Mat4::Identity()).cwiseAbs().maxCoeff());
    }
  auto jac = gauss_jacobians(f, g, exec);
  double jp = 0, jm = 0;
  for (const auto& s : jac) {
    jp = std::max(jp, s.residual_plus());
    jm = std::max(jm, s.residual_minus());
  }
  Json ids;
  ids["G_minus_GD"] = check(gd_res, 1e-7, w.slant, bad, "G = G^D on a slant surface");
  ids["block_square"] = check(block, 1e-10, true, bad, "(P, t; F, f) squares to -I");
  ids["gauss_jacobian_plus"] = check(jp, 1e-4, true, bad, "det d nu_+ = (G + G^D)/2");
  ids["gauss_jacobian_minus"] = check(jm, 1e-4, true, bad, "det d nu_- = (G - G^D)/2");

  if (w.slant) {
    SlantOperatorReport op = slant_operator_checks(f, g, J, exec);
    b["operators"] = Json{
        {"af_symmetry", check(op.af_symmetry, op.tolerance, true, bad, "A_F symmetry")},
        {"austere", op.austere},
        {"austere_trace", op.austere_trace},
        {"parallel_f_residual", op.parallel_f},
        {"q_residual", check(op.q_residual, op.tolerance, true, bad, "P^2 = -cos^2 theta I")},
        {"tolerance", op.tolerance}};
  } else {
    b["operators"] = Json{{"skipped", "surface is not slant for this structure"}};
  }

  if (proper(w)) {
    ThetaForm t = theta_form(f, J, g, exec);
    OneForm th = [&](double u, double v) { return theta_coefficients(f, J, u, v); };
    TwoFormField dth = exterior_derivative(th, f.domain(), g, exec);
    LambdaReport lam = lambda_form(f, J, g, exec);
    ids["lemma41"] = check(t.lemma41, 1e-6, true, bad, "connection-form relation");
    Json forms;
    forms["theta_dual_path"] = check(t.dual_path, 1e-6, true, bad, "Theta dual path");
    forms["connection_antisymmetry"] = check(t.antisymmetry, 1e-8, true, bad, "omega antisymmetry");
    forms["weingarten"] = check(t.weingarten, 1e-6, true, bad, "Weingarten cross-check");
    forms["symmetry"] = check(t.symmetry, 1e-7, true, bad, "h^{j*}_{ik} = h^{i*}_{jk}");
    forms["d_theta"] = check(dth.max_abs(), 1e-5, true, bad, "d Theta = 0");
    forms["lambda"] = Json{{"e12_min", lam.e12_min},
                           {"e12_max", lam.e12_max},
                           {"expected", lam.expected},
                           {"nondegenerate", lam.nondegenerate},
                           {"nabla_p_difference", check(lam.nabla_p_difference, lam.tolerance,
                                                        true, bad, "nabla P = 0 (differencing)")},
                           {"nabla_p_identity", check(lam.nabla_p_identity, lam.tolerance,
                                                      true, bad, "nabla P = 0 (identity)")}};
    Json loops = Json::array();
    std::vector<Loop> ls;
    for (const auto& p : f.periods()) ls.push_back(period_loop(f, p.name));
    const Domain& d = f.domain();
    ls.push_back(rectangle_loop(d.u0 + 0.25 * d.width(), d.u0 + 0.75 * d.width(),
                                d.v0 + 0.25 * d.height(), d.v0 + 0.75 * d.height()));
    for (const auto& l : ls) {
      Json r = to_json(loop_integral_psi(f, J, l, 4096));
      if (!r["pass"].get<bool>()) bad.push_back("loop integral " + l.name);
      loops.push_back(r);
    }
    forms["loops"] = loops;
    b["forms"] = forms;
  } else {
    b["forms"] = Json{{"skipped", "surface is not proper slant for this structure"}};
  }
  b["identities"] = ids;
  b["violations"] = bad;
  return rep;
}

Report detect_report(const Immersion& f, const GridSpec& g,
                     const CircleFitOptions& opt, Exec exec) {
  Report rep;
  SlantDetection d = detect_slant_structures(f, g, opt, exec);
  Json& b = rep.body;
  b["command"] = "detect";
  b["immersion"] = to_json(f);
  b["grid"] = g.str();
  b["detection"] = to_json(d, opt);
  for (const auto* c : {&d.plus, &d.minus})
    for (const auto& s : c->structures) {
      double err = std::abs(s.verify_mean - wirtinger_angle(s.alpha));
      if (err > 1e-6 || s.verify_spread > 1e-6)
        rep.violations.push_back("detected structure fails its Wirtinger check");
    }
  if (d.doubly_slant) {
    double m = 0;
    for (const auto& c : curvature_table(f, g, standard::J1(), exec))
      m = std::max({m, std::abs(c.G), std::abs(c.GD)});
    b["doubly_slant_flatness"] = check(m, 1e-6, true, rep.violations,
                                       "doubly slant surfaces have G = G^D = 0");
  }
  b["violations"] = rep.violations;
  return rep;
}

Report loop_report(const Immersion& f, const std::string& structure_id,
                   const Loop& loop, const std::vector<int>& steps) {
  Report rep;
  ComplexStructure J = structure_by_id(structure_id);
  Json& b = rep.body;
  b["command"] = "loop";
  b["immersion"] = to_json(f);
  b["structure_id"] = structure_id;
  b["structure"] = to_json(J);
  Json runs = Json::array();
  double prev = 1e300;
  bool monotone = true;
  Json last;
  for (int n : steps) {
    LoopIntegral r = loop_integral_psi(f, J, loop, n);
    last = to_json(r);
    double e = last["error"].get<double>();
    // below 1e-12 the error is rounding, not discretization
    if (e > std::max(prev, 1e-12)) monotone = false;
    prev = e;
    runs.push_back(last);
  }
  b["runs"] = runs;
  b["monotone"] = monotone;
  b["result"] = last;
  if (!last["pass"].get<bool>()) rep.violations.push_back("loop integral off its target");
  b["violations"] = rep.violations;
  return rep;
}

Json catalog_report() {
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    Json d = Json::object();
    for (const auto& [k, v] : e.defaults) d[k] = v;
    list.push_back({{"id", e.id},
                    {"description", e.description},
                    {"ambient_dim", e.ambient_dim},
                    {"defaults", d},
                    {"structure", e.structure},
                    {"components", e.components}});
  }
  return Json{{"command", "catalog"}, {"entries", list}};
}

void write_curvature_csv(std::ostream& os, const std::vector<CurvatureSample>& t) {
  os << "u,v,G,GD,GD_J,H_norm,theta,alpha\n";
  for (const auto& c : t)
    os << number(c.u) << ',' << number(c.v) << ',' << number(c.G) << ',' << number(c.GD)
       << ',' << number(c.GD_J) << ',' << number(c.H_norm) << ',' << number(c.theta) << ','
       << number(c.alpha) << '\n';
}

void write_gauss_csv(std::ostream& os, const std::vector<GaussSample>& s) {
  os << "u,v,plus1,plus2,plus3,minus1,minus2,minus3\n";
  for (const auto& x : s) {
    Vec3 p = plus_coords(x.nu_plus), m = minus_coords(x.nu_minus);
    os << number(x.u) << ',' << number(x.v);
    for (int i = 0; i < 3; ++i) os << ',' << number(p[i]);
    for (int i = 0; i < 3; ++i) os << ',' << number(m[i]);
    os << '\n';
  }
}

}  // namespace slant
