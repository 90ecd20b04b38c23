#include "slant/catalog.hpp"

#include "slant/errors.hpp"
#include "slant/sphere3.hpp"

#include <cmath>
#include <sstream>

namespace slant {

namespace {

using V = Eigen::VectorXd;

V vec(std::initializer_list<double> xs) {
  V r(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) r[i++] = x;
  return r;
}

double param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw ConfigError("missing parameter '" + name + "'");
  return it->second;
}

std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e{
      {"ex2.1", "slant plane at angle alpha", 4, {{"alpha", 0.7}}, "J0",
       {"u", "v*sin(alpha)", "v*cos(alpha)", "0"}},
      {"ex2.2", "complex curve w = z^2/2 seen through J_alpha", 4,
       {{"alpha", 0.5}}, "Jalpha:{alpha}",
       {"u", "(u^2 - v^2)/2", "v", "u*v"}},
      {"ex2.3", "exponential cone over a torus curve", 4, {{"k", 1.0}}, "J0",
       {"exp(k*u)*cos(u)*cos(v)", "exp(k*u)*sin(u)*cos(v)",
        "exp(k*u)*cos(u)*sin(v)", "exp(k*u)*sin(u)*sin(v)"}},
      {"ex2.4", "line times circular helix", 4, {{"k", 1.0}}, "J0",
       {"u", "k*cos(v)", "v", "k*sin(v)"}},
      {"ex2.5", "rotation of a unit-speed circle", 4, {{"k", 1.0}}, "J0",
       {"-k*u*sin(v)", "cos(u)", "k*u*cos(v)", "sin(u)"}},
      {"ex2.6", "cone over (p sin u, p cos u, sin qu, cos qu)", 4,
       {{"p", 1.0}, {"q", 2.0}}, "J1",
       {"p*v*sin(u)", "p*v*cos(u)", "v*sin(q*u)", "v*cos(q*u)"}},
      {"ex2.7", "four-dimensional fixture in E^8 (pairing checks only)", 8,
       {{"k", 0.5}}, "", {}},
      {"ex2.8", "complex curve (w, w^2/2, w^3/6, 0) in C^4 seen through J_alpha",
       8, {{"alpha", 0.5}}, "Jalpha:{alpha}",
       {"u", "(u^2 - v^2)/2", "(u^3 - 3*u*v^2)/6", "0", "v", "u*v",
        "(3*u^2*v - v^3)/6", "0"}},
      {"ex3.1-whitney", "Whitney sphere on a latitude band", 4, {}, "",
       {"cos(v)*cos(u)", "cos(v)*sin(u)", "2*sin(v)*cos(v)*cos(u)",
        "2*sin(v)*cos(v)*sin(u)"}},
      {"ex3.2", "line times circle, slant for J1 and J2", 4, {{"k", 1.0}}, "J1",
       {"u", "v", "k*cos(v)", "k*sin(v)"}},
      {"sphere", "round sphere of radius r in E^3", 4, {{"r", 1.0}}, "",
       {"r*cos(v)*cos(u)", "r*cos(v)*sin(u)", "r*sin(v)", "0"}},
      {"catenoid-e3", "catenoid patch in E^3", 4, {{"c", 1.0}}, "",
       {"c*cosh(v/c)*cos(u)", "c*cosh(v/c)*sin(u)", "v", "0"}},
      {"torus", "flat product torus", 4,
       {{"r1", 1 / std::sqrt(2.0)}, {"r2", 1 / std::sqrt(2.0)}}, "J1",
       {"r1*cos(u)", "r1*sin(u)", "r2*cos(v)", "r2*sin(v)"}},
      {"holo-j1", "graph of z^2/2 in the complex coordinates of J1", 4, {}, "J1",
       {"u", "v", "(u^2 - v^2)/2", "u*v"}},
      {"helical-cylinder", "helical cylinder gamma(t) c(s) in S^3", 4,
       {{"a", 0.6}, {"b", -0.8}}, "J1m", {}},
      {"helical-cylinder-phi", "phi applied to the helical cylinder", 4,
       {{"a", 0.6}, {"b", -0.8}}, "J1", {}},
      {"cylinder", "cylinder over a circular helix, pitch angle beta", 4,
       {{"beta", 0.6}}, "J1", {}},
      {"cone", "circular cone with half-angle psi", 4, {{"psi", 0.5}}, "J1", {}},
      {"tandev", "tangent developable of a circular helix", 4,
       {{"r", 1.0}, {"h", 0.7}}, "J1", {}},
  };
  return e;
}

Domain default_domain(const std::string& id) {
  const double tp = 2 * M_PI;
  if (id == "ex2.1" || id == "ex2.2" || id == "ex2.8" || id == "holo-j1")
    return {-1, 1, -1, 1};
  if (id == "ex2.3" || id == "ex2.4" || id == "ex3.2") return {-1, 1, 0, tp};
  if (id == "ex2.5") return {0.5, 2.5, 0, tp};
  if (id == "ex2.6") return {0, tp, 0.5, 2};
  if (id == "ex3.1-whitney" || id == "sphere") return {0, tp, -1.2, 1.2};
  if (id == "catenoid-e3") return {0, tp, -1, 1};
  if (id == "torus") return {0, tp, 0, tp};
  throw ConfigError("no default domain for '" + id + "'");
}

std::vector<PeriodSpec> default_periods(const std::string& id, const Params& p) {
  const double tp = 2 * M_PI;
  if (id == "ex2.3" || id == "ex2.4" || id == "ex2.5" || id == "ex3.2")
    return {{"period-v", 1, tp}};
  if (id == "ex2.6") {
    double q = param(p, "q");
    if (q == std::round(q)) return {{"period-u", 0, tp}};
    return {};
  }
  if (id == "sphere" || id == "catenoid-e3" || id == "ex3.1-whitney")
    return {{"period-u", 0, tp}};
  if (id == "torus") return {{"period-u", 0, tp}, {"period-v", 1, tp}};
  return {};
}

SurfaceJet chart(const std::string& id, const Params& p, double u, double v) {
  double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
  SurfaceJet j;
  if (id == "ex2.1") {
    double a = param(p, "alpha");
    j = {vec({u, v * std::sin(a), v * std::cos(a), 0}), vec({1, 0, 0, 0}),
         vec({0, std::sin(a), std::cos(a), 0}), V::Zero(4), V::Zero(4), V::Zero(4)};
  } else if (id == "ex2.2" || id == "holo-j1") {
    j = {vec({u, (u * u - v * v) / 2, v, u * v}), vec({1, u, 0, v}),
         vec({0, -v, 1, u}), vec({0, 1, 0, 0}), vec({0, 0, 0, 1}),
         vec({0, -1, 0, 0})};
    if (id == "holo-j1") {
      // same chart with coordinates reordered to (x1, y1, x2, y2) of J1
      Eigen::Matrix4d Pm;
      Pm << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
      for (auto* x : {&j.x, &j.xu, &j.xv, &j.xuu, &j.xuv, &j.xvv}) *x = Pm * *x;
    }
  } else if (id == "ex2.3") {
    double k = param(p, "k"), E = std::exp(k * u);
    double g1 = E * cu, g2 = E * su;
    double d1 = E * (k * cu - su), d2 = E * (k * su + cu);
    double s1 = E * ((k * k - 1) * cu - 2 * k * su);
    double s2 = E * ((k * k - 1) * su + 2 * k * cu);
    j.x = vec({g1 * cv, g2 * cv, g1 * sv, g2 * sv});
    j.xu = vec({d1 * cv, d2 * cv, d1 * sv, d2 * sv});
    j.xv = vec({-g1 * sv, -g2 * sv, g1 * cv, g2 * cv});
    j.xuu = vec({s1 * cv, s2 * cv, s1 * sv, s2 * sv});
    j.xuv = vec({-d1 * sv, -d2 * sv, d1 * cv, d2 * cv});
    j.xvv = -j.x;
  } else if (id == "ex2.4") {
    double k = param(p, "k");
    j = {vec({u, k * cv, v, k * sv}), vec({1, 0, 0, 0}), vec({0, -k * sv, 1, k * cv}),
         V::Zero(4), V::Zero(4), vec({0, -k * cv, 0, -k * sv})};
  } else if (id == "ex2.5") {
    double k = param(p, "k");
    j = {vec({-k * u * sv, cu, k * u * cv, su}), vec({-k * sv, -su, k * cv, cu}),
         vec({-k * u * cv, 0, -k * u * sv, 0}), vec({0, -cu, 0, -su}),
         vec({-k * cv, 0, -k * sv, 0}), vec({k * u * sv, 0, -k * u * cv, 0})};
  } else if (id == "ex2.6") {
    double a = param(p, "p"), q = param(p, "q");
    double cq = std::cos(q * u), sq = std::sin(q * u);
    j = {vec({a * v * su, a * v * cu, v * sq, v * cq}),
         vec({a * v * cu, -a * v * su, q * v * cq, -q * v * sq}),
         vec({a * su, a * cu, sq, cq}),
         vec({-a * v * su, -a * v * cu, -q * q * v * sq, -q * q * v * cq}),
         vec({a * cu, -a * su, q * cq, -q * sq}), V::Zero(4)};
  } else if (id == "ex2.8") {
    double uu = u * u, vv = v * v;
    j.x = vec({u, (uu - vv) / 2, (uu * u - 3 * u * vv) / 6, 0, v, u * v,
               (3 * uu * v - vv * v) / 6, 0});
    j.xu = vec({1, u, (uu - vv) / 2, 0, 0, v, u * v, 0});
    j.xv = vec({0, -v, -u * v, 0, 1, u, (uu - vv) / 2, 0});
    j.xuu = vec({0, 1, u, 0, 0, 0, v, 0});
    j.xuv = vec({0, 0, -v, 0, 0, 1, u, 0});
    j.xvv = vec({0, -1, -u, 0, 0, 0, -v, 0});
  } else if (id == "ex3.1-whitney") {
    // f(x0, x1, x2) = (x1, x2, 2 x0 x1, 2 x0 x2), x0 = sin v
    Jet2 U = Jet2::first(u), W = Jet2::second(v);
    auto S = [](const Jet2& a) { return chain(a, std::sin(a.val), std::cos(a.val), -std::sin(a.val)); };
    auto C = [](const Jet2& a) { return chain(a, std::cos(a.val), -std::sin(a.val), -std::cos(a.val)); };
    Jet2 x0 = S(W), x1 = C(W) * C(U), x2 = C(W) * S(U), two = Jet2::constant(2);
    std::array<Jet2, 4> c{x1, x2, two * x0 * x1, two * x0 * x2};
    for (auto* x : {&j.x, &j.xu, &j.xv, &j.xuu, &j.xuv, &j.xvv}) x->resize(4);
    for (int i = 0; i < 4; ++i) {
      j.x[i] = c[i].val;
      j.xu[i] = c[i].d1;
      j.xv[i] = c[i].d2;
      j.xuu[i] = c[i].d11;
      j.xuv[i] = c[i].d12;
      j.xvv[i] = c[i].d22;
    }
  } else if (id == "ex3.2") {
    double k = param(p, "k");
    j = {vec({u, v, k * cv, k * sv}), vec({1, 0, 0, 0}), vec({0, 1, -k * sv, k * cv}),
         V::Zero(4), V::Zero(4), vec({0, 0, -k * cv, -k * sv})};
  } else if (id == "sphere") {
    double r = param(p, "r");
    j = {r * vec({cv * cu, cv * su, sv, 0}), r * vec({-cv * su, cv * cu, 0, 0}),
         r * vec({-sv * cu, -sv * su, cv, 0}), r * vec({-cv * cu, -cv * su, 0, 0}),
         r * vec({sv * su, -sv * cu, 0, 0}), r * vec({-cv * cu, -cv * su, -sv, 0})};
  } else if (id == "catenoid-e3") {
    double c = param(p, "c"), ch = std::cosh(v / c), sh = std::sinh(v / c);
    j = {vec({c * ch * cu, c * ch * su, v, 0}), vec({-c * ch * su, c * ch * cu, 0, 0}),
         vec({sh * cu, sh * su, 1, 0}), vec({-c * ch * cu, -c * ch * su, 0, 0}),
         vec({-sh * su, sh * cu, 0, 0}), vec({ch / c * cu, ch / c * su, 0, 0})};
  } else if (id == "torus") {
    double r1 = param(p, "r1"), r2 = param(p, "r2");
    j = {vec({r1 * cu, r1 * su, r2 * cv, r2 * sv}), vec({-r1 * su, r1 * cu, 0, 0}),
         vec({0, 0, -r2 * sv, r2 * cv}), vec({-r1 * cu, -r1 * su, 0, 0}),
         V::Zero(4), vec({0, 0, -r2 * cv, -r2 * sv})};
  } else {
    throw ConfigError("unknown catalog id '" + id + "'");
  }
  return j;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() { return entries(); }

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw ConfigError("unknown catalog id '" + id + "'");
}

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("parameter must look like name=value, got '" + item + "'");
    std::string name = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size())
      throw ConfigError("parameter '" + name + "' has a non-numeric value");
    out[name] = x;
  }
  return out;
}

std::string catalog_structure(const std::string& id, const Params& params) {
  std::string s = catalog_entry(id).structure;
  if (id == "ex2.6" && param(params, "q") == 1) {
    // q = 1 gives a plane that is complex for J1; use the plus structure
    // with zeta = cos(pi/3) zeta_J1 + sin(pi/3) (e13 - e24), angle pi/3
    return "zeta:0.5,0.8660254037844386,0,0,-0.8660254037844386,0.5";
  }
  auto pos = s.find("{alpha}");
  if (pos != std::string::npos) s.replace(pos, 7, fmt_num(param(params, "alpha")));
  return s;
}

Immersion catalog_immersion(const std::string& spec, const Params& overrides) {
  std::string id = spec;
  Params inline_params;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    id = spec.substr(0, colon);
    inline_params = parse_params(spec.substr(colon + 1));
  }
  const CatalogEntry& e = catalog_entry(id);
  Params p = e.defaults;
  for (const auto& [k, v] : inline_params) p[k] = v;
  for (const auto& [k, v] : overrides) p[k] = v;
  for (const auto& [k, _] : p)
    if (!e.defaults.count(k))
      throw ConfigError("'" + id + "' has no parameter '" + k + "'");

  if (id == "ex2.7")
    throw ConfigError("ex2.7 is a 4-dimensional fixture used only by pairing checks");
  if (id == "helical-cylinder" || id == "helical-cylinder-phi") {
    HelixParams hp{param(p, "a"), param(p, "b"), 0};
    Immersion f = helical_cylinder(hp);
    return id == "helical-cylinder" ? f : compose_phi(f, id);
  }
  if (id == "cylinder") return ruled_cylinder(param(p, "beta"));
  if (id == "cone") return ruled_cone(param(p, "psi"));
  if (id == "tandev") return tangent_developable(param(p, "r"), param(p, "h"));

  auto fn = [id, p](double u, double v) { return chart(id, p, u, v); };
  return Immersion(id, e.ambient_dim, default_domain(id), fn, p,
                   default_periods(id, p), catalog_structure(id, p));
}

std::array<Eigen::VectorXd, 4> fourfold_tangents(double k, double w, double z) {
  return {vec({1, 0, 0, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0, 0, 0}),
          vec({0, 0, k * std::cos(w), 0, k, 0, -k * std::sin(w), 0}),
          vec({0, 0, 0, k * std::cos(z), 0, k, 0, -k * std::sin(z)})};
}

}  // namespace slant
