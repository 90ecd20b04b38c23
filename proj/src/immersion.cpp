#include "slant/immersion.hpp"

#include "slant/errors.hpp"
#include "slant/grid.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace slant {

Immersion::Immersion(std::string id, int ambient_dim, Domain domain,
                     ChartFn chart, Params params,
                     std::vector<PeriodSpec> periods, std::string structure)
    : id_(std::move(id)),
      ambient_dim_(ambient_dim),
      domain_(domain),
      chart_(std::move(chart)),
      params_(std::move(params)),
      periods_(std::move(periods)),
      structure_(std::move(structure)) {
  if (ambient_dim_ < 3 || ambient_dim_ > 8)
    throw ConfigError("ambient dimension must lie in 3..8");
  if (!(domain_.u1 > domain_.u0) || !(domain_.v1 > domain_.v0))
    throw ConfigError("domain intervals must be nonempty");
}

SurfaceJet Immersion::jet(double u, double v) const {
  SurfaceJet j = chart_(u, v);
  if (j.x.size() != ambient_dim_ || j.xu.size() != ambient_dim_ ||
      j.xv.size() != ambient_dim_ || j.xuu.size() != ambient_dim_ ||
      j.xuv.size() != ambient_dim_ || j.xvv.size() != ambient_dim_)
    throw NumericError("chart of '" + id_ + "' returned wrong dimension");
  return j;
}

Immersion Immersion::with_domain(const Domain& d) const {
  Immersion copy = *this;
  copy.domain_ = d;
  return copy;
}

Immersion immersion_from_expressions(const std::string& name, int ambient_dim,
                                     const std::vector<std::string>& components,
                                     const Params& params, const Domain& domain,
                                     std::vector<PeriodSpec> periods,
                                     std::string structure) {
  if (static_cast<int>(components.size()) != ambient_dim)
    throw ConfigError("expected " + std::to_string(ambient_dim) +
                      " components, got " + std::to_string(components.size()));
  std::set<std::string> names;
  for (const auto& [k, _] : params) names.insert(k);
  std::vector<dsl::NodePtr> ast;
  for (size_t c = 0; c < components.size(); ++c) {
    try {
      ast.push_back(dsl::parse(components[c], names));
    } catch (const dsl::ParseError& e) {
      throw dsl::ParseError("component " + std::to_string(c) + ": " + e.detail,
                            e.pos);
    }
  }
  auto chart = [ast, params, ambient_dim](double u, double v) {
    dsl::Env env;
    env.values = params;
    env.values["u"] = u;
    env.values["v"] = v;
    env.first = "u";
    env.second = "v";
    SurfaceJet j;
    for (auto* vec : {&j.x, &j.xu, &j.xv, &j.xuu, &j.xuv, &j.xvv})
      vec->resize(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) {
      Jet2 r = dsl::eval_jet2(ast[c], env);
      j.x[c] = r.val;
      j.xu[c] = r.d1;
      j.xv[c] = r.d2;
      j.xuu[c] = r.d11;
      j.xuv[c] = r.d12;
      j.xvv[c] = r.d22;
    }
    return j;
  };
  return Immersion(name, ambient_dim, domain, chart, params, std::move(periods),
                   std::move(structure));
}

Immersion immersion_from_config_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    std::string name = doc.value("name", std::string("config"));
    int dim = doc.at("ambient_dim").get<int>();
    auto comps = doc.at("components").get<std::vector<std::string>>();
    Params params;
    if (doc.contains("params"))
      for (auto& [k, v] : doc["params"].items()) params[k] = v.get<double>();
    auto dom = doc.at("domain");
    if (!dom.is_array() || dom.size() != 2 || dom[0].size() != 2 ||
        dom[1].size() != 2)
      throw ConfigError("domain must be [[u0, u1], [v0, v1]]");
    Domain d{dom[0][0].get<double>(), dom[0][1].get<double>(),
             dom[1][0].get<double>(), dom[1][1].get<double>()};
    std::vector<PeriodSpec> periods;
    if (doc.contains("periods")) {
      for (auto& p : doc["periods"]) {
        std::string coord = p.at("coordinate").get<std::string>();
        if (coord != "u" && coord != "v")
          throw ConfigError("period coordinate must be 'u' or 'v'");
        periods.push_back({p.at("name").get<std::string>(), coord == "u" ? 0 : 1,
                           p.at("period").get<double>()});
      }
    }
    std::string structure = doc.value("structure", std::string());
    return immersion_from_expressions(name, dim, comps, params, d,
                                      std::move(periods), structure);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
}

Immersion immersion_from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return immersion_from_config_text(ss.str());
}

Immersion transform(const Immersion& f, const Eigen::MatrixXd& A,
                    const std::string& id) {
  if (A.cols() != f.ambient_dim()) throw ConfigError("transform size mismatch");
  auto chart = [f, A](double u, double v) {
    SurfaceJet j = f.jet(u, v);
    return SurfaceJet{A * j.x,   A * j.xu,  A * j.xv,
                      A * j.xuu, A * j.xuv, A * j.xvv};
  };
  return Immersion(id, static_cast<int>(A.rows()), f.domain(), chart, f.params(),
                   f.periods(), "");
}

GridSpec GridSpec::parse(const std::string& text) {
  auto x = text.find('x');
  GridSpec g;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    std::size_t a = 0, b = 0;
    g.nu = std::stoi(text.substr(0, x), &a);
    g.nv = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw ConfigError("grid must look like 64x64, got '" + text + "'");
  }
  if (g.nu < 2 || g.nv < 2 || g.nu > 4096 || g.nv > 4096)
    throw ConfigError("grid sizes must lie in 2..4096");
  return g;
}

std::string GridSpec::str() const {
  return std::to_string(nu) + "x" + std::to_string(nv);
}

double difference_step(const Domain& d, const GridSpec& g) {
  double hu = d.width() / std::max(1, g.nu - 1);
  double hv = d.height() / std::max(1, g.nv - 1);
  return std::min({hu, hv, 1e-3});
}

}  // namespace slant
