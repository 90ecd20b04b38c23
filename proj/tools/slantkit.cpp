// slantkit: analyze, detect and integrate over surfaces in E^4.
#include "slant/catalog.hpp"
#include "slant/errors.hpp"
#include "slant/report.hpp"
#include "slant/selfcheck.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace slant;

namespace {

constexpr int kOk = 0;
constexpr int kConfig = 2;
constexpr int kNumeric = 3;

struct Source {
  std::string catalog;
  std::string config;
  std::vector<std::string> params;
  std::string grid = "64x64";
  bool serial = false;
};

void add_source(CLI::App* app, Source& s) {
  auto* c = app->add_option("--catalog", s.catalog, "catalog id, optionally id:name=value,...");
  auto* f = app->add_option("--config", s.config, "surface config file (JSON)");
  c->excludes(f);
  app->add_option("--param", s.params, "name=value[,name=value...], repeatable");
  app->add_option("--grid", s.grid, "grid as NUxNV")->capture_default_str();
  app->add_flag("--serial", s.serial, "use the serial reference evaluation");
}

Params collect_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& it : items)
    for (const auto& [k, v] : parse_params(it)) p[k] = v;
  return p;
}

Immersion load(const Source& s) {
  Params overrides = collect_params(s.params);
  if (!s.catalog.empty()) return catalog_immersion(s.catalog, overrides);
  if (s.config.empty()) throw ConfigError("give --catalog or --config");
  std::ifstream in(s.config);
  if (!in) throw ConfigError("cannot read config file '" + s.config + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (overrides.empty()) return immersion_from_config_text(ss.str());
  Json doc;
  try {
    doc = Json::parse(ss.str());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  for (const auto& [k, v] : overrides) doc["params"][k] = v;
  return immersion_from_config_text(doc.dump());
}

std::string structure_for(const Immersion& f, const std::string& given) {
  if (!given.empty()) return given;
  return f.structure().empty() ? "J0" : f.structure();
}

void emit(const Json& body, const std::string& out) {
  std::string text = dump(body) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw ConfigError("cannot write '" + out + "'");
  os << text;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write '" + path + "'");
  fn(os);
}

int fail(const char* kind, const std::string& msg, int code) {
  Json e{{"error", {{"type", kind}, {"message", msg}}}};
  std::cerr << dump(e) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slant surface toolkit"};
  app.require_subcommand(1);
  std::string out, csv, J;

  Source an_src;
  auto* analyze = app.add_subcommand("analyze", "Wirtinger, curvature, operator and form analysis");
  add_source(analyze, an_src);
  analyze->add_option("--J", J, "complex structure id (default: the surface's own)");
  analyze->add_option("--csv", csv, "write the per-point curvature table");
  analyze->add_option("--out", out, "write the report here instead of stdout");

  Source de_src;
  CircleFitOptions fit;
  auto* detect = app.add_subcommand("detect", "Recover the complex structures making the surface slant");
  add_source(detect, de_src);
  detect->add_option("--singleton-tol", fit.singleton_spread, "singleton spread threshold")
      ->capture_default_str();
  detect->add_option("--circle-tol", fit.circle_residual, "circle residual per sqrt(point)")
      ->capture_default_str();
  detect->add_option("--csv", csv, "write the Gauss map samples");
  detect->add_option("--out", out, "write the report here instead of stdout");

  Source lo_src;
  std::string loop_name, loop_u, loop_v;
  std::optional<double> at;
  std::vector<int> steps{4096};
  auto* loop = app.add_subcommand("loop", "Integrate the normalized canonical 1-form over a loop");
  add_source(loop, lo_src);
  loop->add_option("--J", J, "complex structure id (default: the surface's own)");
  auto* ln = loop->add_option("--loop", loop_name,
                              "declared period name, 'contractible' or 'rectangle:u0,u1,v0,v1'");
  auto* lu = loop->add_option("--loop-u", loop_u, "u(t), t in [0, 1]");
  auto* lv = loop->add_option("--loop-v", loop_v, "v(t), t in [0, 1]");
  lu->needs(lv);
  lv->needs(lu);
  ln->excludes(lu);
  loop->add_option("--at", at, "fixed value of the other coordinate on a period loop");
  loop->add_option("--steps", steps, "trapezoid steps; a list gives a refinement study")
      ->delimiter(',');
  loop->add_option("--out", out, "write the report here instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "List catalog entries");
  catalog->add_option("--out", out, "write the list here instead of stdout");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite");
  selfcheck->add_option("--out", out, "write the results here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*analyze) {
      Immersion f = load(an_src);
      GridSpec g = GridSpec::parse(an_src.grid);
      Exec ex = an_src.serial ? Exec::Serial : Exec::Parallel;
      std::string sid = structure_for(f, J);
      Report r = analyze_report(f, g, sid, ex);
      if (!csv.empty()) {
        if (f.ambient_dim() != 4) throw ConfigError("--csv needs a surface in E^4");
        auto t = curvature_table(f, g, structure_by_id(sid), ex);
        write_file(csv, [&](std::ostream& os) { write_curvature_csv(os, t); });
      }
      emit(r.body, out);
      return r.violations.empty() ? kOk : kNumeric;
    }
    if (*detect) {
      Immersion f = load(de_src);
      GridSpec g = GridSpec::parse(de_src.grid);
      Exec ex = de_src.serial ? Exec::Serial : Exec::Parallel;
      Report r = detect_report(f, g, fit, ex);
      if (!csv.empty()) {
        auto s = gauss_field(f, g, ex);
        write_file(csv, [&](std::ostream& os) { write_gauss_csv(os, s); });
      }
      emit(r.body, out);
      return r.violations.empty() ? kOk : kNumeric;
    }
    if (*loop) {
      Immersion f = load(lo_src);
      Loop l;
      if (!loop_u.empty()) {
        l = expression_loop(loop_u, loop_v, f.params());
      } else if (loop_name.empty() || loop_name == "contractible") {
        const Domain& d = f.domain();
        l = rectangle_loop(d.u0 + 0.25 * d.width(), d.u0 + 0.75 * d.width(),
                           d.v0 + 0.25 * d.height(), d.v0 + 0.75 * d.height());
      } else if (loop_name.rfind("rectangle:", 0) == 0) {
        std::vector<double> c;
        std::stringstream ss(loop_name.substr(10));
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            c.push_back(std::stod(item));
          } catch (const std::exception&) {
            throw ConfigError("bad rectangle corner '" + item + "'");
          }
        }
        if (c.size() != 4) throw ConfigError("rectangle loop needs u0,u1,v0,v1");
        l = rectangle_loop(c[0], c[1], c[2], c[3]);
      } else {
        l = period_loop(f, loop_name, at);
      }
      Report r = loop_report(f, structure_for(f, J), l, steps);
      emit(r.body, out);
      return r.violations.empty() ? kOk : kNumeric;
    }
    if (*catalog) {
      emit(catalog_report(), out);
      return kOk;
    }
    if (*selfcheck) {
      Json list = Json::array();
      bool ok = true;
      for (const auto& c : run_selfcheck()) {
        list.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                        {"pass", c.pass}});
        ok = ok && c.pass;
      }
      emit(Json{{"command", "selfcheck"}, {"checks", list}, {"pass", ok}}, out);
      return ok ? kOk : kNumeric;
    }
  } catch (const ConfigError& e) {
    return fail("config", e.what(), kConfig);
  } catch (const NumericError& e) {
    return fail("numeric", e.what(), kNumeric);
  } catch (const std::exception& e) {
    return fail("numeric", e.what(), kNumeric);
  }
  return kOk;
}
