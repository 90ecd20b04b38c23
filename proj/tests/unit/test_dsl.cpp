#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slant/catalog.hpp"
#include "slant/dsl.hpp"
#include "slant/immersion.hpp"

#include <cmath>
#include <random>

using namespace slant;
using namespace slant::dsl;

namespace {

std::mt19937_64 rng(3);

int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

// Random expression in u, v, a with bounded values on [-1, 1]^2.
std::string random_expr(int depth) {
  if (depth == 0) {
    switch (pick(4)) {
      case 0: return "u";
      case 1: return "v";
      case 2: return "a";
      default: return std::to_string(pick(5) + 1);
    }
  }
  std::string x = random_expr(depth - 1), y = random_expr(depth - 1);
  switch (pick(11)) {
    case 0: return "(" + x + " + " + y + ")";
    case 1: return "(" + x + " - " + y + ")";
    case 2: return "(" + x + ")*(" + y + ")";
    case 3: return "(" + x + ")/(2 + sin(" + y + "))";
    case 4: return "sin(" + x + ")";
    case 5: return "cos(" + x + ")";
    case 6: return "exp(" + x + "/4)";
    case 7: return "atan(" + x + ")";
    case 8: return "sqrt(1 + (" + x + ")^2)";
    case 9: return "-(" + x + ")^2";
    default: return "log(2 + cos(" + x + "))";
  }
}

double at(const NodePtr& n, double u, double v) { return eval(n, {{"u", u}, {"v", v}, {"a", 0.7}}); }

}  // namespace

TEST_CASE("precedence and associativity") {
  auto e = [](const char* s) { return eval(parse(s), {{"u", 2}, {"v", 3}}); };
  CHECK(e("2^3^2") == 512);
  CHECK(e("-2^2") == -4);
  CHECK(e("2^-1") == 0.5);
  CHECK(e("1 - 2 - 3") == -4);
  CHECK(e("8 / 4 / 2") == 1);
  CHECK(e("u + v * 2") == 8);
  CHECK(e("(u + v) * 2") == 10);
  CHECK(e("+u") == 2);
  CHECK(e("1.5e1 + .5") == 15.5);
  CHECK(e("pi") == doctest::Approx(M_PI));
}

TEST_CASE("functions") {
  for (const auto& name : function_names()) {
    NodePtr n = parse(name + "(u)");
    double x = name == "acos" || name == "asin" ? 0.3 : 1.3;
    CHECK(std::isfinite(eval(n, {{"u", x}})));
  }
  CHECK(eval(parse("sinh(u) - (exp(u) - exp(-u))/2"), {{"u", 0.8}}) == doctest::Approx(0).scale(1));
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const char* s) {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return std::pair<int, int>(e.pos.line, e.pos.col);
    }
    return std::pair<int, int>(0, 0);
  };
  CHECK(pos("u + * v") == std::pair(1, 5));
  CHECK(pos("foo(u)") == std::pair(1, 1));
  CHECK(pos("u +\n  w") == std::pair(2, 3));
  CHECK(pos("sin(u") == std::pair(1, 6));
  CHECK(pos("sin") == std::pair(1, 1));
  CHECK(pos("u $ v") == std::pair(1, 3));
  CHECK(pos("") == std::pair(1, 1));
  CHECK_THROWS_AS(parse("sin(u, v)"), ParseError);
  CHECK_THROWS_AS(parse("u v"), ParseError);
  CHECK_THROWS_AS(parse("k*u"), ParseError);
  CHECK_NOTHROW(parse("k*u", {"k"}));
  CHECK_THROWS_AS(parse("u", {"sin"}), ConfigError);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval(parse("1/(u - 1)"), {{"u", 1}}), EvalError);
  CHECK_THROWS_AS(eval(parse("log(u)"), {{"u", -1}}), EvalError);
  CHECK_THROWS_AS(eval(parse("sqrt(u)"), {{"u", -1}}), EvalError);
  CHECK_THROWS_AS(eval(parse("u^0.5"), {{"u", -1}}), EvalError);
  CHECK_THROWS_AS(eval(parse("u + v"), {{"u", 1}}), EvalError);
}

TEST_CASE("print and parse round trip on random expressions") {
  for (int n = 0; n < 1000; ++n) {
    NodePtr a = parse(random_expr(1 + n % 4), {"a"});
    NodePtr b = parse(print(a), {"a"});
    REQUIRE_MESSAGE(equal(a, b), print(a));
    REQUIRE(print(b) == print(a));
  }
}

TEST_CASE("dual numbers agree with finite differences") {
  // 4th-order central stencils with step 1e-3 as the reference
  const double h = 1e-3;
  double worst = 0;
  std::uniform_real_distribution<double> U(-1, 1);
  for (int n = 0; n < 1000; ++n) {
    NodePtr e = parse(random_expr(1 + n % 3), {"a"});
    double u = U(rng), v = U(rng);
    Env env{{{"u", u}, {"v", v}, {"a", 0.7}}, "u", "v"};
    Jet2 j = eval_jet2(e, env);
    auto f = [&](double du, double dv) { return at(e, u + du, v + dv); };
    auto d1 = [&](auto g) { return (-g(2 * h) + 8 * g(h) - 8 * g(-h) + g(-2 * h)) / (12 * h); };
    auto d2 = [&](auto g) {
      return (-g(2 * h) + 16 * g(h) - 30 * g(0.0) + 16 * g(-h) - g(-2 * h)) / (12 * h * h);
    };
    double fu = d1([&](double s) { return f(s, 0); });
    double fv = d1([&](double s) { return f(0, s); });
    double fuu = d2([&](double s) { return f(s, 0); });
    double fvv = d2([&](double s) { return f(0, s); });
    double fuv = d1([&](double s) { return d1([&](double t) { return f(s, t); }); });
    double scale = std::max(1.0, std::abs(j.val));
    worst = std::max({worst, std::abs(j.d1 - fu) / scale, std::abs(j.d2 - fv) / scale,
                      std::abs(j.d11 - fuu) / scale, std::abs(j.d22 - fvv) / scale,
                      std::abs(j.d12 - fuv) / scale});
    REQUIRE(j.val == doctest::Approx(f(0, 0)).epsilon(1e-14));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("expression charts reproduce the analytic catalog charts") {
  std::uniform_real_distribution<double> U(0, 1);
  for (const auto& e : catalog_entries()) {
    if (e.components.empty()) continue;
    CAPTURE(e.id);
    Immersion a = catalog_immersion(e.id);
    Immersion b = immersion_from_expressions(e.id, e.ambient_dim, e.components, e.defaults,
                                             a.domain());
    const Domain& d = a.domain();
    double worst = 0;
    for (int n = 0; n < 50; ++n) {
      double u = d.u0 + d.width() * U(rng), v = d.v0 + d.height() * U(rng);
      SurfaceJet x = a.jet(u, v), y = b.jet(u, v);
      worst = std::max({worst, (x.x - y.x).norm(), (x.xu - y.xu).norm(), (x.xv - y.xv).norm(),
                        (x.xuu - y.xuu).norm(), (x.xuv - y.xuv).norm(), (x.xvv - y.xvv).norm()});
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("config documents") {
  const char* good = R"({"name": "plane", "ambient_dim": 4,
    "components": ["u", "v", "c*u", "0"], "params": {"c": 2},
    "domain": [[0, 1], [0, 2]],
    "periods": [{"name": "period-u", "coordinate": "u", "period": 1}]})";
  Immersion f = immersion_from_config_text(good);
  CHECK(f.id() == "plane");
  CHECK(f.position(0.5, 1)[2] == 1.0);
  CHECK(f.jet(0.5, 1).xu[2] == 2.0);
  CHECK(f.periods().size() == 1);
  CHECK(f.domain().v1 == 2);
  CHECK_THROWS_AS(immersion_from_config_text("{"), ConfigError);
  CHECK_THROWS_AS(immersion_from_config_text(R"({"name": "x"})"), ConfigError);
  CHECK_THROWS_AS(immersion_from_config_text(
                      R"({"name": "x", "ambient_dim": 4, "components": ["u", "v", "w", "0"],
                          "params": {}, "domain": [[0, 1], [0, 1]]})"),
                  ParseError);
  CHECK_THROWS_AS(immersion_from_config_text(
                      R"({"name": "x", "ambient_dim": 4, "components": ["u", "v"],
                          "params": {}, "domain": [[0, 1], [0, 1]]})"),
                  ConfigError);
  CHECK_THROWS_AS(immersion_from_config_text(
                      R"({"name": "x", "ambient_dim": 4, "components": ["u", "v", "0", "0"],
                          "params": {}, "domain": [[1, 0], [0, 1]]})"),
                  ConfigError);
  CHECK_THROWS_AS(immersion_from_config_file("/nonexistent.json"), ConfigError);
}
