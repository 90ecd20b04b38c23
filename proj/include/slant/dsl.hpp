#pragma once

#include "slant/errors.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slant {

// Value with first and second partials in two seeded variables.
struct Jet2 {
  double val = 0;
  double d1 = 0, d2 = 0;
  double d11 = 0, d12 = 0, d22 = 0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet2 first(double x) { return {x, 1, 0, 0, 0, 0}; }
  static Jet2 second(double x) { return {x, 0, 1, 0, 0, 0}; }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
// g(a) given g, g', g'' at a.val
Jet2 chain(const Jet2& a, double g, double g1, double g2);

namespace dsl {

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct ParseError : ConfigError {
  ParseError(const std::string& msg, SourcePos p);
  std::string detail;  // message without the position suffix
  SourcePos pos;
};

struct EvalError : NumericError {
  using NumericError::NumericError;
};

struct Node {
  enum class Kind { Number, Variable, Negate, Binary, Call };
  Kind kind;
  double number = 0;
  std::string name;  // variable or function name
  char op = 0;       // + - * / ^
  std::vector<std::shared_ptr<const Node>> args;
  SourcePos pos;
};
using NodePtr = std::shared_ptr<const Node>;

// Variables u, v, s, t and the constant pi are always known; further
// identifiers must be listed in params.
NodePtr parse(std::string_view text, const std::set<std::string>& params = {});

std::string print(const NodePtr& n);
bool equal(const NodePtr& a, const NodePtr& b);

struct Env {
  std::map<std::string, double> values;
  std::string first;   // variable seeded as d1
  std::string second;  // variable seeded as d2
};

Jet2 eval_jet2(const NodePtr& n, const Env& env);
double eval(const NodePtr& n, const std::map<std::string, double>& values);

const std::set<std::string>& function_names();

}  // namespace dsl
}  // namespace slant
