#include "slant/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace slant {

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.val + b.val, a.d1 + b.d1,   a.d2 + b.d2,
          a.d11 + b.d11, a.d12 + b.d12, a.d22 + b.d22};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.val - b.val, a.d1 - b.d1,   a.d2 - b.d2,
          a.d11 - b.d11, a.d12 - b.d12, a.d22 - b.d22};
}

Jet2 operator-(const Jet2& a) {
  return {-a.val, -a.d1, -a.d2, -a.d11, -a.d12, -a.d22};
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.val * b.val,
          a.d1 * b.val + a.val * b.d1,
          a.d2 * b.val + a.val * b.d2,
          a.d11 * b.val + 2 * a.d1 * b.d1 + a.val * b.d11,
          a.d12 * b.val + a.d1 * b.d2 + a.d2 * b.d1 + a.val * b.d12,
          a.d22 * b.val + 2 * a.d2 * b.d2 + a.val * b.d22};
}

Jet2 chain(const Jet2& a, double g, double g1, double g2) {
  return {g,
          g1 * a.d1,
          g1 * a.d2,
          g2 * a.d1 * a.d1 + g1 * a.d11,
          g2 * a.d1 * a.d2 + g1 * a.d12,
          g2 * a.d2 * a.d2 + g1 * a.d22};
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  double x = b.val;
  return a * chain(b, 1 / x, -1 / (x * x), 2 / (x * x * x));
}

namespace dsl {

ParseError::ParseError(const std::string& msg, SourcePos p)
    : ConfigError(msg + " at line " + std::to_string(p.line) + ", column " +
                  std::to_string(p.col)),
      detail(msg),
      pos(p) {}

const std::set<std::string>& function_names() {
  static const std::set<std::string> names{"sin",  "cos",  "tan",  "exp",
                                           "log",  "sqrt", "asin", "acos",
                                           "atan", "sinh", "cosh"};
  return names;
}

namespace {

const std::set<std::string> kVariables{"u", "v", "s", "t"};

struct Token {
  enum class Kind { Number, Ident, Op, LParen, RParen, Comma, End } kind;
  std::string text;
  double number = 0;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (i_ >= src_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = src_.data() + i_;
      char* end = nullptr;
      t.number = std::strtod(begin, &end);
      std::size_t len = static_cast<std::size_t>(end - begin);
      if (len == 0) throw ParseError("malformed number", pos_);
      t.kind = Token::Kind::Number;
      t.text = std::string(begin, len);
      advance(len);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(src_.substr(i_, j - i_));
      advance(j - i_);
      return t;
    }
    advance(1);
    t.text = std::string(1, c);
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
        t.kind = Token::Kind::Op;
        return t;
      case '(':
        t.kind = Token::Kind::LParen;
        return t;
      case ')':
        t.kind = Token::Kind::RParen;
        return t;
      case ',':
        t.kind = Token::Kind::Comma;
        return t;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", t.pos);
    }
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
      advance(1);
  }
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i_) {
      if (src_[i_] == '\n') {
        ++pos_.line;
        pos_.col = 1;
      } else {
        ++pos_.col;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::string_view src, const std::set<std::string>& params)
      : lex_(src), params_(params) {
    tok_ = lex_.next();
  }

  NodePtr parse_all() {
    NodePtr e = expr();
    if (tok_.kind != Token::Kind::End)
      throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
    return e;
  }

 private:
  void shift() { tok_ = lex_.next(); }
  bool at_op(char c) const {
    return tok_.kind == Token::Kind::Op && tok_.text[0] == c;
  }

  static NodePtr binary(char op, NodePtr a, NodePtr b, SourcePos p) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    n->pos = p;
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (at_op('+') || at_op('-')) {
      char op = tok_.text[0];
      SourcePos p = tok_.pos;
      shift();
      lhs = binary(op, lhs, term(), p);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (at_op('*') || at_op('/')) {
      char op = tok_.text[0];
      SourcePos p = tok_.pos;
      shift();
      lhs = binary(op, lhs, unary(), p);
    }
    return lhs;
  }

  NodePtr unary() {
    if (at_op('-')) {
      SourcePos p = tok_.pos;
      shift();
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Negate;
      n->args = {unary()};
      n->pos = p;
      return n;
    }
    if (at_op('+')) {
      shift();
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (at_op('^')) {
      SourcePos p = tok_.pos;
      shift();
      return binary('^', base, unary(), p);  // right associative
    }
    return base;
  }

  NodePtr primary() {
    Token t = tok_;
    switch (t.kind) {
      case Token::Kind::Number: {
        shift();
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Number;
        n->number = t.number;
        n->pos = t.pos;
        return n;
      }
      case Token::Kind::LParen: {
        shift();
        NodePtr e = expr();
        if (tok_.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", tok_.pos);
        shift();
        return e;
      }
      case Token::Kind::Ident: {
        shift();
        if (tok_.kind == Token::Kind::LParen) return call(t);
        if (function_names().count(t.text))
          throw ParseError("function '" + t.text + "' needs an argument", t.pos);
        if (!kVariables.count(t.text) && !params_.count(t.text) && t.text != "pi")
          throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Variable;
        n->name = t.text;
        n->pos = t.pos;
        return n;
      }
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  NodePtr call(const Token& name) {
    if (!function_names().count(name.text))
      throw ParseError("unknown function '" + name.text + "'", name.pos);
    shift();  // '('
    std::vector<NodePtr> args;
    if (tok_.kind != Token::Kind::RParen) {
      args.push_back(expr());
      while (tok_.kind == Token::Kind::Comma) {
        shift();
        args.push_back(expr());
      }
    }
    if (tok_.kind != Token::Kind::RParen) throw ParseError("expected ')'", tok_.pos);
    shift();
    if (args.size() != 1)
      throw ParseError("function '" + name.text + "' takes 1 argument, got " +
                           std::to_string(args.size()),
                       name.pos);
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->name = name.text;
    n->args = std::move(args);
    n->pos = name.pos;
    return n;
  }

  Lexer lex_;
  const std::set<std::string>& params_;
  Token tok_;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Binary:
      if (n.op == '+' || n.op == '-') return 1;
      if (n.op == '*' || n.op == '/') return 2;
      return 4;
    case Node::Kind::Negate:
      return 3;
    default:
      return 5;
  }
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string wrap(const NodePtr& n, bool paren) {
  std::string s = print(n);
  return paren ? "(" + s + ")" : s;
}

std::string where(const Node& n) {
  return " (line " + std::to_string(n.pos.line) + ", column " +
         std::to_string(n.pos.col) + ")";
}

Jet2 apply_function(const Node& n, const Jet2& a) {
  double x = a.val;
  auto fail = [&](const char* why) {
    throw EvalError(n.name + ": " + why + where(n));
  };
  if (n.name == "sin") return chain(a, std::sin(x), std::cos(x), -std::sin(x));
  if (n.name == "cos") return chain(a, std::cos(x), -std::sin(x), -std::cos(x));
  if (n.name == "tan") {
    double c = std::cos(x);
    if (std::abs(c) < 1e-300) fail("pole");
    double t = std::tan(x), sec2 = 1 / (c * c);
    return chain(a, t, sec2, 2 * sec2 * t);
  }
  if (n.name == "exp") {
    double e = std::exp(x);
    return chain(a, e, e, e);
  }
  if (n.name == "log") {
    if (x <= 0) fail("argument must be positive");
    return chain(a, std::log(x), 1 / x, -1 / (x * x));
  }
  if (n.name == "sqrt") {
    if (x <= 0) fail("argument must be positive");
    double r = std::sqrt(x);
    return chain(a, r, 0.5 / r, -0.25 / (r * x));
  }
  if (n.name == "asin" || n.name == "acos") {
    if (std::abs(x) >= 1) fail("argument must lie in (-1, 1)");
    double w = 1 - x * x, d = 1 / std::sqrt(w), dd = x / (w * std::sqrt(w));
    if (n.name == "asin") return chain(a, std::asin(x), d, dd);
    return chain(a, std::acos(x), -d, -dd);
  }
  if (n.name == "atan") {
    double w = 1 + x * x;
    return chain(a, std::atan(x), 1 / w, -2 * x / (w * w));
  }
  if (n.name == "sinh") return chain(a, std::sinh(x), std::cosh(x), std::sinh(x));
  if (n.name == "cosh") return chain(a, std::cosh(x), std::sinh(x), std::cosh(x));
  fail("unknown function");
  return {};
}

bool is_constant(const Jet2& j) {
  return j.d1 == 0 && j.d2 == 0 && j.d11 == 0 && j.d12 == 0 && j.d22 == 0;
}

Jet2 power(const Node& n, const Jet2& a, const Jet2& b) {
  double x = a.val;
  if (is_constant(b)) {
    double c = b.val;
    bool integral = c == std::floor(c);
    if (x < 0 && !integral)
      throw EvalError("^: negative base with non-integer exponent" + where(n));
    if (x == 0 && c < 2 && !(c == 0 || c == 1))
      throw EvalError("^: not differentiable at zero" + where(n));
    if (c == 0) return Jet2::constant(1);
    if (c == 1) return a;
    return chain(a, std::pow(x, c), c * std::pow(x, c - 1),
                 c * (c - 1) * std::pow(x, c - 2));
  }
  if (x <= 0)
    throw EvalError("^: variable exponent needs a positive base" + where(n));
  Jet2 l = chain(a, std::log(x), 1 / x, -1 / (x * x));
  Jet2 p = b * l;
  double e = std::exp(p.val);
  return chain(p, e, e, e);
}

}  // namespace

NodePtr parse(std::string_view text, const std::set<std::string>& params) {
  for (const auto& p : params) {
    if (kVariables.count(p) || function_names().count(p) || p == "pi")
      throw ConfigError("parameter name '" + p + "' is reserved");
  }
  return Parser(text, params).parse_all();
}

std::string print(const NodePtr& n) {
  switch (n->kind) {
    case Node::Kind::Number:
      return format_number(n->number);
    case Node::Kind::Variable:
      return n->name;
    case Node::Kind::Negate: {
      const NodePtr& a = n->args[0];
      return "-" + wrap(a, precedence(*a) < 4);
    }
    case Node::Kind::Call:
      return n->name + "(" + print(n->args[0]) + ")";
    case Node::Kind::Binary: {
      const NodePtr& a = n->args[0];
      const NodePtr& b = n->args[1];
      int p = precedence(*n);
      std::string op = n->op == '^' ? "^" : std::string(" ") + n->op + " ";
      if (n->op == '^') {
        // base binds tighter than '^'; exponent is right associative
        return wrap(a, precedence(*a) <= 4) + op + wrap(b, precedence(*b) < 3);
      }
      bool left_paren = precedence(*a) < p;
      bool right_paren = precedence(*b) <= p && precedence(*b) != 3;
      if (precedence(*b) == 3) right_paren = true;
      return wrap(a, left_paren) + op + wrap(b, right_paren);
    }
  }
  return {};
}

bool equal(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Node::Kind::Number:
      return a->number == b->number;
    case Node::Kind::Variable:
      return a->name == b->name;
    case Node::Kind::Negate:
      return equal(a->args[0], b->args[0]);
    case Node::Kind::Call:
      return a->name == b->name && equal(a->args[0], b->args[0]);
    case Node::Kind::Binary:
      return a->op == b->op && equal(a->args[0], b->args[0]) &&
             equal(a->args[1], b->args[1]);
  }
  return false;
}

Jet2 eval_jet2(const NodePtr& n, const Env& env) {
  switch (n->kind) {
    case Node::Kind::Number:
      return Jet2::constant(n->number);
    case Node::Kind::Variable: {
      if (n->name == "pi") return Jet2::constant(M_PI);
      auto it = env.values.find(n->name);
      if (it == env.values.end())
        throw EvalError("unbound identifier '" + n->name + "'" + where(*n));
      if (n->name == env.first) return Jet2::first(it->second);
      if (n->name == env.second) return Jet2::second(it->second);
      return Jet2::constant(it->second);
    }
    case Node::Kind::Negate:
      return -eval_jet2(n->args[0], env);
    case Node::Kind::Call:
      return apply_function(*n, eval_jet2(n->args[0], env));
    case Node::Kind::Binary: {
      Jet2 a = eval_jet2(n->args[0], env);
      Jet2 b = eval_jet2(n->args[1], env);
      switch (n->op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b.val == 0) throw EvalError("division by zero" + where(*n));
          return a / b;
        default:
          return power(*n, a, b);
      }
    }
  }
  return {};
}

double eval(const NodePtr& n, const std::map<std::string, double>& values) {
  Env env;
  env.values = values;
  return eval_jet2(n, env).val;
}

}  // namespace dsl
}  // namespace slant
