#include "fracgruss/expression.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>

#include "fracgruss/errors.hpp"

namespace fracgruss {

std::string format_double(double value) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace detail {

enum class Kind { Constant, Variable, Power, Sum, Product, Scale, Sin, Cos, Exp };

struct Expr {
  Kind kind;
  double value = 0.0;  // Constant c, Power exponent, or Scale factor
  std::vector<FunctionSpec> args;

  double eval(double tau) const {
    double r = 0.0;
    switch (kind) {
      case Kind::Constant:
        r = value;
        break;
      case Kind::Variable:
        r = tau;
        break;
      case Kind::Power:
        r = std::pow(tau, value);
        break;
      case Kind::Sum:
        for (const auto& a : args) r += a(tau);
        break;
      case Kind::Product:
        r = 1.0;
        for (const auto& a : args) r *= a(tau);
        break;
      case Kind::Scale:
        r = value * args[0](tau);
        break;
      case Kind::Sin:
        r = std::sin(args[0](tau));
        break;
      case Kind::Cos:
        r = std::cos(args[0](tau));
        break;
      case Kind::Exp:
        r = std::exp(args[0](tau));
        break;
    }
    if (!std::isfinite(r)) throw EvalError(serialize(), tau);
    return r;
  }

  void serialize_to(std::string& out) const {
    switch (kind) {
      case Kind::Constant:
        out += "(const ";
        out += format_double(value);
        out += ')';
        return;
      case Kind::Variable:
        out += "(var t)";
        return;
      case Kind::Power:
        out += "(pow t ";
        out += format_double(value);
        out += ')';
        return;
      case Kind::Sum:
      case Kind::Product:
        out += kind == Kind::Sum ? "(add" : "(mul";
        for (const auto& a : args) {
          out += ' ';
          a.node_->serialize_to(out);
        }
        out += ')';
        return;
      case Kind::Scale:
        out += "(scale ";
        out += format_double(value);
        out += ' ';
        args[0].node_->serialize_to(out);
        out += ')';
        return;
      case Kind::Sin:
      case Kind::Cos:
      case Kind::Exp:
        out += kind == Kind::Sin ? "(sin " : kind == Kind::Cos ? "(cos " : "(exp ";
        args[0].node_->serialize_to(out);
        out += ')';
        return;
    }
  }

  std::string serialize() const {
    std::string out;
    serialize_to(out);
    return out;
  }

  bool equals(const Expr& other) const {
    if (kind != other.kind || args.size() != other.args.size()) return false;
    if (std::bit_cast<std::uint64_t>(value) != std::bit_cast<std::uint64_t>(other.value))
      return false;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!(args[i] == other.args[i])) return false;
    }
    return true;
  }
};

namespace {

std::shared_ptr<const Expr> make(Kind kind, double value, std::vector<FunctionSpec> args) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->value = value;
  e->args = std::move(args);
  return e;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

// --- canonical prefix-form parser ------------------------------------------

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + std::string(text) +
                     "'");
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string_view token() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    if (pos == start) fail("expected a token");
    return text.substr(start, pos - start);
  }

  double number() {
    auto tok = token();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      fail("expected a number, got '" + std::string(tok) + "'");
    }
    if (!std::isfinite(v)) fail("number must be finite");
    return v;
  }

  bool at_close() {
    skip_ws();
    return pos < text.size() && text[pos] == ')';
  }

  FunctionSpec expr() {
    expect('(');
    auto head = token();
    FunctionSpec result = [&] {
      if (head == "const") return FunctionSpec::constant(number());
      if (head == "var") {
        if (token() != "t") fail("the only variable is 't'");
        return FunctionSpec::variable();
      }
      if (head == "pow") {
        if (token() != "t") fail("pow applies to the variable 't'");
        return FunctionSpec::power(number());
      }
      if (head == "add" || head == "mul") {
        std::vector<FunctionSpec> args;
        while (!at_close()) args.push_back(expr());
        if (args.size() < 2) fail(std::string(head) + " needs at least two arguments");
        return head == "add" ? FunctionSpec::sum(std::move(args))
                             : FunctionSpec::product(std::move(args));
      }
      if (head == "scale") {
        double c = number();
        return FunctionSpec::scale(c, expr());
      }
      if (head == "sin") return FunctionSpec::sin_of(expr());
      if (head == "cos") return FunctionSpec::cos_of(expr());
      if (head == "exp") return FunctionSpec::exp_of(expr());
      fail("unknown operator '" + std::string(head) + "'");
    }();
    expect(')');
    return result;
  }
};

}  // namespace
}  // namespace detail

using detail::Expr;
using detail::Kind;

FunctionSpec FunctionSpec::constant(double c) {
  detail::require_finite(c, "constant");
  return FunctionSpec(detail::make(Kind::Constant, c, {}));
}

FunctionSpec FunctionSpec::variable() { return FunctionSpec(detail::make(Kind::Variable, 0.0, {})); }

FunctionSpec FunctionSpec::power(double exponent) {
  detail::require_finite(exponent, "power exponent");
  return FunctionSpec(detail::make(Kind::Power, exponent, {}));
}

FunctionSpec FunctionSpec::sum(std::vector<FunctionSpec> terms) {
  if (terms.size() < 2) throw DomainError("sum needs at least two terms");
  return FunctionSpec(detail::make(Kind::Sum, 0.0, std::move(terms)));
}

FunctionSpec FunctionSpec::product(std::vector<FunctionSpec> factors) {
  if (factors.size() < 2) throw DomainError("product needs at least two factors");
  return FunctionSpec(detail::make(Kind::Product, 0.0, std::move(factors)));
}

FunctionSpec FunctionSpec::scale(double c, FunctionSpec inner) {
  detail::require_finite(c, "scale factor");
  return FunctionSpec(detail::make(Kind::Scale, c, {std::move(inner)}));
}

FunctionSpec FunctionSpec::sin_of(FunctionSpec inner) {
  return FunctionSpec(detail::make(Kind::Sin, 0.0, {std::move(inner)}));
}

FunctionSpec FunctionSpec::cos_of(FunctionSpec inner) {
  return FunctionSpec(detail::make(Kind::Cos, 0.0, {std::move(inner)}));
}

FunctionSpec FunctionSpec::exp_of(FunctionSpec inner) {
  return FunctionSpec(detail::make(Kind::Exp, 0.0, {std::move(inner)}));
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  detail::Parser p{text};
  FunctionSpec f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after expression");
  return f;
}

double FunctionSpec::operator()(double tau) const { return node_->eval(tau); }

std::string FunctionSpec::serialize() const { return node_->serialize(); }

bool FunctionSpec::operator==(const FunctionSpec& other) const {
  return node_ == other.node_ || node_->equals(*other.node_);
}

bool FunctionSpec::as_monomial(double& coefficient, double& exponent) const {
  switch (node_->kind) {
    case Kind::Constant:
      coefficient = node_->value;
      exponent = 0.0;
      return true;
    case Kind::Variable:
      coefficient = 1.0;
      exponent = 1.0;
      return true;
    case Kind::Power:
      coefficient = 1.0;
      exponent = node_->value;
      return true;
    case Kind::Scale: {
      double c = 0.0, e = 0.0;
      if (!node_->args[0].as_monomial(c, e)) return false;
      coefficient = node_->value * c;
      exponent = e;
      return true;
    }
    case Kind::Product: {
      coefficient = 1.0;
      exponent = 0.0;
      for (const auto& a : node_->args) {
        double c = 0.0, e = 0.0;
        if (!a.as_monomial(c, e)) return false;
        coefficient *= c;
        exponent += e;
      }
      return true;
    }
    default:
      return false;
  }
}

FunctionSpec operator+(const FunctionSpec& a, const FunctionSpec& b) {
  return FunctionSpec::sum({a, b});
}

FunctionSpec operator-(const FunctionSpec& a, const FunctionSpec& b) {
  return FunctionSpec::sum({a, FunctionSpec::scale(-1.0, b)});
}

FunctionSpec operator*(const FunctionSpec& a, const FunctionSpec& b) {
  return FunctionSpec::product({a, b});
}

FunctionSpec operator*(double c, const FunctionSpec& f) { return FunctionSpec::scale(c, f); }

void BoundedFunction::certify(double x, std::size_t grid) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("certify requires x > 0");
  if (grid == 0) throw DomainError("certification grid must be nonempty");
  for (std::size_t j = 1; j <= grid; ++j) {
    double tau = x * static_cast<double>(j) / static_cast<double>(grid);
    double lo = lower(tau);
    double mid = fn(tau);
    double hi = upper(tau);
    double slop =
        1e-12 * std::max({1.0, std::abs(lo), std::abs(mid), std::abs(hi)});
    if (lo > mid + slop || mid > hi + slop) {
      throw PreconditionError("bounds violated at t=" + format_double(tau) + ": lower=" +
                              format_double(lo) + " fn=" + format_double(mid) +
                              " upper=" + format_double(hi));
    }
  }
}

ConstantBounds::ConstantBounds(double m_, double M_) : m(m_), M(M_) {
  if (!std::isfinite(m) || !std::isfinite(M) || m > M) {
    throw DomainError("ConstantBounds requires finite m <= M");
  }
}

void certify_constant_bounds(const FunctionSpec& f, const ConstantBounds& b, double x,
                             std::size_t grid) {
  BoundedFunction bf{f, FunctionSpec::constant(b.m), FunctionSpec::constant(b.M)};
  bf.certify(x, grid);
}

ConstantBounds grid_extrema(const FunctionSpec& f, double x, std::size_t grid) {
  if (!(x > 0.0) || grid == 0) throw DomainError("grid_extrema requires x > 0 and a grid");
  double lo = f(x / static_cast<double>(grid));
  double hi = lo;
  for (std::size_t j = 2; j <= grid; ++j) {
    double v = f(x * static_cast<double>(j) / static_cast<double>(grid));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return ConstantBounds(lo, hi);
}

}  // namespace fracgruss
