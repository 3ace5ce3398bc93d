#include "hyperfront/holo/expr.hpp"

#include <cstdio>
#include <string>

#include "hyperfront/error.hpp"

namespace hyperfront::holo {

struct HoloExpr::Node {
  Kind kind = Kind::Constant;
  Complex value{};
  int exponent = 0;
  HoloExpr lhs_child;
  HoloExpr rhs_child;
};

HoloExpr::HoloExpr() : node_(nullptr) {}

HoloExpr HoloExpr::constant(Complex c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = c;
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  return HoloExpr(std::move(n));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> binary(HoloExpr::Kind kind, HoloExpr lhs, HoloExpr rhs) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->lhs_child = std::move(lhs);
  n->rhs_child = std::move(rhs);
  return n;
}

}  // namespace

HoloExpr HoloExpr::add(HoloExpr lhs, HoloExpr rhs) {
  return HoloExpr(binary<Node>(Kind::Add, std::move(lhs), std::move(rhs)));
}
HoloExpr HoloExpr::sub(HoloExpr lhs, HoloExpr rhs) {
  return HoloExpr(binary<Node>(Kind::Sub, std::move(lhs), std::move(rhs)));
}
HoloExpr HoloExpr::mul(HoloExpr lhs, HoloExpr rhs) {
  return HoloExpr(binary<Node>(Kind::Mul, std::move(lhs), std::move(rhs)));
}
HoloExpr HoloExpr::div(HoloExpr lhs, HoloExpr rhs) {
  return HoloExpr(binary<Node>(Kind::Div, std::move(lhs), std::move(rhs)));
}

HoloExpr HoloExpr::pow(HoloExpr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->lhs_child = std::move(base);
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::exp(HoloExpr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exp;
  n->lhs_child = std::move(arg);
  return HoloExpr(std::move(n));
}

// A default-constructed expression (null node) behaves as the constant 0.
HoloExpr::Kind HoloExpr::kind() const noexcept { return node_ ? node_->kind : Kind::Constant; }

Complex HoloExpr::constant_value() const {
  if (kind() != Kind::Constant) throw Error("constant_value() on a non-constant node");
  return node_ ? node_->value : Complex{};
}

int HoloExpr::exponent() const {
  if (kind() != Kind::Pow) throw Error("exponent() on a non-power node");
  return node_->exponent;
}

const HoloExpr& HoloExpr::lhs() const {
  switch (kind()) {
    case Kind::Constant:
    case Kind::Variable:
      throw Error("lhs() on a leaf node");
    default:
      return node_->lhs_child;
  }
}

const HoloExpr& HoloExpr::rhs() const {
  switch (kind()) {
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div:
      return node_->rhs_child;
    default:
      throw Error("rhs() on a non-binary node");
  }
}

bool operator==(const HoloExpr& a, const HoloExpr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using Kind = HoloExpr::Kind;
  switch (a.kind()) {
    case Kind::Constant: {
      const Complex va = a.node_ ? a.node_->value : Complex{};
      const Complex vb = b.node_ ? b.node_->value : Complex{};
      return va == vb;
    }
    case Kind::Variable:
      return true;
    case Kind::Pow:
      return a.node_->exponent == b.node_->exponent && a.node_->lhs_child == b.node_->lhs_child;
    case Kind::Exp:
      return a.node_->lhs_child == b.node_->lhs_child;
    default:
      return a.node_->lhs_child == b.node_->lhs_child && a.node_->rhs_child == b.node_->rhs_child;
  }
}

namespace {

Jet checked(Jet j, const char* op) {
  if (!is_finite(j.value) || !is_finite(j.deriv)) {
    throw EvalError(EvalError::Kind::NonFinite, std::string("non-finite result in ") + op);
  }
  return j;
}

Complex ipow(Complex b, int n) {
  // n >= 0; binary exponentiation
  Complex result{1.0, 0.0};
  unsigned k = static_cast<unsigned>(n);
  while (k != 0) {
    if (k & 1U) result *= b;
    b *= b;
    k >>= 1U;
  }
  return result;
}

Jet jet_rec(const HoloExpr& f, Complex z) {
  using Kind = HoloExpr::Kind;
  switch (f.kind()) {
    case Kind::Constant:
      return {f.constant_value(), Complex{0.0, 0.0}};
    case Kind::Variable:
      return {z, Complex{1.0, 0.0}};
    case Kind::Add: {
      const Jet a = jet_rec(f.lhs(), z);
      const Jet b = jet_rec(f.rhs(), z);
      return checked({a.value + b.value, a.deriv + b.deriv}, "addition");
    }
    case Kind::Sub: {
      const Jet a = jet_rec(f.lhs(), z);
      const Jet b = jet_rec(f.rhs(), z);
      return checked({a.value - b.value, a.deriv - b.deriv}, "subtraction");
    }
    case Kind::Mul: {
      const Jet a = jet_rec(f.lhs(), z);
      const Jet b = jet_rec(f.rhs(), z);
      return checked({a.value * b.value, a.deriv * b.value + a.value * b.deriv}, "product");
    }
    case Kind::Div: {
      const Jet a = jet_rec(f.lhs(), z);
      const Jet b = jet_rec(f.rhs(), z);
      if (b.value == Complex{}) {
        throw EvalError(EvalError::Kind::DivisionByZero, "division by zero");
      }
      const Complex q = a.value / b.value;
      return checked({q, (a.deriv - q * b.deriv) / b.value}, "quotient");
    }
    case Kind::Pow: {
      const Jet b = jet_rec(f.lhs(), z);
      const int n = f.exponent();
      if (n == 0) return {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
      if (n > 0) {
        const Complex lower = ipow(b.value, n - 1);
        return checked({lower * b.value, static_cast<double>(n) * lower * b.deriv}, "power");
      }
      if (b.value == Complex{}) {
        throw EvalError(EvalError::Kind::DivisionByZero, "negative power of zero");
      }
      const Complex inv = 1.0 / b.value;
      const Complex lower = ipow(inv, -n + 1);  // b^{n-1}
      return checked({lower * b.value, static_cast<double>(n) * lower * b.deriv}, "power");
    }
    case Kind::Exp: {
      const Jet a = jet_rec(f.lhs(), z);
      const Complex e = std::exp(a.value);
      return checked({e, e * a.deriv}, "exp");
    }
  }
  throw Error("unreachable expression kind");
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_rec(const HoloExpr& f, std::string& out) {
  using Kind = HoloExpr::Kind;
  switch (f.kind()) {
    case Kind::Constant: {
      const Complex c = f.constant_value();
      if (c.imag() == 0.0) {
        out += format_real(c.real());
      } else if (c.real() == 0.0) {
        out += "(" + format_real(c.imag()) + "*i)";
      } else {
        out += "(" + format_real(c.real()) + " + " + format_real(c.imag()) + "*i)";
      }
      return;
    }
    case Kind::Variable:
      out += 'z';
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      const int idx = static_cast<int>(f.kind()) - static_cast<int>(Kind::Add);
      out += '(';
      print_rec(f.lhs(), out);
      out += ops[idx];
      print_rec(f.rhs(), out);
      out += ')';
      return;
    }
    case Kind::Pow:
      out += '(';
      print_rec(f.lhs(), out);
      out += ")^";
      out += std::to_string(f.exponent());
      return;
    case Kind::Exp:
      out += "exp(";
      print_rec(f.lhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

Complex HoloExpr::operator()(Complex z) const { return eval_jet(*this, z).value; }

Jet eval_jet(const HoloExpr& f, Complex z) { return jet_rec(f, z); }

std::string to_string(const HoloExpr& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

}  // namespace hyperfront::holo
