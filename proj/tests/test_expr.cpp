#include <doctest.h>

#include <functional>
#include <random>

#include "gzkit/errors.hpp"
#include "gzkit/expr.hpp"

using namespace gzkit;

namespace {

RationalFunction v(int i, int j) { return RationalFunction::var(VarId::x(i, j)); }

struct Node {
  char op = 0;  // 0 leaf, '+', '-', '*', '/', '^', 'n' (negation)
  std::string leaf;
  RationalFunction value;
  std::vector<Node> kids;
  int exponent = 0;
};

int prec(const Node& n) {
  switch (n.op) {
    case '+': case '-': return 1;
    case '*': case '/': return 2;
    case 'n': return 3;
    case '^': return 4;
    default: return 5;
  }
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

// minimal parentheses under the documented precedence and left associativity
std::string render_min(const Node& n) {
  if (n.op == 0) return n.leaf;
  if (n.op == 'n') {
    std::string k = render_min(n.kids[0]);
    return "-" + (prec(n.kids[0]) < 3 ? wrap(k) : k);
  }
  if (n.op == '^') {
    std::string k = render_min(n.kids[0]);
    return (prec(n.kids[0]) < 5 ? wrap(k) : k) + "^" + std::to_string(n.exponent);
  }
  std::string a = render_min(n.kids[0]);
  std::string b = render_min(n.kids[1]);
  if (prec(n.kids[0]) < prec(n)) a = wrap(a);
  if (prec(n.kids[1]) <= prec(n)) b = wrap(b);
  return a + n.op + b;
}

std::string render_full(const Node& n) {
  if (n.op == 0) return n.leaf;
  if (n.op == 'n') return "(-" + render_full(n.kids[0]) + ")";
  if (n.op == '^') return "(" + render_full(n.kids[0]) + ")^" + std::to_string(n.exponent);
  return "(" + render_full(n.kids[0]) + n.op + render_full(n.kids[1]) + ")";
}

Node random_node(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = depth <= 0 ? 0 : pick(rng);
  Node n;
  if (r <= 2) {
    int kind = pick(rng) % 3;
    if (kind == 0) {
      int c = 1 + pick(rng);
      n.leaf = std::to_string(c);
      n.value = RationalFunction(c);
    } else if (kind == 1) {
      int j = 1 + pick(rng) % 2;
      n.leaf = "x[1," + std::to_string(j) + "]";
      n.value = v(1, j);
    } else {
      n.leaf = "z[1]";
      n.value = RationalFunction::var(VarId::param(1));
    }
    return n;
  }
  static const char ops[] = "+-*/^n+-*";
  n.op = ops[r - 1];
  n.kids.push_back(random_node(rng, depth - 1));
  RationalFunction a = n.kids[0].value;
  if (n.op == 'n') {
    n.value = -a;
  } else if (n.op == '^') {
    n.exponent = pick(rng) % 3;
    n.value = RationalFunction(1);
    for (int k = 0; k < n.exponent; ++k) n.value = n.value * a;
  } else {
    n.kids.push_back(random_node(rng, depth - 1));
    const RationalFunction& b = n.kids[1].value;
    if (n.op == '/' && b.is_zero()) return random_node(rng, depth);
    n.value = n.op == '+' ? a + b : n.op == '-' ? a - b : n.op == '*' ? a * b : a / b;
  }
  return n;
}

}  // namespace

TEST_CASE("parse_expr examples") {
  Composition lambda({2, 1});
  CHECK(parse_expr("x[1,1]+x[1,2]", lambda) == v(1, 1) + v(1, 2));
  CHECK(parse_expr("(x[1,1]^2 - x[1,2]^2)/(x[1,1]-x[1,2])", lambda) == v(1, 1) + v(1, 2));
  CHECK_THROWS_AS(parse_expr("x[3,1]", lambda), NameError);
  CHECK_THROWS_AS(parse_expr("y+1", lambda), NameError);
  CHECK(parse_expr("x[3,1]") == v(3, 1));
  CHECK(parse_expr("-x[1,1]^2") == -(v(1, 1) * v(1, 1)));
  CHECK(parse_expr("2^-1") == RationalFunction(Rational(1, 2)));
  CHECK(parse_expr("1/2*x[1,1]") == RationalFunction(Rational(1, 2)) * v(1, 1));
  CHECK(parse_expr("1-2-3") == RationalFunction(-4));
  CHECK(parse_expr("12/4/3") == RationalFunction(1));
  CHECK_THROWS_AS(parse_expr("1/(x[1,1]-x[1,1])"), DivisionByZero);
  CHECK(parse_polynomial("x[1,1]*z[2]", lambda).render() == "z[2]*x[1,1]");
  CHECK_THROWS_AS(parse_polynomial("1/x[1,1]", lambda), ValidationError);

  try {
    parse_expr("x[1,1] + * 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_expr("(x[1,1]"), ParseError);
  CHECK_THROWS_AS(parse_expr("x[1 1]"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("1 2"), ParseError);
}

TEST_CASE("render then parse is the identity on canonical forms") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Node n = random_node(rng, 4);
    RationalFunction f = n.value;
    CHECK(parse_expr(f.render()) == f);
  }
}

TEST_CASE("grammar agrees with a reference derivation") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Node n = random_node(rng, 4);
    CHECK(parse_expr(render_full(n)) == n.value);
    CHECK(parse_expr(render_min(n)) == n.value);
  }
}
