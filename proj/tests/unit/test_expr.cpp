#include <doctest.h>

#include <random>

#include "jacobi/expr.hpp"

using namespace jacobi;

namespace {

using Node = std::shared_ptr<Expr>;

Node node(Expr::Kind kind) {
  auto n = std::make_shared<Expr>();
  n->kind = kind;
  return n;
}

struct RandomExpr {
  std::mt19937 rng;
  explicit RandomExpr(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Node atom(int depth) {
    const int choice = pick(0, depth > 0 ? 6 : 3);
    switch (choice) {
      case 0: {
        auto n = node(Expr::Kind::literal);
        n->value = mpq_class(pick(0, 12), pick(1, 3));
        n->value.canonicalize();
        return n;
      }
      case 1: return node(Expr::Kind::imaginary);
      case 2: return node(Expr::Kind::param_k);
      case 3:
      case 4: {
        static const std::vector<GeneratorSymbol> gens{
            GeneratorSymbol::make(GenKind::E),          GeneratorSymbol::make(GenKind::F),
            GeneratorSymbol::make(GenKind::H),          GeneratorSymbol::make(GenKind::e, false, 2),
            GeneratorSymbol::make(GenKind::f, false, 1), GeneratorSymbol::make(GenKind::Z, false, 1, 2),
            GeneratorSymbol::make(GenKind::E, true),    GeneratorSymbol::make(GenKind::f, true, 2),
            GeneratorSymbol::make(GenKind::Z, true, 2, 2)};
        auto n = node(Expr::Kind::generator);
        n->gen = gens[static_cast<std::size_t>(pick(0, static_cast<int>(gens.size()) - 1))];
        return n;
      }
      case 5: {
        auto n = node(Expr::Kind::group);
        n->children.push_back(sum(depth - 1));
        return n;
      }
      default: {
        auto n = node(Expr::Kind::commutator);
        n->children.push_back(sum(depth - 1));
        n->children.push_back(sum(depth - 1));
        return n;
      }
    }
  }

  Node factor(int depth) {
    Node a = atom(depth);
    if (pick(0, 4) != 0) return a;
    auto n = node(Expr::Kind::power);
    n->exponent = static_cast<unsigned>(pick(2, 4));
    n->children.push_back(a);
    return n;
  }

  Node term(int depth) {
    const int count = pick(1, 3);
    if (count == 1) return factor(depth);
    auto n = node(Expr::Kind::product);
    for (int i = 0; i < count; ++i) n->children.push_back(factor(depth));
    return n;
  }

  Node sum(int depth) {
    const int count = pick(1, 3);
    const bool lead_minus = pick(0, 3) == 0;
    if (count == 1 && !lead_minus) return term(depth);
    auto n = node(Expr::Kind::sum);
    for (int i = 0; i < count; ++i) {
      n->children.push_back(term(depth));
      n->negated.push_back(i == 0 ? lead_minus : pick(0, 1) == 1);
    }
    return n;
  }
};

ParseError::Kind error_kind(const std::string& text, unsigned N) {
  try {
    parse_element(text, N, ParamScalar::param(Param::k));
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ParseError::Kind::syntax;
}

UeaElement el(const std::string& text, unsigned N = 1) { return parse_element(text, N, ParamScalar::param(Param::k)); }

}  // namespace

TEST_CASE("expr: render and parse round trip on random trees") {
  RandomExpr gen(17);
  for (int t = 0; t < 400; ++t) {
    const Node e = gen.sum(3);
    const std::string text = render(*e);
    INFO(text);
    const ExprPtr back = parse(text);
    CHECK(same_shape(*e, *back));
    CHECK(render(*back) == text);
  }
}

TEST_CASE("expr: spacing and juxtaposition do not change the tree") {
  CHECK(same_shape(*parse("E F"), *parse("E*F")));
  CHECK(same_shape(*parse("EF"), *parse("E*F")));
  CHECK(same_shape(*parse("2 e1^2"), *parse("2*e1^2")));
  CHECK(render(*parse("[tE,tF]")) == "[tE, tF]");
  CHECK(render(*parse("-E+F-   H")) == "-E + F - H");
}

TEST_CASE("expr: evaluation") {
  CHECK(el("E F").str() == "H + F*E");
  CHECK(el("e1 f1 - f1 e1") == el("-2 Z11"));
  CHECK(el("[E, F]") == el("H"));
  CHECK(el("[tE, tF]") == el("tH"));
  CHECK(el("(E + F)^2") == el("E^2 + E F + F E + F^2"));
  CHECK(el("Z21", 2) == el("Z12", 2));
  CHECK(el("k E - E k").is_zero());
  CHECK(el("i*i") == el("-1"));
  CHECK(el("W Z11 - 1").is_zero());
}

TEST_CASE("expr: errors carry a kind and a span") {
  CHECK(error_kind("E +", 1) == ParseError::Kind::syntax);
  CHECK(error_kind("(E", 1) == ParseError::Kind::syntax);
  CHECK(error_kind("[E F]", 1) == ParseError::Kind::syntax);
  CHECK(error_kind("E^", 1) == ParseError::Kind::syntax);
  CHECK(error_kind("Q1", 1) == ParseError::Kind::unknown_generator);
  CHECK(error_kind("Z1", 1) == ParseError::Kind::unknown_generator);
  CHECK(error_kind("Z12", 1) == ParseError::Kind::index_range);
  CHECK(error_kind("e3", 2) == ParseError::Kind::index_range);
  CHECK(error_kind("W", 2) == ParseError::Kind::context);
  CHECK(error_kind("W tE + E", 1) == ParseError::Kind::context);
  try {
    parse("E + F + ?");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.span().begin == 8);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}
