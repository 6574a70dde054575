#include "jacobi/expr.hpp"

#include <cctype>
#include <functional>

namespace jacobi {

ParseError::ParseError(Kind kind, Span span, const std::string& message)
    : DomainError(message + " at column " + std::to_string(span.begin + 1)), kind_(kind), span_(span) {}

namespace {

struct Token {
  enum class Kind : std::uint8_t { number, name, op, end };
  Kind kind;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      i = digits(i);
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) i = digits(i + 1);
      out.push_back({Token::Kind::number, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    if (std::string_view("+-*^()[],").find(ch) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::op, std::string(1, ch), {start, i}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      // One generator or symbol per token, so that juxtaposed names split: "tEtF", "e1f1".
      if (ch == 't' && i + 1 < s.size() && std::string_view("EFHefZ").find(s[i + 1]) != std::string_view::npos) ++i;
      const char base = s[i];
      ++i;
      if (base == 'e' || base == 'f' || base == 'Z') i = digits(i);
      out.push_back({Token::Kind::name, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    throw ParseError(ParseError::Kind::syntax, {start, start + 1}, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Token::Kind::end, "", {s.size(), s.size()}});
  return out;
}

std::shared_ptr<Expr> make_node(Expr::Kind kind, Span span) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->span = span;
  return e;
}

GeneratorSymbol generator_token(const Token& t) {
  std::string_view name = t.text;
  const bool tilde = name.size() > 1 && name[0] == 't';
  if (tilde) name.remove_prefix(1);
  const char base = name[0];
  std::string_view idx = name.substr(1);
  auto bad = [&]() { return ParseError(ParseError::Kind::unknown_generator, t.span, "unknown generator '" + t.text + "'"); };
  auto index = [&](std::string_view d) -> unsigned {
    if (d.empty() || d.size() > 4) throw bad();
    return static_cast<unsigned>(std::stoul(std::string(d)));
  };
  switch (base) {
    case 'E': if (idx.empty()) return GeneratorSymbol::make(GenKind::E, tilde); break;
    case 'F': if (idx.empty()) return GeneratorSymbol::make(GenKind::F, tilde); break;
    case 'H': if (idx.empty()) return GeneratorSymbol::make(GenKind::H, tilde); break;
    case 'W': if (!tilde && idx.empty()) return GeneratorSymbol::make(GenKind::W); break;
    case 'e': return GeneratorSymbol::make(GenKind::e, tilde, index(idx));
    case 'f': return GeneratorSymbol::make(GenKind::f, tilde, index(idx));
    case 'Z':
      if (idx.size() != 2) throw bad();
      return GeneratorSymbol::make(GenKind::Z, tilde, index(idx.substr(0, 1)), index(idx.substr(1, 1)));
    default: break;
  }
  throw bad();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ExprPtr run() {
    auto e = expr();
    if (peek().kind != Token::Kind::end) throw error("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::op && peek().text[0] == c; }
  ParseError error(const std::string& msg) const { return ParseError(ParseError::Kind::syntax, peek().span, msg); }
  void expect(char c) {
    if (!at_op(c)) throw error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool starts_atom() const {
    const auto& t = peek();
    if (t.kind == Token::Kind::number || t.kind == Token::Kind::name) return true;
    return t.kind == Token::Kind::op && (t.text[0] == '(' || t.text[0] == '[');
  }

  ExprPtr expr() {
    const std::size_t begin = peek().span.begin;
    std::vector<ExprPtr> terms;
    std::vector<bool> neg;
    bool lead = false;
    if (at_op('-')) {
      lead = true;
      ++pos_;
    }
    terms.push_back(term());
    neg.push_back(lead);
    while (at_op('+') || at_op('-')) {
      neg.push_back(at_op('-'));
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1 && !lead) return terms.front();
    auto e = make_node(Expr::Kind::sum, {begin, terms.back()->span.end});
    e->children = std::move(terms);
    e->negated = std::move(neg);
    return e;
  }

  ExprPtr term() {
    std::vector<ExprPtr> fs{factor()};
    for (;;) {
      if (at_op('*')) {
        ++pos_;
        fs.push_back(factor());
      } else if (starts_atom()) {
        fs.push_back(factor());
      } else {
        break;
      }
    }
    if (fs.size() == 1) return fs.front();
    auto e = make_node(Expr::Kind::product, {fs.front()->span.begin, fs.back()->span.end});
    e->children = std::move(fs);
    return e;
  }

  ExprPtr factor() {
    auto base = atom();
    if (!at_op('^')) return base;
    ++pos_;
    const auto& t = peek();
    if (t.kind != Token::Kind::number || t.text.find('/') != std::string::npos)
      throw error("expected a non-negative integer exponent");
    unsigned long ex = 0;
    try {
      ex = std::stoul(t.text);
    } catch (const std::exception&) {
      throw error("exponent too large");
    }
    if (ex > 1000) throw error("exponent too large");
    ++pos_;
    auto e = make_node(Expr::Kind::power, {base->span.begin, t.span.end});
    e->exponent = static_cast<unsigned>(ex);
    e->children = {base};
    return e;
  }

  ExprPtr atom() {
    const Token t = peek();
    if (t.kind == Token::Kind::number) {
      ++pos_;
      const auto slash = t.text.find('/');
      if (slash != std::string::npos && t.text.find_first_not_of('0', slash + 1) == std::string::npos)
        throw ParseError(ParseError::Kind::syntax, t.span, "zero denominator");
      auto e = make_node(Expr::Kind::literal, t.span);
      e->value = mpq_class(t.text);
      e->value.canonicalize();
      return e;
    }
    if (t.kind == Token::Kind::name) {
      ++pos_;
      if (t.text == "i") return make_node(Expr::Kind::imaginary, t.span);
      if (t.text == "k") return make_node(Expr::Kind::param_k, t.span);
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::generator;
      e->span = t.span;
      e->gen = generator_token(t);
      return e;
    }
    if (at_op('(')) {
      ++pos_;
      auto inner = expr();
      const std::size_t end = peek().span.end;
      expect(')');
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::group;
      e->span = {t.span.begin, end};
      e->children = {inner};
      return e;
    }
    if (at_op('[')) {
      ++pos_;
      auto a = expr();
      expect(',');
      auto b = expr();
      const std::size_t end = peek().span.end;
      expect(']');
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::commutator;
      e->span = {t.span.begin, end};
      e->children = {a, b};
      return e;
    }
    if (t.kind == Token::Kind::end) throw error("unexpected end of input");
    throw error("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void walk(const Expr& e, const std::function<void(const Expr&)>& f) {
  f(e);
  for (const auto& c : e.children) walk(*c, f);
}

}  // namespace

bool same_shape(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case Expr::Kind::literal: if (a.value != b.value) return false; break;
    case Expr::Kind::generator: if (a.gen != b.gen) return false; break;
    case Expr::Kind::power: if (a.exponent != b.exponent) return false; break;
    case Expr::Kind::sum: if (a.negated != b.negated) return false; break;
    default: break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_shape(*a.children[i], *b.children[i])) return false;
  return true;
}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

void check_indices(const Expr& e, unsigned N) {
  walk(e, [N](const Expr& x) {
    if (x.kind != Expr::Kind::generator) return;
    const auto& g = x.gen;
    if (g.kind == GenKind::W) {
      if (N != 1) throw ParseError(ParseError::Kind::context, x.span, "W is only available at N = 1");
      return;
    }
    const bool indexed = g.kind == GenKind::e || g.kind == GenKind::f || g.kind == GenKind::Z;
    if (!indexed) return;
    const unsigned hi = std::max(g.r, g.s);
    if (g.r < 1 || (g.kind == GenKind::Z && g.s < 1) || hi > N)
      throw ParseError(ParseError::Kind::index_range, x.span,
                       "index of " + g.name() + " out of range for N = " + std::to_string(N));
  });
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal: return e.value.get_str();
    case Expr::Kind::imaginary: return "i";
    case Expr::Kind::param_k: return "k";
    case Expr::Kind::generator: return e.gen.name();
    case Expr::Kind::power: return render(*e.children[0]) + "^" + std::to_string(e.exponent);
    case Expr::Kind::group: return "(" + render(*e.children[0]) + ")";
    case Expr::Kind::commutator: return "[" + render(*e.children[0]) + ", " + render(*e.children[1]) + "]";
    case Expr::Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "*" : "") + render(*e.children[i]);
      return s;
    }
    case Expr::Kind::sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i == 0)
          s += e.negated[i] ? "-" : "";
        else
          s += e.negated[i] ? " - " : " + ";
        s += render(*e.children[i]);
      }
      return s;
    }
  }
  return {};
}

ExprUsage usage(const Expr& e) {
  ExprUsage u;
  walk(e, [&u](const Expr& x) {
    if (x.kind != Expr::Kind::generator) return;
    if (x.gen.kind == GenKind::W)
      u.W = true;
    else if (x.gen.tilde)
      u.tilde = true;
    else
      u.standard = true;
  });
  return u;
}

namespace {

struct Evaluator {
  AlgebraPtr alg;
  bool tilde;
  unsigned N;
  ParamScalar k;

  UeaElement scalar(const ParamScalar& s) const { return UeaElement::scalar(alg, s); }

  UeaElement gen(const Expr& x) const {
    const auto& g = x.gen;
    if (g.kind == GenKind::W || g.tilde == tilde) {
      auto idx = alg->presentation()->find(g);
      if (!idx) throw ParseError(ParseError::Kind::unknown_generator, x.span, "unknown generator '" + g.name() + "'");
      return UeaElement::generator(alg, *idx);
    }
    auto from = make_jacobi(N, tilde ? BasisKind::standard : BasisKind::tilde);
    auto to = make_jacobi(N, tilde ? BasisKind::tilde : BasisKind::standard);
    return UeaElement::from_lincomb(alg, basis_convert(single(from->index_of(g)), *from, *to));
  }

  UeaElement eval(const Expr& x) const {
    switch (x.kind) {
      case Expr::Kind::literal: return scalar(ParamScalar(GaussianRational(x.value)));
      case Expr::Kind::imaginary: return scalar(ParamScalar(GaussianRational::i()));
      case Expr::Kind::param_k: return scalar(k);
      case Expr::Kind::generator: return gen(x);
      case Expr::Kind::power: return eval(*x.children[0]).pow(x.exponent);
      case Expr::Kind::group: return eval(*x.children[0]);
      case Expr::Kind::commutator: return commutator(eval(*x.children[0]), eval(*x.children[1]));
      case Expr::Kind::product: {
        UeaElement acc = eval(*x.children[0]);
        for (std::size_t i = 1; i < x.children.size(); ++i) acc = acc * eval(*x.children[i]);
        return acc;
      }
      case Expr::Kind::sum: {
        UeaElement acc(alg);
        for (std::size_t i = 0; i < x.children.size(); ++i) {
          if (x.negated[i])
            acc -= eval(*x.children[i]);
          else
            acc += eval(*x.children[i]);
        }
        return acc;
      }
    }
    return UeaElement(alg);
  }
};

}  // namespace

UeaElement evaluate(const Expr& e, unsigned N, const ParamScalar& k, bool force_tilde) {
  if (N == 0) throw DomainError("N must be positive");
  check_indices(e, N);
  const ExprUsage u = usage(e);
  const bool tilde = force_tilde || u.tilde;
  if (u.W && ((tilde && u.standard) || (!tilde && u.tilde)))
    throw ParseError(ParseError::Kind::context, e.span, "W cannot be combined with a change of basis");
  const BasisKind kind = tilde ? BasisKind::tilde : BasisKind::standard;
  Evaluator ev{u.W ? uea_localized_rank1(kind) : uea_jacobi(N, kind), tilde, N, k};
  return ev.eval(e);
}

UeaElement parse_element(std::string_view text, unsigned N, const ParamScalar& k, bool force_tilde) {
  return evaluate(*parse(text), N, k, force_tilde);
}

}  // namespace jacobi
