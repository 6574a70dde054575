#include "jacobi/render.hpp"

#include <sstream>

namespace jacobi {

namespace {

std::string latex_q(const mpq_class& q) {
  mpq_class a = abs(q);
  std::string s = a.get_den() == 1 ? a.get_num().get_str() : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return sgn(q) < 0 ? "-" + s : s;
}

std::string latex_poly(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t j = 0; j < kParamCount; ++j) {
      if (e[j] == 0) continue;
      std::string name(param_name(static_cast<Param>(j)));
      if (name == "lambda" || name == "mu") name = "\\" + name;
      mono += name;
      if (e[j] > 1) mono += "^{" + std::to_string(e[j]) + "}";
    }
    GaussianRational coef = c;
    const bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coef = -c;
    std::string cs = latex(coef);
    if (!coef.is_real() && sgn(coef.re()) != 0) cs = "(" + cs + ")";
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += cs;
    else if (coef.is_one())
      out += mono;
    else
      out += cs + " " + mono;
  }
  return out;
}

std::string latex_coefficient(const ParamScalar& c, bool& negative) {
  negative = c.is_constant() && c.constant_value()->is_real() && sgn(c.constant_value()->re()) < 0;
  ParamScalar a = negative ? -c : c;
  std::string s = latex(a);
  const bool compound = !(a.is_constant() && a.constant_value()->is_real()) && a.is_polynomial() &&
                        (a.num().terms().size() > 1 || !a.num().leading_coefficient().is_real());
  if (compound) s = "\\left(" + s + "\\right)";
  if (a.is_one()) s.clear();
  return s;
}

std::string latex_generator(const GeneratorSymbol& g) {
  std::string base;
  switch (g.kind) {
    case GenKind::E: base = "E"; break;
    case GenKind::F: base = "F"; break;
    case GenKind::H: base = "H"; break;
    case GenKind::e: base = "e_{" + std::to_string(g.r) + "}"; break;
    case GenKind::f: base = "f_{" + std::to_string(g.r) + "}"; break;
    case GenKind::Z: base = "Z_{" + std::to_string(g.r) + std::to_string(g.s) + "}"; break;
    case GenKind::W: base = "W"; break;
    default: base = g.name(); break;
  }
  if (!g.tilde) return base;
  const auto us = base.find('_');
  if (us == std::string::npos) return "\\tilde{" + base + "}";
  return "\\tilde{" + base.substr(0, us) + "}" + base.substr(us);
}

std::string power(const std::string& base, unsigned e) {
  if (e == 1) return base;
  return (base.find('_') != std::string::npos || base.find('}') != std::string::npos ? "{" + base + "}" : base) +
         "^{" + std::to_string(e) + "}";
}

template <class Terms, class MonoFn>
std::string latex_sum(const Terms& terms, MonoFn mono_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool negative = false;
    std::string cs = latex_coefficient(c, negative);
    const std::string mono = mono_of(m);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += cs.empty() ? "1" : cs;
    else
      out += cs.empty() ? mono : cs + " " + mono;
  }
  return out;
}

std::string scalar_text(const ParamScalar& s) { return s.str(); }

Json optional_text(const std::optional<GaussianRational>& g) { return g ? Json(g->str()) : Json(nullptr); }

}  // namespace

std::string latex(const GaussianRational& g) {
  if (g.is_real()) return latex_q(g.re());
  std::string im;
  if (g.im() == 1)
    im = "i";
  else if (g.im() == -1)
    im = "-i";
  else
    im = latex_q(g.im()) + " i";
  if (sgn(g.re()) == 0) return im;
  if (sgn(g.im()) < 0) return latex_q(g.re()) + " - " + im.substr(1);
  return latex_q(g.re()) + " + " + im;
}

std::string latex(const ParamScalar& s) {
  if (s.is_polynomial()) {
    ParamPoly num = s.num() * s.den().constant_value()->inv();
    return latex_poly(num);
  }
  return "\\frac{" + latex_poly(s.num()) + "}{" + latex_poly(s.den()) + "}";
}

std::string latex(const UeaElement& e) {
  const auto& gens = e.algebra()->presentation()->generators();
  return latex_sum(e.terms(), [&gens](const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += " ";
      s += power(latex_generator(gens[i]), m[i]);
    }
    return s;
  });
}

std::string latex(const IdoElement& e) {
  return latex_sum(e.terms(), [](const IdoMonomial& m) {
    std::string s;
    auto put = [&s](const std::string& base, unsigned x) {
      if (x == 0) return;
      if (!s.empty()) s += " ";
      s += power(base, x);
    };
    put("F_{\\nu}", m.iF);
    put("E_{\\nu}", m.iE);
    for (std::size_t r = 0; r < m.If.size(); ++r) put("\\tilde{f}_{" + std::to_string(r + 1) + "}", m.If[r]);
    for (std::size_t r = 0; r < m.Ie.size(); ++r) put("\\tilde{e}_{" + std::to_string(r + 1) + "}", m.Ie[r]);
    put("\\mathcal{C}", m.iC);
    return s;
  });
}

Json to_json(const UeaElement& e) {
  const auto& pres = e.algebra()->presentation();
  Json gens = Json::array();
  for (const auto& g : pres->generators()) gens.push_back(g.name());
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json ex = Json::array();
    for (auto x : m) ex.push_back(x);
    terms.push_back({{"exponents", ex}, {"coef", scalar_text(c)}});
  }
  return {{"algebra", pres->label()}, {"generators", gens}, {"terms", terms}, {"text", e.str()}};
}

Json to_json(const IdoElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"iF", m.iF}, {"iE", m.iE}, {"If", m.If}, {"Ie", m.Ie}, {"iC", m.iC}, {"coef", scalar_text(c)}});
  return {{"N", e.config().N},
          {"k", e.config().k_label()},
          {"basis", e.basis() == IdoBasis::A ? "A" : "B"},
          {"terms", terms},
          {"text", e.str()}};
}

Json to_json(const Character& chi) {
  Json values = Json::object();
  for (std::size_t i = 0; i < chi.names.size(); ++i) values[chi.names[i]] = scalar_text(chi.values[i]);
  Json out = {{"N", chi.cfg.N}, {"k", chi.cfg.k_label()}, {"values", values}};
  if (chi.c_label) out["c"] = scalar_text(*chi.c_label);
  if (chi.lambda_label) out["lambda"] = scalar_text(*chi.lambda_label);
  return out;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}};
    if (!c.pass) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const WeightModule& m, const GaussianRational& from, const GaussianRational& to) {
  const auto& s = m.spec;
  const DeltaSet d = delta_set(s.c, s.lambda, s.k);
  Json window = Json::array();
  for (const auto& mu : s.window(from, to)) {
    Json row = {{"mu", mu.str()}, {"P", m.p_at(mu).str()}, {"Q", m.q_at(mu).str()}, {"E", m.e_at(mu).str()}};
    if (m.table.x_coef) {
      const std::map<Param, GaussianRational> at{{Param::mu, mu}};
      row["x"] = (s.contains(mu + GaussianRational(2)) ? m.table.x_coef->evaluate(at) : GaussianRational(0)).str();
      row["y"] = (s.contains(mu - GaussianRational(2)) ? m.table.y_coef->evaluate(at) : GaussianRational(0)).str();
    }
    window.push_back(row);
  }
  return {{"kind", module_kind_name(s.kind)},
          {"label", s.label()},
          {"k", s.k.str()},
          {"c", s.c.str()},
          {"lambda", s.lambda.str()},
          {"lower", optional_text(s.lower)},
          {"upper", optional_text(s.upper)},
          {"m_minus", optional_text(d.m_minus)},
          {"m_plus", optional_text(d.m_plus)},
          {"window", window}};
}

Json to_json(const Restriction& r) {
  auto iv = [](const Interval& i) { return Json{{"lower", optional_text(i.lower)}, {"upper", optional_text(i.upper)}}; };
  Json out = {{"splits", r.splits}, {"report", to_json(r.report)}};
  if (r.splits) {
    out["sub"] = iv(r.sub);
    out["quotient"] = iv(r.quotient);
    out["sub_lambda"] = optional_text(r.sub_lambda);
    out["quotient_lambda"] = optional_text(r.quotient_lambda);
  } else {
    out["module"] = iv(r.sub);
  }
  return out;
}

std::string weight_diagram(const WeightModule& m, const GaussianRational& from, const GaussianRational& to) {
  const auto& s = m.spec;
  std::ostringstream os;
  const DeltaSet d = delta_set(s.c, s.lambda, s.k);
  os << s.label() << "   k = " << s.k.str() << ", c = " << s.c.str() << ", lambda = " << s.lambda.str() << "\n";
  os << "m- = " << (d.m_minus ? d.m_minus->str() : "-inf") << ", m+ = " << (d.m_plus ? d.m_plus->str() : "+inf")
     << "\n";
  const auto ws = s.window(from, to);
  if (ws.empty()) return os.str() + "(no weights in the window)\n";
  if (!s.upper || !(*s.upper == ws.back())) os << "  ...\n";
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
    const auto& mu = *it;
    os << "  v_" << mu.str() << ":  E = " << m.e_at(mu).str() << "   Q -> " << m.q_at(mu).str() << "   P -> "
       << m.p_at(mu).str() << "\n";
  }
  if (!s.lower || !(*s.lower == ws.front())) os << "  ...\n";
  return os.str();
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.id << "  (" << c.anchor << ")";
    if (!c.pass && !c.witness.empty()) os << "\n        witness: " << c.witness;
    os << "\n";
  }
  return os.str();
}

std::string dump_document(Json doc) {
  doc["schema"] = "1";
  return doc.dump(2) + "\n";
}

}  // namespace jacobi
