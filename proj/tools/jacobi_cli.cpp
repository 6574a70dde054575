// Command-line front end: normal forms, D_k computations, characters,
// modules and verification suites.

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "jacobi/characters.hpp"
#include "jacobi/expr.hpp"
#include "jacobi/ido.hpp"
#include "jacobi/render.hpp"
#include "jacobi/sl2_reps.hpp"
#include "jacobi/verify.hpp"

using namespace jacobi;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned N = 1;
  std::string k = "symbolic";
  std::string basis;
  std::optional<unsigned> degree;
  std::string c = "0";
  std::string lambda = "0";
  std::string module_kind = "Vk";
  std::string format = "text";
  std::string suite = "all";
  std::string expr1, expr2;
};

std::optional<GaussianRational> k_value(const Options& o) {
  if (o.k == "symbolic") return std::nullopt;
  return GaussianRational::parse_rational(o.k);
}

GaussianRational numeric_k(const Options& o) {
  auto k = k_value(o);
  if (!k) throw UsageError("this command needs a numeric --k");
  return *k;
}

IdoConfig config(const Options& o) {
  auto k = k_value(o);
  return k ? IdoConfig::at(o.N, *k) : IdoConfig::symbolic(o.N);
}

Format format_of(const Options& o) {
  if (o.format == "json") return Format::json;
  if (o.format == "latex") return Format::latex;
  return Format::text;
}

std::optional<IdoBasis> basis_of(const Options& o) {
  if (o.basis.empty()) return std::nullopt;
  return o.basis == "B" ? IdoBasis::B : IdoBasis::A;
}

// Expressions from the command line, or one per non-empty line of stdin. Stdin
// may hold several groups of `count` lines; each group is one job.
std::vector<std::vector<std::string>> inputs(const Options& o, std::size_t count) {
  std::vector<std::string> out;
  for (const auto* e : {&o.expr1, &o.expr2})
    if (!e->empty()) out.push_back(*e);
  const bool from_stdin = out.empty();
  if (from_stdin) {
    std::string line;
    while (std::getline(std::cin, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  if (out.empty() || (from_stdin ? out.size() % count != 0 : out.size() != count))
    throw UsageError("expected " + std::string(from_stdin ? "a multiple of " : "") + std::to_string(count) +
                     " expression(s), got " + std::to_string(out.size()));
  std::vector<std::vector<std::string>> jobs;
  for (std::size_t i = 0; i < out.size(); i += count)
    jobs.emplace_back(out.begin() + static_cast<long>(i), out.begin() + static_cast<long>(i + count));
  return jobs;
}

Json header(const std::string& command, const Options& o) {
  return {{"command", command}, {"N", o.N}, {"k", o.k}};
}

void emit_uea(const std::string& command, const Options& o, const std::vector<std::string>& in, const UeaElement& e) {
  switch (format_of(o)) {
    case Format::text: std::cout << e.str() << "\n"; break;
    case Format::latex: std::cout << latex(e) << "\n"; break;
    case Format::json: {
      Json doc = header(command, o);
      doc["input"] = in;
      doc["result"] = to_json(e);
      std::cout << dump_document(doc);
      break;
    }
  }
}

void emit_ido(const std::string& command, const Options& o, Json extra, const IdoElement& e) {
  switch (format_of(o)) {
    case Format::text: std::cout << e.str() << "\n"; break;
    case Format::latex: std::cout << latex(e) << "\n"; break;
    case Format::json: {
      Json doc = header(command, o);
      for (auto& [key, v] : extra.items()) doc[key] = v;
      doc["result"] = to_json(e);
      std::cout << dump_document(doc);
      break;
    }
  }
}

int run_algebra(const std::string& command, const Options& o) {
  const std::size_t count = command == "nf" ? 1 : 2;
  const auto cfg = config(o);
  const auto basis = basis_of(o);
  for (const auto& in : inputs(o, count)) {
    std::vector<UeaElement> xs;
    for (const auto& s : in) xs.push_back(parse_element(s, o.N, cfg.k, basis.has_value()));
    UeaElement r = xs[0];
    if (command == "mul") r = xs[0] * xs[1];
    if (command == "comm") r = commutator(xs[0], xs[1]);
    if (!basis)
      emit_uea(command, o, in, r);
    else
      emit_ido(command, o, Json{{"input", in}, {"basis", o.basis}}, reduce(r, cfg).to(*basis));
  }
  return kOk;
}

int run_casimir(const Options& o) {
  const auto basis = basis_of(o).value_or(IdoBasis::A);
  emit_ido("casimir", o, Json{{"basis", basis == IdoBasis::A ? "A" : "B"}}, casimir(config(o)).to(basis));
  return kOk;
}

int run_center(const Options& o) {
  const auto cfg = config(o);
  const unsigned d = o.degree.value_or(o.N == 1 ? 6 : 4);
  std::vector<IdoElement> S;
  for (const auto& g : generators(cfg)) S.push_back(g.value);
  const auto basis = commutant(cfg, S, d);
  const Format f = format_of(o);
  if (f == Format::json) {
    Json doc = header("center", o);
    doc["degree"] = d;
    doc["dimension"] = basis.size();
    Json arr = Json::array();
    for (const auto& b : basis) arr.push_back(to_json(b));
    doc["basis"] = arr;
    std::cout << dump_document(doc);
    return kOk;
  }
  std::cout << "commutant of the generators, N = " << o.N << ", k = " << cfg.k_label() << ", degree <= " << d
            << ": dimension " << basis.size() << "\n";
  for (const auto& b : basis) std::cout << "  " << (f == Format::latex ? latex(b) : b.str()) << "\n";
  return kOk;
}

int run_characters(const Options& o) {
  const auto cfg = config(o);
  const auto set = enumerate_characters(cfg);
  if (format_of(o) == Format::json) {
    Json doc = header("characters", o);
    Json arr = Json::array();
    for (const auto& chi : set.characters) arr.push_back(to_json(chi));
    doc["characters"] = arr;
    doc["count"] = set.characters.size();
    doc["report"] = to_json(set.report);
    std::cout << dump_document(doc);
  } else {
    std::cout << set.characters.size() << " characters of D_k, N = " << o.N << ", k = " << cfg.k_label() << "\n";
    for (const auto& chi : set.characters) {
      std::cout << "  " << chi.str();
      if (chi.c_label) std::cout << "   (c, lambda) = (" << chi.c_label->str() << ", " << chi.lambda_label->str() << ")";
      std::cout << "\n";
    }
    std::cout << report_text(set.report);
  }
  return set.report.passed() ? kOk : kFailed;
}

ModuleKind kind_of(const Options& o) {
  auto kind = module_kind_from_name(o.module_kind);
  if (!kind) throw UsageError("unknown module kind '" + o.module_kind + "'");
  return *kind;
}

ModuleParams module_params(const Options& o, ModuleKind kind) {
  ModuleParams p{numeric_k(o), GaussianRational::parse_rational(o.c), GaussianRational::parse_rational(o.lambda), 0};
  if (kind == ModuleKind::L) {
    auto n = p.lambda.as_integer();
    if (!n || *n < 0) throw UsageError("L(n) needs a non-negative integer --lambda");
    p.n = static_cast<unsigned>(*n);
  }
  return p;
}

int run_module(const Options& o) {
  const auto kind = kind_of(o);
  const auto m = build_module(kind, module_params(o, kind));
  const GaussianRational span(2 * static_cast<long>(o.degree.value_or(4)));
  const GaussianRational from = m.spec.lambda - span, to = m.spec.lambda + span;
  const auto rep = verify_module(m);
  if (format_of(o) == Format::json) {
    Json doc = header("module", o);
    doc["module"] = to_json(m, from, to);
    doc["irreducible"] = is_irreducible(m);
    doc["report"] = to_json(rep);
    std::cout << dump_document(doc);
  } else {
    std::cout << weight_diagram(m, from, to);
    std::cout << "irreducible: " << (is_irreducible(m) ? "yes" : "no") << "\n";
    std::cout << report_text(rep);
  }
  return rep.passed() ? kOk : kFailed;
}

int run_restrict(const Options& o) {
  const auto kind = kind_of(o);
  if (kind == ModuleKind::Vk) throw UsageError("restrict takes an sl2 module: L, Mminus, Mplus or P");
  const auto p = module_params(o, kind);
  const auto r = restrict_sl2(build_module(kind, p), p.k);
  if (format_of(o) == Format::json) {
    Json doc = header("restrict", o);
    doc["module_kind"] = o.module_kind;
    doc["restriction"] = to_json(r);
    std::cout << dump_document(doc);
  } else if (r.splits) {
    std::cout << "reducible\n  submodule weights " << r.sub.str() << "  = V_k(c, " << r.sub_lambda->str()
              << ")\n  quotient weights  " << r.quotient.str() << "  = V_k(c, " << r.quotient_lambda->str() << ")\n";
    std::cout << report_text(r.report);
  } else {
    std::cout << "irreducible restriction, weights " << r.sub.str() << "\n" << report_text(r.report);
  }
  return r.report.passed() ? kOk : kFailed;
}

int run_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names = {o.suite};
  SuiteOptions so{o.N, k_value(o), o.degree};
  bool ok = true;
  Json reports = Json::array();
  const Format f = format_of(o);
  for (const auto& name : names) {
    SuiteOptions s = so;
    // Rank-one suites fall back to N = 1 inside "all".
    if (o.suite == "all" && (name == "embedding" || name == "modules" || name == "isos" || name == "pbw")) s.N = 1;
    if (o.suite == "all" && name == "lie") s.degree.reset();
    VerifyReport rep;
    try {
      rep = run_suite(name, s);
    } catch (const DomainError&) {
      if (o.suite != "all") throw;
      continue;
    }
    ok = ok && rep.passed();
    std::cerr << "suite " << name << ": " << rep.seconds << " s\n";
    if (f == Format::json)
      reports.push_back(to_json(rep));
    else
      std::cout << report_text(rep);
  }
  if (f == Format::json) {
    Json doc = header("verify", o);
    doc["suite"] = o.suite;
    doc["passed"] = ok;
    doc["reports"] = reports;
    std::cout << dump_document(doc);
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Jacobi Lie algebra, its enveloping algebra and the algebras D_k"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> suites = [] {
    auto s = suite_names();
    s.insert(s.begin(), "all");
    return s;
  }();

  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--N", o.N, "rank")->check(CLI::Range(1U, 9U));
    cmd->add_option("--k", o.k, "weight: 'symbolic' or an exact rational");
    cmd->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  };
  auto basis = [&o](CLI::App* cmd) {
    cmd->add_option("--basis", o.basis, "reduce into D_k and print in basis A or B")->check(CLI::IsMember({"A", "B"}));
  };
  auto module_opts = [&o](CLI::App* cmd) {
    cmd->add_option("--c", o.c, "central character");
    cmd->add_option("--lambda", o.lambda, "weight (n for L(n))");
    cmd->add_option("--module-kind", o.module_kind, "Vk, L, Mminus, Mplus or P")
        ->check(CLI::IsMember({"Vk", "L", "Mminus", "Mplus", "P"}));
    cmd->add_option("--degree", o.degree, "window half-width, in steps of 2");
  };

  std::map<CLI::App*, std::function<int()>> actions;
  for (const std::string name : {"nf", "mul", "comm"}) {
    auto* cmd = app.add_subcommand(name, name == "nf"    ? "PBW normal form of an expression"
                                         : name == "mul" ? "product of two expressions"
                                                         : "commutator of two expressions");
    common(cmd);
    basis(cmd);
    // Plain strings: CLI11 would split a vector option at "[a, b]".
    cmd->add_option("expr", o.expr1, "expression; read from stdin, one per line, when omitted");
    if (name != "nf") cmd->add_option("expr2", o.expr2, "second expression");
    actions[cmd] = [name, &o] { return run_algebra(name, o); };
  }
  auto* cas = app.add_subcommand("casimir", "the Casimir operator of D_k");
  common(cas);
  basis(cas);
  actions[cas] = [&o] { return run_casimir(o); };
  auto* cen = app.add_subcommand("center", "commutant of the generators of D_k up to a degree");
  common(cen);
  cen->add_option("--degree", o.degree, "degree bound (default 6 at N = 1, else 4)");
  actions[cen] = [&o] { return run_center(o); };
  auto* chars = app.add_subcommand("characters", "all characters of D_k");
  common(chars);
  actions[chars] = [&o] { return run_characters(o); };
  auto* mod = app.add_subcommand("module", "a weight module with its action on a window of weights");
  common(mod);
  module_opts(mod);
  actions[mod] = [&o] { return run_module(o); };
  auto* res = app.add_subcommand("restrict", "restriction of an sl2 module to D_k");
  common(res);
  module_opts(res);
  actions[res] = [&o] { return run_restrict(o); };
  auto* ver = app.add_subcommand("verify", "run verification suites");
  common(ver);
  ver->add_option("--suite", o.suite, "suite name or 'all'")->check(CLI::IsMember(suites));
  ver->add_option("--degree", o.degree, "degree bound for suites that take one");
  actions[ver] = [&o] { return run_verify(o); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    for (auto& [cmd, act] : actions)
      if (cmd->parsed()) return act();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
