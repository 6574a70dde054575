#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "ido_engine.hpp"
#include "jacobi/linalg.hpp"

namespace jacobi {

std::vector<IdoGenerator> generators(const IdoConfig& cfg) {
  std::vector<IdoGenerator> out;
  const unsigned N = cfg.N;
  auto tag = [](char c, unsigned r, unsigned s) { return std::string(1, c) + std::to_string(r) + std::to_string(s); };
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = r; s <= N; ++s) out.push_back({tag('P', r, s), ido_P(cfg, r, s)});
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = r; s <= N; ++s) out.push_back({tag('Q', r, s), ido_Q(cfg, r, s)});
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s) out.push_back({tag('E', r, s), ido_Ers(cfg, r, s)});
  out.push_back({"C", casimir(cfg)});
  return out;
}

IdoElement reduce(const UeaElement& e, const IdoConfig& cfg) {
  const auto& pres = e.algebra()->presentation();
  if (pres->kind() != BasisKind::tilde) throw DomainError("reduce expects the tilde presentation");
  if (pres->rank() != cfg.N) throw DomainError("presentation rank differs from N");
  auto eng = engine_for(cfg);
  const auto& gens = pres->generators();
  IdoElement::TermMap acc;
  const ParamScalar minus_half = ParamScalar::rational(-1, 2);
  for (const auto& [mono, coef] : e.terms()) {
    IdoMonomial w = IdoMonomial::one(cfg.N);
    ParamScalar scale = coef;
    int weight = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const unsigned x = mono[j];
      if (x == 0) continue;
      const auto& g = gens[j];
      switch (g.kind) {
        case GenKind::F: w.iF = static_cast<std::uint16_t>(w.iF + x); weight -= 2 * static_cast<int>(x); break;
        case GenKind::E: w.iE = static_cast<std::uint16_t>(w.iE + x); weight += 2 * static_cast<int>(x); break;
        case GenKind::f: w.If[g.r - 1] = static_cast<std::uint16_t>(w.If[g.r - 1] + x); weight -= static_cast<int>(x); break;
        case GenKind::e: w.Ie[g.r - 1] = static_cast<std::uint16_t>(w.Ie[g.r - 1] + x); weight += static_cast<int>(x); break;
        case GenKind::H: scale *= cfg.k.pow(x); break;
        case GenKind::Z:
          if (g.r != g.s) {
            scale = 0;
          } else {
            scale *= minus_half.pow(x);
          }
          break;
        case GenKind::W: scale *= ParamScalar(-2).pow(x); break;
        default: throw DomainError("unexpected generator " + g.name() + " in reduce");
      }
    }
    if (weight != 0) {
      throw DomainError("element is not invariant: component of ad(tH)-weight " + std::to_string(weight) +
                        " (monomial coefficient " + coef.str() + ")");
    }
    if (scale.is_zero()) continue;
    IdoEngine::add_all(acc, eng->tilde_word(w), scale);
  }
  return IdoElement(cfg, IdoBasis::A, std::move(acc));
}

namespace {

// Compositions of n into N parts, in lexicographic order.
void compositions(unsigned n, unsigned N, std::vector<std::vector<std::uint16_t>>& out) {
  std::vector<std::uint16_t> cur(N, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
    if (pos + 1 == N) {
      cur[pos] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = static_cast<std::uint16_t>(v);
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
}

}  // namespace

std::vector<IdoMonomial> monomials(unsigned N, IdoBasis basis, unsigned max_degree, bool c_counts_four) {
  std::vector<IdoMonomial> out;
  std::vector<std::vector<std::vector<std::uint16_t>>> comps(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) compositions(n, N, comps[n]);
  const unsigned c_weight = c_counts_four ? 4 : 2;
  for (unsigned a = 0; 2 * a <= max_degree; ++a)
    for (unsigned b = 0; 2 * (a + b) <= max_degree; ++b) {
      if (basis == IdoBasis::B && a > 0 && b > 0) continue;
      const unsigned cmax = basis == IdoBasis::A ? 0 : (max_degree - 2 * (a + b)) / c_weight;
      for (unsigned c = 0; c <= cmax; ++c) {
        const unsigned used = 2 * (a + b) + c_weight * c;
        for (unsigned nf = 0; used + nf <= max_degree; ++nf) {
          // 2a + nf = 2b + ne
          long ne = 2L * a + nf - 2L * b;
          if (ne < 0 || used + nf + static_cast<unsigned>(ne) > max_degree) continue;
          for (const auto& I : comps[nf])
            for (const auto& J : comps[static_cast<unsigned>(ne)]) {
              IdoMonomial m;
              m.iF = static_cast<std::uint16_t>(a);
              m.iE = static_cast<std::uint16_t>(b);
              m.iC = static_cast<std::uint16_t>(c);
              m.If = I;
              m.Ie = J;
              out.push_back(std::move(m));
            }
        }
      }
    }
  auto deg = [c_weight](const IdoMonomial& m) { return m.degree() + (c_weight - 2) * m.iC; };
  std::stable_sort(out.begin(), out.end(), [&](const IdoMonomial& x, const IdoMonomial& y) {
    auto dx = deg(x), dy = deg(y);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  return out;
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = n;
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<IdoElement> commutant(const IdoConfig& cfg, const std::vector<IdoElement>& S, unsigned max_degree,
                                  unsigned threads) {
  auto basis = monomials(cfg.N, IdoBasis::B, max_degree);
  std::vector<IdoElement> Sb;
  for (const auto& s : S) {
    if (!(s.config() == cfg)) throw DomainError("commutant: element from a different configuration");
    Sb.push_back(s.to(IdoBasis::B));
  }
  // columns[j][i] = [m_j, s_i] in basis B
  std::vector<std::vector<IdoElement::TermMap>> columns(basis.size());
  parallel_for(basis.size(), threads, [&](std::size_t j) {
    IdoElement x = IdoElement::monomial(cfg, IdoBasis::B, basis[j]);
    auto& col = columns[j];
    col.reserve(Sb.size());
    for (const auto& s : Sb) col.push_back(commutator(x, s).terms());
  });
  // Row index: (generator, output monomial), assembled in a fixed order.
  std::map<std::pair<std::size_t, IdoMonomial>, std::size_t> row_of;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < Sb.size(); ++i)
      for (const auto& [m, c] : columns[j][i]) row_of.try_emplace({i, m}, 0);
  std::size_t r = 0;
  for (auto& [key, idx] : row_of) idx = r++;
  ScalarMatrix A(r, ScalarRow(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < Sb.size(); ++i)
      for (const auto& [m, c] : columns[j][i]) A[row_of.at({i, m})][j] = c;
  std::vector<IdoElement> out;
  if (r == 0) {
    for (const auto& m : basis) out.push_back(IdoElement::monomial(cfg, IdoBasis::B, m));
    return out;
  }
  for (const auto& v : nullspace(A, basis.size())) {
    IdoElement::TermMap t;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) t.emplace(basis[j], v[j]);
    out.emplace_back(cfg, IdoBasis::B, std::move(t));
  }
  return out;
}

IdoElement theta_tilde_k(const IdoElement& a) {
  const IdoConfig target = a.config().negated();
  IdoElement out(target, IdoBasis::A);
  const IdoElement src = a.to(IdoBasis::A);
  for (const auto& [m, c] : src.terms()) {
    std::vector<std::string> word;
    for (unsigned i = 0; i < m.iF; ++i) word.push_back("E");
    for (unsigned i = 0; i < m.iE; ++i) word.push_back("F");
    for (unsigned r = 0; r < m.If.size(); ++r)
      for (unsigned i = 0; i < m.If[r]; ++i) word.push_back("e" + std::to_string(r + 1));
    for (unsigned r = 0; r < m.Ie.size(); ++r)
      for (unsigned i = 0; i < m.Ie[r]; ++i) word.push_back("f" + std::to_string(r + 1));
    const bool odd = ((m.iF + m.iE + m.size_f()) % 2) == 1;
    out += ido_word(target, word) * (odd ? -c : c);
  }
  return out.to(a.basis());
}

IdoElement mu_d(const IdoElement& a, const GaussianRational& d) {
  if (a.config().N != 1) throw DomainError("mu_d is defined on D_k with N = 1");
  if (d.is_zero()) throw DivisionByZero();
  IdoElement::TermMap t;
  for (const auto& [m, c] : a.terms()) {
    const int w = static_cast<int>(m.size_f()) - static_cast<int>(m.size_e());
    GaussianRational f = 1;
    GaussianRational base = w >= 0 ? d : d.inv();
    for (int i = 0; i < std::abs(w) / 2; ++i) f *= base;
    t.emplace(m, c * ParamScalar(f));
  }
  return IdoElement(a.config(), a.basis(), std::move(t));
}

std::size_t span_dimension(const std::vector<IdoElement>& elems) {
  std::map<IdoMonomial, std::size_t> col;
  std::vector<IdoElement> b;
  for (const auto& e : elems) {
    b.push_back(e.to(IdoBasis::B));
    for (const auto& [m, c] : b.back().terms()) col.try_emplace(m, 0);
  }
  std::size_t n = 0;
  for (auto& [m, idx] : col) idx = n++;
  if (n == 0) return 0;
  ScalarMatrix A;
  for (const auto& e : b) {
    ScalarRow row(n);
    for (const auto& [m, c] : e.terms()) row[col.at(m)] = c;
    A.push_back(std::move(row));
  }
  return rank(A, n);
}

VerifyReport verify_aN(const IdoConfig& cfg) {
  VerifyReport rep;
  rep.suite = "aN";
  const unsigned N = cfg.N;
  auto E = [&](unsigned r, unsigned s) { return ido_Ers(cfg, r, s); };
  auto gl = make_gl(N);
  auto eps = [&](unsigned r, unsigned s) { return gl->index_of(GeneratorSymbol::make(GenKind::eps, false, r, s)); };

  // (i), (ii): [E_rs, E_tu] is the image of [eps_rs, eps_tu].
  bool closed = true;
  std::string witness;
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = 1; u <= N; ++u) {
          IdoElement lhs = commutator(E(r, s), E(t, u));
          IdoElement rhs(cfg, IdoBasis::A);
          for (const auto& [idx, c] : gl->bracket_gen(eps(r, s), eps(t, u))) {
            const auto& g = gl->generator(idx);
            rhs += E(g.r, g.s) * ParamScalar(c);
          }
          if (!(lhs == rhs) && closed) {
            closed = false;
            witness = "[E" + std::to_string(r) + std::to_string(s) + ",E" + std::to_string(t) + std::to_string(u) +
                      "] = " + lhs.str();
          }
        }
  rep.add("aN.closure", "span of E_rs is closed under commutators", closed, witness);
  rep.add("aN.lie_map", "eps_rs -> E_rs is a Lie map", closed, witness);

  IdoElement Et = ido_Etotal(cfg);
  bool central = true;
  for (unsigned r = 1; r <= N && central; ++r)
    for (unsigned s = 1; s <= N && central; ++s)
      if (!commutator(Et, E(r, s)).is_zero()) {
        central = false;
        witness = "E fails to commute with E" + std::to_string(r) + std::to_string(s);
      }
  rep.add("aN.center", "E is central in a_N", central, witness);

  // (iv) the derivation ad(E_rs) on P, Q, C.
  bool deriv = true;
  auto d = [](unsigned a, unsigned b) { return a == b ? 1L : 0L; };
  for (unsigned r = 1; r <= N && deriv; ++r)
    for (unsigned s = 1; s <= N && deriv; ++s) {
      if (!commutator(E(r, s), casimir(cfg)).is_zero()) {
        deriv = false;
        witness = "[E_rs, C] != 0";
      }
      for (unsigned t = 1; t <= N && deriv; ++t)
        for (unsigned u = t; u <= N && deriv; ++u) {
          IdoElement p = commutator(E(r, s), ido_P(cfg, t, u));
          IdoElement pe = ido_P(cfg, s, u) * ParamScalar(-d(r, t)) - ido_P(cfg, t, s) * ParamScalar(d(r, u));
          IdoElement q = commutator(E(r, s), ido_Q(cfg, t, u));
          IdoElement qe = ido_Q(cfg, r, u) * ParamScalar(d(s, t)) + ido_Q(cfg, t, r) * ParamScalar(d(s, u));
          if (!(p == pe) || !(q == qe)) {
            deriv = false;
            witness = "ad(E" + std::to_string(r) + std::to_string(s) + ") on P/Q" + std::to_string(t) +
                      std::to_string(u);
          }
        }
    }
  rep.add("aN.derivation", "ad(E_rs) acts on P, Q, C by the gl_N rules", deriv, witness);

  // (v) ad(E) eigenvalues on basis-B monomials.
  bool eig = true;
  for (const auto& m : monomials(N, IdoBasis::B, N == 1 ? 6 : 4)) {
    IdoElement x = IdoElement::monomial(cfg, IdoBasis::B, m);
    const long w = static_cast<long>(m.size_f()) - static_cast<long>(m.size_e());
    if (!(commutator(Et, x) == x * ParamScalar(w))) {
      eig = false;
      witness = "monomial " + x.str();
      break;
    }
  }
  rep.add("aN.weights", "ad(E) eigenvalue of a basis monomial is |I_f| - |I_e|", eig, witness);
  return rep;
}

}  // namespace jacobi
