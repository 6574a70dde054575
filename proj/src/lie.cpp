#include "jacobi/lie.hpp"

#include <mutex>
#include <sstream>

namespace jacobi {

GeneratorSymbol GeneratorSymbol::make(GenKind kind, bool tilde, unsigned r, unsigned s) {
  GeneratorSymbol g;
  g.kind = kind;
  g.tilde = tilde;
  if (kind == GenKind::Z && r > s) std::swap(r, s);
  g.r = static_cast<std::uint16_t>(r);
  g.s = static_cast<std::uint16_t>(s);
  return g;
}

std::string GeneratorSymbol::name() const {
  std::string base;
  switch (kind) {
    case GenKind::E: base = "E"; break;
    case GenKind::F: base = "F"; break;
    case GenKind::H: base = "H"; break;
    case GenKind::e: base = "e" + std::to_string(r); break;
    case GenKind::f: base = "f" + std::to_string(r); break;
    case GenKind::Z: base = "Z" + std::to_string(r) + std::to_string(s); break;
    case GenKind::x: base = "x"; break;
    case GenKind::y: base = "y"; break;
    case GenKind::h: base = "h"; break;
    case GenKind::W: base = "W"; break;
    case GenKind::eps: base = "eps" + std::to_string(r) + std::to_string(s); break;
  }
  return tilde ? "t" + base : base;
}

void add_to(LinComb& acc, const LinComb& v, const GaussianRational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [i, c] : v) {
    auto [it, inserted] = acc.try_emplace(i, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

LinComb scaled(const LinComb& v, const GaussianRational& s) {
  LinComb out;
  add_to(out, v, s);
  return out;
}

LinComb single(std::size_t index, GaussianRational coef) {
  LinComb out;
  if (!coef.is_zero()) out.emplace(index, std::move(coef));
  return out;
}

// ---------------------------------------------------------------------------

LiePresentation::LiePresentation(std::string label, std::vector<GeneratorSymbol> gens,
                                 const std::vector<Bracket>& brackets, BasisKind kind, unsigned rank)
    : label_(std::move(label)), gens_(std::move(gens)), kind_(kind), rank_(rank) {
  const std::size_t n = gens_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(gens_[i], i).second) throw DomainError("duplicate generator " + gens_[i].name());
  }
  table_.assign(n, std::vector<LinComb>(n));
  std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
  for (const auto& br : brackets) {
    if (br.a >= n || br.b >= n) throw DomainError("bracket index out of range");
    for (const auto& [i, c] : br.value) {
      (void)c;
      if (i >= n) throw DomainError("bracket value outside the generator span");
    }
    if (br.a == br.b) {
      if (!br.value.empty()) throw ConsistencyError("[g,g] must vanish for " + gens_[br.a].name());
      continue;
    }
    LinComb neg = scaled(br.value, -1);
    if (set[br.a][br.b] && table_[br.a][br.b] != br.value)
      throw ConsistencyError("conflicting brackets for " + gens_[br.a].name() + ", " + gens_[br.b].name());
    table_[br.a][br.b] = br.value;
    table_[br.b][br.a] = std::move(neg);
    set[br.a][br.b] = set[br.b][br.a] = true;
  }
  if (auto bad = jacobi_violation()) {
    throw ConsistencyError("Jacobi identity fails on (" + gens_[(*bad)[0]].name() + ", " +
                           gens_[(*bad)[1]].name() + ", " + gens_[(*bad)[2]].name() + ")");
  }
}

std::optional<std::size_t> LiePresentation::find(const GeneratorSymbol& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LiePresentation::index_of(const GeneratorSymbol& g) const {
  auto i = find(g);
  if (!i) throw DomainError("unknown generator " + g.name() + " in " + label_);
  return *i;
}

std::optional<std::size_t> LiePresentation::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name() == name) return i;
  return std::nullopt;
}

const LinComb& LiePresentation::bracket_gen(std::size_t a, std::size_t b) const {
  if (a >= size() || b >= size()) throw DomainError("generator index out of range");
  return table_[a][b];
}

LinComb LiePresentation::bracket(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) add_to(out, bracket_gen(i, j), ci * cj);
  return out;
}

bool LiePresentation::is_central(std::size_t a) const {
  for (const auto& v : table_.at(a))
    if (!v.empty()) return false;
  return true;
}

std::optional<std::array<std::size_t, 3>> LiePresentation::jacobi_violation() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        LinComb sum = bracket(table_[a][b], single(c));
        add_to(sum, bracket(table_[b][c], single(a)));
        add_to(sum, bracket(table_[c][a], single(b)));
        if (!sum.empty()) return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::string LiePresentation::render(const LinComb& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussianRational mag = negative ? -c : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (!mag.is_one()) {
      if (mag.is_real() || sgn(mag.re()) == 0)
        os << mag.str() << "*";
      else
        os << "(" << mag.str() << ")*";
    }
    os << gens_[i].name();
  }
  return os.str();
}

PresentationPtr LiePresentation::with_central(const GeneratorSymbol& g) const {
  std::vector<GeneratorSymbol> gens = gens_;
  gens.push_back(g);
  std::vector<Bracket> brs;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!table_[a][b].empty()) brs.push_back({a, b, table_[a][b]});
  return std::make_shared<LiePresentation>(label_ + "[" + g.name() + "]", std::move(gens), brs, kind_, rank_);
}

// ---------------------------------------------------------------------------
// Presets

namespace {

struct JacobiIndex {
  unsigned N;
  std::size_t F() const { return 0; }
  std::size_t E() const { return 1; }
  std::size_t f(unsigned r) const { return 1 + r; }
  std::size_t e(unsigned r) const { return 1 + N + r; }
  std::size_t H() const { return 2 + 2 * N; }
  std::size_t Z(unsigned r, unsigned s) const {
    if (r > s) std::swap(r, s);
    // Pairs (r, s) with r <= s in lexicographic order.
    std::size_t before = 0;
    for (unsigned t = 1; t < r; ++t) before += N - t + 1;
    return H() + 1 + before + (s - r);
  }
  std::size_t size() const { return 3 + 2 * N + N * (N + 1) / 2; }
};

PresentationPtr build_jacobi(unsigned N, bool tilde) {
  JacobiIndex ix{N};
  std::vector<GeneratorSymbol> gens(ix.size());
  gens[ix.F()] = GeneratorSymbol::make(GenKind::F, tilde);
  gens[ix.E()] = GeneratorSymbol::make(GenKind::E, tilde);
  for (unsigned r = 1; r <= N; ++r) {
    gens[ix.f(r)] = GeneratorSymbol::make(GenKind::f, tilde, r);
    gens[ix.e(r)] = GeneratorSymbol::make(GenKind::e, tilde, r);
  }
  gens[ix.H()] = GeneratorSymbol::make(GenKind::H, tilde);
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = r; s <= N; ++s) gens[ix.Z(r, s)] = GeneratorSymbol::make(GenKind::Z, tilde, r, s);

  std::vector<LiePresentation::Bracket> brs;
  auto put = [&](std::size_t a, std::size_t b, LinComb v) { brs.push_back({a, b, std::move(v)}); };
  put(ix.E(), ix.F(), single(ix.H()));
  put(ix.H(), ix.E(), single(ix.E(), 2));
  put(ix.H(), ix.F(), single(ix.F(), -2));
  for (unsigned r = 1; r <= N; ++r) {
    put(ix.H(), ix.e(r), single(ix.e(r)));
    put(ix.H(), ix.f(r), single(ix.f(r), -1));
    put(ix.E(), ix.f(r), single(ix.e(r), -1));
    put(ix.F(), ix.e(r), single(ix.f(r), -1));
    for (unsigned s = 1; s <= N; ++s) put(ix.e(r), ix.f(s), single(ix.Z(r, s), -2));
  }
  std::string label = std::string(tilde ? "g^J_" : "g^J_") + std::to_string(N) + (tilde ? " (tilde)" : " (standard)");
  return std::make_shared<LiePresentation>(label, std::move(gens), brs,
                                           tilde ? BasisKind::tilde : BasisKind::standard, N);
}

std::size_t sl2_y() { return 0; }
std::size_t sl2_x() { return 1; }
std::size_t sl2_h() { return 2; }

}  // namespace

PresentationPtr make_jacobi(unsigned N, BasisKind basis) {
  if (N == 0) throw DomainError("rank N must be positive");
  if (basis != BasisKind::standard && basis != BasisKind::tilde)
    throw DomainError("make_jacobi needs the standard or tilde basis");
  static std::mutex mu;
  static std::map<std::pair<unsigned, bool>, PresentationPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(N, basis == BasisKind::tilde);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto p = build_jacobi(N, key.second);
  cache.emplace(key, p);
  return p;
}

PresentationPtr make_sl2() {
  static const PresentationPtr p = [] {
    std::vector<GeneratorSymbol> gens{GeneratorSymbol::make(GenKind::y), GeneratorSymbol::make(GenKind::x),
                                      GeneratorSymbol::make(GenKind::h)};
    std::vector<LiePresentation::Bracket> brs{{sl2_x(), sl2_y(), single(sl2_h())},
                                              {sl2_h(), sl2_x(), single(sl2_x(), 2)},
                                              {sl2_h(), sl2_y(), single(sl2_y(), -2)}};
    return std::make_shared<LiePresentation>("sl2", std::move(gens), brs, BasisKind::sl2, 0);
  }();
  return p;
}

PresentationPtr make_gl(unsigned N) {
  if (N == 0) throw DomainError("rank N must be positive");
  std::vector<GeneratorSymbol> gens;
  auto idx = [N](unsigned r, unsigned s) { return static_cast<std::size_t>((r - 1) * N + (s - 1)); };
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s) gens.push_back(GeneratorSymbol::make(GenKind::eps, false, r, s));
  std::vector<LiePresentation::Bracket> brs;
  for (unsigned r = 1; r <= N; ++r)
    for (unsigned s = 1; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = 1; u <= N; ++u) {
          if (idx(r, s) >= idx(t, u)) continue;
          LinComb v;
          if (s == t) add_to(v, single(idx(r, u)));
          if (u == r) add_to(v, single(idx(t, s)), -1);
          brs.push_back({idx(r, s), idx(t, u), std::move(v)});
        }
  return std::make_shared<LiePresentation>("gl_" + std::to_string(N), std::move(gens), brs, BasisKind::gl, N);
}

// ---------------------------------------------------------------------------
// Matrices

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DomainError("matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    GaussianRational s = a[col][col].inv();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      GaussianRational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

GaussianRational determinant(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  GaussianRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    GaussianRational s = a[col][col].inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      GaussianRational f = a[i][col] * s;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// LinearLieMap

LinearLieMap::LinearLieMap(PresentationPtr domain, PresentationPtr codomain, std::vector<LinComb> images,
                           bool require_automorphism)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->size()) throw DomainError("map must give one image per generator");
  for (const auto& v : images_)
    for (const auto& [i, c] : v) {
      (void)c;
      if (i >= codomain_->size()) throw DomainError("image outside the codomain");
    }
  if (require_automorphism) {
    if (!preserves_brackets()) throw ConsistencyError("map does not preserve brackets");
    if (!is_invertible()) throw ConsistencyError("map is not invertible");
  }
}

LinComb LinearLieMap::apply(const LinComb& v) const {
  LinComb out;
  for (const auto& [i, c] : v) add_to(out, images_.at(i), c);
  return out;
}

LinearLieMap LinearLieMap::after(const LinearLieMap& first) const {
  if (first.codomain_->label() != domain_->label()) throw DomainError("maps do not compose");
  std::vector<LinComb> imgs;
  imgs.reserve(first.images_.size());
  for (const auto& v : first.images_) imgs.push_back(apply(v));
  return LinearLieMap(first.domain_, codomain_, std::move(imgs), false);
}

namespace {

Matrix map_matrix(const LinearLieMap& m) {
  const std::size_t rows = m.codomain()->size();
  const std::size_t cols = m.domain()->size();
  Matrix a(rows, std::vector<GaussianRational>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, c] : m.image(j)) a[i][j] = c;
  return a;
}

}  // namespace

bool LinearLieMap::is_invertible() const {
  if (domain_->size() != codomain_->size()) return false;
  return !determinant(map_matrix(*this)).is_zero();
}

LinearLieMap LinearLieMap::inverse() const {
  Matrix inv = invert(map_matrix(*this));
  std::vector<LinComb> imgs(codomain_->size());
  for (std::size_t j = 0; j < imgs.size(); ++j)
    for (std::size_t i = 0; i < inv.size(); ++i)
      if (!inv[i][j].is_zero()) imgs[j].emplace(i, inv[i][j]);
  return LinearLieMap(codomain_, domain_, std::move(imgs), false);
}

bool LinearLieMap::preserves_brackets() const {
  const std::size_t n = domain_->size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (apply(domain_->bracket_gen(a, b)) != codomain_->bracket(images_[a], images_[b])) return false;
  return true;
}

bool LinearLieMap::is_identity() const {
  if (domain_->label() != codomain_->label()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != single(i)) return false;
  return true;
}

bool operator==(const LinearLieMap& a, const LinearLieMap& b) {
  return a.domain_->label() == b.domain_->label() && a.codomain_->label() == b.codomain_->label() &&
         a.images_ == b.images_;
}

LinearLieMap identity_map(PresentationPtr p) {
  std::vector<LinComb> imgs;
  for (std::size_t i = 0; i < p->size(); ++i) imgs.push_back(single(i));
  return LinearLieMap(p, p, std::move(imgs), false);
}

namespace {

LinearLieMap theta_on(unsigned N, BasisKind basis) {
  auto p = make_jacobi(N, basis);
  JacobiIndex ix{N};
  std::vector<LinComb> imgs(p->size());
  imgs[ix.H()] = single(ix.H(), -1);
  imgs[ix.E()] = single(ix.F(), -1);
  imgs[ix.F()] = single(ix.E(), -1);
  for (unsigned r = 1; r <= N; ++r) {
    imgs[ix.e(r)] = single(ix.f(r));
    imgs[ix.f(r)] = single(ix.e(r), -1);
    for (unsigned s = r; s <= N; ++s) imgs[ix.Z(r, s)] = single(ix.Z(r, s));
  }
  return LinearLieMap(p, p, std::move(imgs), true);
}

// Columns: standard coordinates of the tilde generators.
std::vector<LinComb> tilde_in_standard(unsigned N) {
  JacobiIndex ix{N};
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half(1, 2);
  std::vector<LinComb> cols(ix.size());
  // tH = i(F - E)
  cols[ix.H()] = {{ix.F(), i}, {ix.E(), -i}};
  // tE = (H + i(F + E))/2, tF = (H - i(F + E))/2
  cols[ix.E()] = {{ix.H(), half}, {ix.F(), half * i}, {ix.E(), half * i}};
  cols[ix.F()] = {{ix.H(), half}, {ix.F(), -half * i}, {ix.E(), -half * i}};
  for (unsigned r = 1; r <= N; ++r) {
    // te = (f + i e)/2, tf = (f - i e)/2
    cols[ix.e(r)] = {{ix.f(r), half}, {ix.e(r), half * i}};
    cols[ix.f(r)] = {{ix.f(r), half}, {ix.e(r), -half * i}};
    for (unsigned s = r; s <= N; ++s) cols[ix.Z(r, s)] = {{ix.Z(r, s), half * i}};
  }
  return cols;
}

}  // namespace

LinearLieMap theta(unsigned N) { return theta_on(N, BasisKind::standard); }
LinearLieMap theta_tilde(unsigned N) { return theta_on(N, BasisKind::tilde); }

LinearLieMap tau(unsigned N) {
  auto p = make_jacobi(N, BasisKind::standard);
  return LinearLieMap(p, p, tilde_in_standard(N), true);
}

LinearLieMap basis_change(const PresentationPtr& from, const PresentationPtr& to) {
  if (from->rank() != to->rank() || from->rank() == 0) throw DomainError("basis change needs equal ranks");
  const unsigned N = from->rank();
  auto kind_ok = [](BasisKind k) { return k == BasisKind::standard || k == BasisKind::tilde; };
  if (!kind_ok(from->kind()) || !kind_ok(to->kind())) throw DomainError("basis change needs Jacobi presentations");
  if (from->size() != to->size()) throw DomainError("basis change between presentations of different size");
  if (from->kind() == to->kind()) return LinearLieMap(from, to, identity_map(from).images(), false);
  auto std_p = make_jacobi(N, BasisKind::standard);
  auto til_p = make_jacobi(N, BasisKind::tilde);
  // tilde -> standard has the tilde generators' coordinates as columns.
  LinearLieMap til_to_std(til_p, std_p, tilde_in_standard(N), false);
  if (from->kind() == BasisKind::tilde) return LinearLieMap(from, to, til_to_std.images(), true);
  return LinearLieMap(from, to, til_to_std.inverse().images(), true);
}

LinComb basis_convert(const LinComb& v, const LiePresentation& from, const LiePresentation& to) {
  if (from.kind() == to.kind()) return v;
  return basis_change(make_jacobi(from.rank(), from.kind()), make_jacobi(to.rank(), to.kind())).apply(v);
}

LinearLieMap mu_matrix(const Matrix& M) {
  const std::size_t N = M.size();
  if (N == 0) throw DomainError("empty matrix");
  for (const auto& row : M)
    if (row.size() != N) throw DomainError("matrix is not square");
  if (determinant(M).is_zero()) throw DomainError("mu_M needs an invertible matrix");
  auto p = make_jacobi(static_cast<unsigned>(N), BasisKind::tilde);
  JacobiIndex ix{static_cast<unsigned>(N)};
  std::vector<LinComb> imgs(p->size());
  imgs[ix.F()] = single(ix.F());
  imgs[ix.E()] = single(ix.E());
  imgs[ix.H()] = single(ix.H());
  for (unsigned r = 1; r <= N; ++r) {
    for (unsigned t = 1; t <= N; ++t) {
      add_to(imgs[ix.e(r)], single(ix.e(t), M[r - 1][t - 1]));
      add_to(imgs[ix.f(r)], single(ix.f(t), M[r - 1][t - 1]));
    }
    for (unsigned s = r; s <= N; ++s)
      for (unsigned t = 1; t <= N; ++t)
        for (unsigned u = 1; u <= N; ++u)
          add_to(imgs[ix.Z(r, s)], single(ix.Z(t, u), M[r - 1][t - 1] * M[s - 1][u - 1]));
  }
  return LinearLieMap(p, p, std::move(imgs), true);
}

LinearLieMap theta_sl2() {
  auto p = make_sl2();
  std::vector<LinComb> imgs(3);
  imgs[sl2_h()] = single(sl2_h(), -1);
  imgs[sl2_x()] = single(sl2_y(), -1);
  imgs[sl2_y()] = single(sl2_x(), -1);
  return LinearLieMap(p, p, std::move(imgs), true);
}

LinearLieMap mu_sl2(const GaussianRational& d) {
  if (d.is_zero()) throw DomainError("mu_d needs d != 0");
  auto p = make_sl2();
  std::vector<LinComb> imgs(3);
  imgs[sl2_h()] = single(sl2_h());
  imgs[sl2_x()] = single(sl2_x(), d);
  imgs[sl2_y()] = single(sl2_y(), d.inv());
  return LinearLieMap(p, p, std::move(imgs), true);
}

}  // namespace jacobi
