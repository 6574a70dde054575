#include "jacobi/linalg.hpp"

#include <algorithm>
#include <set>

namespace jacobi {

namespace {

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return (a * b).exact_div(gcd(a, b));
}

void strip_content(std::vector<ParamPoly>& row) {
  ParamPoly g;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return;
  // Normalize so the first nonzero entry is monic; keeps output deterministic.
  GaussianRational lead;
  for (const auto& x : row)
    if (!x.is_zero()) {
      lead = x.leading_coefficient();
      break;
    }
  if (g.is_constant()) {
    if (lead.is_one()) return;
    GaussianRational s = lead.inv();
    for (auto& x : row) x *= s;
    return;
  }
  for (auto& x : row) x = x.exact_div(g);
  for (const auto& x : row)
    if (!x.is_zero()) {
      lead = x.leading_coefficient();
      break;
    }
  GaussianRational s = lead.inv();
  for (auto& x : row) x *= s;
}

std::size_t cost(const ParamPoly& p) { return p.terms().size() * (1 + p.total_degree()); }

}  // namespace

Echelon echelon(const ScalarMatrix& a, std::size_t cols) {
  Echelon out;
  out.cols = cols;
  PolyMatrix work;
  work.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != cols) throw DomainError("ragged matrix");
    ParamPoly den(1);
    bool any = false;
    for (const auto& x : row) {
      if (x.is_zero()) continue;
      any = true;
      den = lcm(den, x.den());
    }
    if (!any) continue;
    std::vector<ParamPoly> prow(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j].is_zero()) continue;
      prow[j] = row[j].den() == den ? row[j].num() : row[j].num() * den.exact_div(row[j].den());
    }
    strip_content(prow);
    work.push_back(std::move(prow));
  }
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < work.size(); ++col) {
    // Cheapest nonzero pivot, ties broken by position.
    std::size_t piv = work.size();
    for (std::size_t i = next; i < work.size(); ++i) {
      if (work[i][col].is_zero()) continue;
      if (piv == work.size() || cost(work[i][col]) < cost(work[piv][col])) piv = i;
    }
    if (piv == work.size()) continue;
    std::swap(work[piv], work[next]);
    const auto& prow = work[next];
    for (std::size_t i = next + 1; i < work.size(); ++i) {
      if (work[i][col].is_zero()) continue;
      ParamPoly g = gcd(prow[col], work[i][col]);
      ParamPoly mp = prow[col].exact_div(g);
      ParamPoly mi = work[i][col].exact_div(g);
      for (std::size_t j = col; j < cols; ++j) {
        if (prow[j].is_zero() && work[i][j].is_zero()) continue;
        work[i][j] = mp * work[i][j] - mi * prow[j];
      }
      strip_content(work[i]);
    }
    out.pivots.push_back(col);
    out.rows.push_back(work[next]);
    ++next;
  }
  return out;
}

std::size_t rank(const ScalarMatrix& a, std::size_t cols) { return echelon(a, cols).pivots.size(); }

std::vector<ScalarRow> nullspace(const ScalarMatrix& a, std::size_t cols) {
  Echelon ech = echelon(a, cols);
  const std::size_t r = ech.rows.size();
  // Reduced form over the fraction field.
  ScalarMatrix red(r, ScalarRow(cols));
  for (std::size_t i = r; i-- > 0;) {
    ParamScalar inv = ParamScalar(ech.rows[i][ech.pivots[i]]).inv();
    for (std::size_t j = 0; j < cols; ++j)
      if (!ech.rows[i][j].is_zero()) red[i][j] = ParamScalar(ech.rows[i][j]) * inv;
    for (std::size_t k = i + 1; k < r; ++k) {
      ParamScalar f = red[i][ech.pivots[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!red[k][j].is_zero()) red[i][j] -= f * red[k][j];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<ScalarRow> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ScalarRow v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[ech.pivots[i]] = -red[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

ParamPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return ParamPoly(1);
  GaussianRational sign = 1;
  ParamPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return ParamPoly();
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = ParamPoly();
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * sign;
}

ParamPoly resultant(const ParamPoly& a, const ParamPoly& b, Param p) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  auto ca = a.coefficients_in(p);
  auto cb = b.coefficients_in(p);
  const std::size_t da = ca.size() - 1, db = cb.size() - 1;
  if (da == 0) return a.pow(static_cast<unsigned>(db));
  if (db == 0) return b.pow(static_cast<unsigned>(da));
  const std::size_t n = da + db;
  PolyMatrix s(n, std::vector<ParamPoly>(n));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) s[i][i + j] = ca[da - j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) s[db + i][i + j] = cb[db - j];
  return determinant(std::move(s));
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  out = small;
  out.insert(out.end(), large.rbegin(), large.rend());
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const ParamPoly& poly, Param p) {
  for (std::size_t j = 0; j < kParamCount; ++j) {
    auto q = static_cast<Param>(j);
    if (q != p && poly.uses(q)) throw DomainError("rational_roots needs a univariate polynomial");
  }
  if (poly.is_zero()) throw DomainError("the zero polynomial has every root");
  auto coeffs = poly.coefficients_in(p);
  std::vector<mpq_class> q;
  for (const auto& c : coeffs) {
    auto v = c.constant_value();
    if (!v || !v->is_real()) throw DomainError("rational_roots needs real rational coefficients");
    q.push_back(v->re());
  }
  std::set<mpq_class> roots;
  std::size_t low = 0;
  while (low < q.size() && sgn(q[low]) == 0) ++low;
  if (low > 0) roots.insert(0);
  std::vector<mpq_class> trimmed(q.begin() + static_cast<std::ptrdiff_t>(low), q.end());
  if (trimmed.size() > 1) {
    mpz_class l = 1;
    for (const auto& c : trimmed) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : trimmed) z.push_back(mpz_class(c * l));
    auto eval = [&](const mpq_class& x) {
      mpq_class acc = 0;
      for (std::size_t i = z.size(); i-- > 0;) acc = acc * x + z[i];
      return acc;
    };
    for (const auto& num : divisors(z.front())) {
      for (const auto& den : divisors(z.back())) {
        for (int s : {1, -1}) {
          mpq_class x(num * s, den);
          x.canonicalize();
          if (sgn(eval(x)) == 0) roots.insert(x);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace jacobi
