#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <optional>
#include <vector>

#include "jacobi/sl2_reps.hpp"

namespace oracle {

using jacobi::GaussianRational;
using G = GaussianRational;

inline G alpha_at(const G& c, const G& k, const G& mu) {
  return G(1, 4) * (mu - k + G(1, 2)) * (mu - k + G(3, 2)) * (c - mu * mu - G(2) * mu);
}
inline G beta_at(const G& c, const G& k, const G& mu) {
  return G(1, 4) * (mu - k - G(1, 2)) * (mu - k - G(3, 2)) * (c - mu * mu + G(2) * mu);
}

// Lowest weight: first zero of QP going down from lambda; highest: first zero of PQ going up.
inline jacobi::DeltaSet delta_by_scan(const G& c, const G& lambda, const G& k, long reach = 200) {
  jacobi::DeltaSet d;
  for (long j = 0; j < reach && !d.m_minus; ++j)
    if (beta_at(c, k, lambda - G(2 * j)).is_zero()) d.m_minus = lambda - G(2 * j);
  for (long j = 0; j < reach && !d.m_plus; ++j)
    if (alpha_at(c, k, lambda + G(2 * j)).is_zero()) d.m_plus = lambda + G(2 * j);
  return d;
}

using Mat = std::vector<std::vector<G>>;

inline Mat zero(std::size_t n) { return Mat(n, std::vector<G>(n, G(0))); }
inline Mat mul(const Mat& a, const Mat& b) {
  Mat c = zero(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < a.size(); ++l)
      if (!a[i][l].is_zero())
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// L(n) in the basis v_j = y^j v_0 of weight n - 2j; column j is the image of v_j.
struct LMatrices {
  Mat x, y, h;
};
inline LMatrices l_module(unsigned n) {
  const std::size_t d = n + 1;
  LMatrices m{zero(d), zero(d), zero(d)};
  for (std::size_t j = 0; j < d; ++j) {
    m.h[j][j] = G(static_cast<long>(n) - 2 * static_cast<long>(j));
    if (j + 1 < d) m.y[j + 1][j] = G(1);
    if (j > 0) m.x[j - 1][j] = G(static_cast<long>(j * (n - j + 1)));
  }
  return m;
}

/// Action of an element of U(sl2) with constant coefficients on L(n).
inline Mat act(const jacobi::UeaElement& u, const LMatrices& L) {
  const auto& gens = u.algebra()->presentation()->generators();
  const std::size_t d = L.h.size();
  Mat out = zero(d);
  for (const auto& [mono, coef] : u.terms()) {
    Mat t = zero(d);
    for (std::size_t i = 0; i < d; ++i) t[i][i] = G(1);
    for (std::size_t g = 0; g < mono.size(); ++g) {
      const Mat& base = gens[g].kind == jacobi::GenKind::x ? L.x : gens[g].kind == jacobi::GenKind::y ? L.y : L.h;
      for (unsigned e = 0; e < mono[g]; ++e) t = mul(t, base);
    }
    const G c = *coef.constant_value();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i][j] += c * t[i][j];
  }
  return out;
}

/// Weight intervals of L(n) invariant under iota_k(P), iota_k(Q): upper ones start
/// where P vanishes, lower ones end where Q vanishes.
inline std::vector<jacobi::Interval> invariant_intervals(unsigned n, const G& k) {
  const LMatrices L = l_module(n);
  const auto img = jacobi::iota_generators(jacobi::IdoConfig::at(1, k));
  const Mat P = act(img.P, L), Q = act(img.Q, L);
  std::vector<jacobi::Interval> out;
  const G top(static_cast<long>(n));
  for (std::size_t j = 0; j + 1 < n + 1; ++j) {
    const G w = top - G(2 * static_cast<long>(j));
    if (P[j + 1][j].is_zero()) out.push_back({w, top});
    if (Q[j][j + 1].is_zero()) out.push_back({-top, w - G(2)});
  }
  return out;
}

}  // namespace oracle
