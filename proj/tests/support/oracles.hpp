#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed.

#include <functional>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "knotdom/alexander.hpp"
#include "knotdom/diagram.hpp"
#include "knotdom/laurent.hpp"

namespace oracle {

using knotdom::Integer;
using knotdom::LaurentPoly;

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int low = -4, int high = 4, long coeff = 9) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(low, high);
  std::uniform_int_distribution<long> c(-coeff, coeff);
  LaurentPoly::Terms terms;
  for (int i = count(rng); i > 0; --i) terms[exp(rng)] += c(rng);
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms = 4) {
  for (;;) {
    auto p = random_poly(rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

/// Schoolbook product on dense coefficient vectors.
inline LaurentPoly dense_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int la = a.min_degree(), lb = b.min_degree();
  std::vector<Integer> va(static_cast<std::size_t>(a.max_degree() - la + 1));
  std::vector<Integer> vb(static_cast<std::size_t>(b.max_degree() - lb + 1));
  for (const auto& [e, c] : a.terms()) va[static_cast<std::size_t>(e - la)] = c;
  for (const auto& [e, c] : b.terms()) vb[static_cast<std::size_t>(e - lb)] = c;
  std::vector<Integer> out(va.size() + vb.size() - 1);
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t j = 0; j < vb.size(); ++j) out[i + j] += va[i] * vb[j];
  LaurentPoly::Terms terms;
  for (std::size_t k = 0; k < out.size(); ++k) terms[static_cast<int>(k) + la + lb] = out[k];
  return LaurentPoly::from_terms(std::move(terms));
}

/// Laplace expansion along the first row.
inline LaurentPoly cofactor_determinant(const knotdom::PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    knotdom::PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * cofactor_determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

/// Number of connected components of the graph on arc labels 1..arcs.
inline int components(int arcs, const std::vector<std::pair<int, int>>& joins) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(arcs + 1));
  for (auto [x, y] : joins) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<bool> seen(static_cast<std::size_t>(arcs + 1), false);
  int count = 0;
  for (int s = 1; s <= arcs; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  return count;
}

/// Kauffman bracket by direct skein recursion <X> = A<A-smoothing> + A^-1<B-smoothing>.
inline LaurentPoly bracket(const knotdom::PDCode& pd) {
  const int n = pd.crossing_count();
  if (n == 0) return LaurentPoly(1);
  const LaurentPoly A = LaurentPoly::monomial(1, 1);
  const LaurentPoly A_inv = LaurentPoly::monomial(1, -1);
  const LaurentPoly d = -(LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2));
  std::vector<std::pair<int, int>> joins;
  std::function<LaurentPoly(int)> rec = [&](int i) -> LaurentPoly {
    if (i == n) {
      LaurentPoly r(1);
      for (int k = components(pd.arc_count(), joins); k > 1; --k) r *= d;
      return r;
    }
    const auto& x = pd.crossings()[static_cast<std::size_t>(i)];
    joins.push_back({x.a, x.b});
    joins.push_back({x.c, x.d});
    LaurentPoly left = rec(i + 1);
    joins.resize(joins.size() - 2);
    joins.push_back({x.a, x.d});
    joins.push_back({x.b, x.c});
    LaurentPoly right = rec(i + 1);
    joins.resize(joins.size() - 2);
    return A * left + A_inv * right;
  };
  return rec(0);
}

/// Jones polynomial from the recursive bracket, t = A^-4.
inline LaurentPoly jones(const knotdom::PDCode& pd) {
  int w = 0;
  for (int i = 0; i < pd.crossing_count(); ++i) w += pd.sign(i);
  LaurentPoly f = bracket(pd);
  LaurentPoly factor(1);
  const LaurentPoly minus_a3 = LaurentPoly::monomial(-1, 3);
  const LaurentPoly minus_a3_inv = LaurentPoly::monomial(-1, -3);
  for (int k = 0; k < std::abs(w); ++k) factor *= (w > 0 ? minus_a3_inv : minus_a3);
  f *= factor;
  LaurentPoly::Terms out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0) return {};
    out[-e / 4] = c;
  }
  return LaurentPoly::from_terms(std::move(out));
}

/// Random braid word whose closure is a knot.
inline knotdom::BraidWord random_knot_braid(std::mt19937_64& rng, int max_strands, int max_length) {
  std::uniform_int_distribution<int> strands(2, max_strands);
  for (;;) {
    knotdom::BraidWord w;
    w.strand_count = strands(rng);
    std::uniform_int_distribution<int> len(w.strand_count - 1, max_length);
    std::uniform_int_distribution<int> gen(1, w.strand_count - 1);
    std::bernoulli_distribution neg(0.5);
    for (int i = len(rng); i > 0; --i) w.letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
    // Knot iff the permutation is a single cycle.
    std::vector<int> perm(static_cast<std::size_t>(w.strand_count));
    for (int i = 0; i < w.strand_count; ++i) perm[i] = i;
    for (int l : w.letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
    int len_cycle = 1;
    for (int p = perm[0]; p != 0; p = perm[p]) ++len_cycle;
    if (len_cycle == w.strand_count) return w;
  }
}

inline bool palindromic(const LaurentPoly& p) {
  const int lo = p.min_degree(), hi = p.max_degree();
  for (int e = lo; e <= hi; ++e)
    if (p.coefficient(e) != p.coefficient(lo + hi - e)) return false;
  return true;
}

}  // namespace oracle
