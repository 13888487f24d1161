#include "knotdom/alexander.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace knotdom {

PolyMatrix fox_matrix(const WirtingerPresentation& presentation) {
  const auto cols = static_cast<std::size_t>(presentation.generator_count);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  PolyMatrix m;
  m.reserve(presentation.relations.size());
  for (const auto& r : presentation.relations) {
    std::vector<LaurentPoly> row(cols);
    // d/dx of x_over^s x_in x_over^-s x_out^-1 with every generator sent to t.
    if (r.sign > 0) {
      row[r.over] += LaurentPoly(1) - t;
      row[r.input] += t;
    } else {
      row[r.over] += LaurentPoly(1) - t_inv;
      row[r.input] += t_inv;
    }
    row[r.output] -= LaurentPoly(1);
    m.push_back(std::move(row));
  }
  return m;
}

PolyMatrix alexander_matrix(const WirtingerPresentation& presentation, int deleted_row, int deleted_col) {
  PolyMatrix fox = fox_matrix(presentation);
  const int rows = static_cast<int>(fox.size());
  const int cols = presentation.generator_count;
  if (rows == 0) return {};
  if (deleted_row < 0 || deleted_row >= rows || deleted_col < 0 || deleted_col >= cols)
    throw std::out_of_range("alexander_matrix: deleted row/column out of range");
  PolyMatrix m;
  for (int i = 0; i < rows; ++i) {
    if (i == deleted_row) continue;
    std::vector<LaurentPoly> row;
    for (int j = 0; j < cols; ++j)
      if (j != deleted_col) row.push_back(std::move(fox[i][j]));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");

  // Move every row into Z[t]; the shifts are undone on the result.
  int total_shift = 0;
  for (auto& row : m) {
    int low = 0;
    bool any = false;
    for (const auto& entry : row) {
      if (entry.is_zero()) continue;
      low = any ? std::min(low, entry.min_degree()) : entry.min_degree();
      any = true;
    }
    if (!any) return LaurentPoly();
    for (auto& entry : row) entry = entry.shifted(-low);
    total_shift += low;
  }

  int sign = 1;
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(k) + 1, m.end(),
                                [k](const auto& row) { return !row[k].is_zero(); });
      if (pivot == m.end()) return LaurentPoly();
      std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(k), pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto quotient = divide_exact(numerator, previous);
        if (!quotient) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*quotient);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1].shifted(total_shift);
  return sign < 0 ? -det : det;
}

LaurentPoly alexander_polynomial(const PDCode& pd, int deleted_row, int deleted_col) {
  const auto presentation = wirtinger(pd);
  if (presentation.relations.empty()) return LaurentPoly(1);
  return normalize(bareiss_determinant(alexander_matrix(presentation, deleted_row, deleted_col)));
}

LaurentPoly alexander_polynomial(const PDCode& pd) {
  const auto presentation = wirtinger(pd);
  if (presentation.relations.empty()) return LaurentPoly(1);
  const int last_row = static_cast<int>(presentation.relations.size()) - 1;
  return normalize(
      bareiss_determinant(alexander_matrix(presentation, last_row, presentation.generator_count - 1)));
}

Integer determinant_invariant(const LaurentPoly& delta) {
  Rational value = eval_int(delta, Integer(-1));
  return abs(value.get_num());
}

LaurentPoly connected_sum_delta(const LaurentPoly& a, const LaurentPoly& b) { return normalize(a * b); }

LaurentPoly satellite_delta(const LaurentPoly& pattern, const LaurentPoly& companion, int winding) {
  if (winding < 0) throw std::invalid_argument("satellite_delta: winding number must be >= 0");
  return normalize(pattern * companion.substitute_power(winding));
}

namespace {

// counts[b][loops]: number of states with b B-smoothings and the given loop count.
using StateCounts = std::vector<std::vector<std::uint64_t>>;

void count_states(const PDCode& pd, std::uint64_t first, std::uint64_t last, StateCounts& counts) {
  const int n = pd.crossing_count();
  const int arcs = pd.arc_count();
  std::vector<int> parent(static_cast<std::size_t>(arcs + 1));
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint64_t state = first; state < last; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = arcs;
    int b_count = 0;
    for (int i = 0; i < n; ++i) {
      const auto& x = pd.crossings()[i];
      const bool b_smoothing = (state >> i) & 1U;
      b_count += b_smoothing;
      const int pairs[2][2] = {{x.a, b_smoothing ? x.d : x.b}, {b_smoothing ? x.b : x.c, b_smoothing ? x.c : x.d}};
      for (const auto& p : pairs) {
        int r0 = find(p[0]), r1 = find(p[1]);
        if (r0 != r1) {
          parent[r0] = r1;
          --loops;
        }
      }
    }
    ++counts[b_count][loops];
  }
}

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd, unsigned threads) {
  const int n = pd.crossing_count();
  if (n > kJonesCrossingBudget)
    throw std::length_error("state sum limited to " + std::to_string(kJonesCrossingBudget) + " crossings, got " +
                            std::to_string(n));
  if (n == 0) return LaurentPoly(1);

  const std::uint64_t total = std::uint64_t{1} << n;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  const StateCounts empty(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(2 * n + 1), 0));
  std::vector<StateCounts> partial(threads, empty);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = total * w / threads;
      const std::uint64_t last = total * (w + 1) / threads;
      workers.emplace_back([&pd, first, last, &slot = partial[w]] { count_states(pd, first, last, slot); });
    }
  }
  StateCounts counts = empty;
  for (const auto& part : partial)
    for (std::size_t b = 0; b < part.size(); ++b)
      for (std::size_t l = 0; l < part[b].size(); ++l) counts[b][l] += part[b][l];

  const LaurentPoly loop_value = -(LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2));
  std::vector<LaurentPoly> loop_powers{LaurentPoly(1)};
  for (int l = 1; l <= 2 * n; ++l) loop_powers.push_back(loop_powers.back() * loop_value);

  LaurentPoly bracket;
  for (int b = 0; b <= n; ++b) {
    for (int loops = 1; loops <= 2 * n; ++loops) {
      const std::uint64_t c = counts[b][loops];
      if (c == 0) continue;
      Integer coefficient;
      mpz_set_ui(coefficient.get_mpz_t(), static_cast<unsigned long>(c));
      bracket += LaurentPoly::monomial(coefficient, n - 2 * b) * loop_powers[loops - 1];
    }
  }
  return bracket;
}

LaurentPoly jones_polynomial(const PDCode& pd, unsigned threads) {
  const int w = pd.writhe();
  LaurentPoly f = kauffman_bracket(pd, threads).shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  LaurentPoly::Terms in_t;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0) throw std::logic_error("writhe-normalized bracket has an exponent not divisible by 4");
    in_t.emplace(-e / 4, c);
  }
  return LaurentPoly::from_terms(std::move(in_t));
}

}  // namespace knotdom
