#include "knotdom/diagram.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotdom {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string crossing_text(const Crossing& x) {
  std::ostringstream os;
  os << "X(" << x.a << ',' << x.b << ',' << x.c << ',' << x.d << ')';
  return os.str();
}

}  // namespace

PDCode::PDCode(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int n = crossing_count();
  const int arcs = 2 * n;
  auto next = [arcs](int label) { return label % arcs + 1; };

  std::vector<int> seen(static_cast<std::size_t>(arcs + 1), 0);
  for (const auto& x : crossings_) {
    for (int label : x.arcs()) {
      if (label < 1 || label > arcs)
        throw DiagramError(crossing_text(x) + ": arc label " + std::to_string(label) + " outside 1.." +
                           std::to_string(arcs));
      ++seen[label];
    }
  }
  for (int label = 1; label <= arcs; ++label) {
    if (seen[label] != 2)
      throw DiagramError("arc " + std::to_string(label) + " appears " + std::to_string(seen[label]) +
                         " times (expected 2)");
  }

  std::vector<int> entered(seen.size(), 0), left(seen.size(), 0);
  signs_.reserve(crossings_.size());
  for (const auto& x : crossings_) {
    if (x.c != next(x.a))
      throw DiagramError(crossing_text(x) + ": under-strand must exit at a+1 = " + std::to_string(next(x.a)));
    const bool runs_d_to_b = x.b == next(x.d);
    const bool runs_b_to_d = x.d == next(x.b);
    if (!runs_d_to_b && !runs_b_to_d)
      throw DiagramError(crossing_text(x) + ": over-strand labels are not consecutive");
    int s;
    if (runs_d_to_b && runs_b_to_d) {
      // Only with two arcs: the arc leaving the under-pass is the one re-entering on top.
      s = x.d == x.c ? 1 : -1;
    } else {
      s = runs_d_to_b ? 1 : -1;
    }
    signs_.push_back(s);
    ++entered[x.a];
    ++left[x.c];
    ++entered[s > 0 ? x.d : x.b];
    ++left[s > 0 ? x.b : x.d];
  }
  for (int label = 1; label <= arcs; ++label) {
    if (entered[label] != 1 || left[label] != 1)
      throw DiagramError("arc " + std::to_string(label) + " is not labeled consecutively along the orientation");
  }
}

int PDCode::writhe() const noexcept { return std::accumulate(signs_.begin(), signs_.end(), 0); }

int PDCode::over_in(int i) const {
  const auto& x = crossings_.at(i);
  return signs_[i] > 0 ? x.d : x.b;
}

int PDCode::over_out(int i) const {
  const auto& x = crossings_.at(i);
  return signs_[i] > 0 ? x.b : x.d;
}

std::string PDCode::to_string() const {
  std::string out;
  for (const auto& x : crossings_) {
    if (!out.empty()) out += ' ';
    out += crossing_text(x);
  }
  return out;
}

PDCode parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> DiagramError {
    return DiagramError("PD syntax error at offset " + std::to_string(pos) + ": " + what);
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) throw fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a positive integer");
    if (pos - start > 9) throw fail("arc label too large");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  skip_ws();
  while (pos < text.size()) {
    expect('X');
    expect('(');
    Crossing x{};
    x.a = number();
    expect(',');
    x.b = number();
    expect(',');
    x.c = number();
    expect(',');
    x.d = number();
    expect(')');
    crossings.push_back(x);
    skip_ws();
  }
  return PDCode(std::move(crossings));
}

PDCode mirror(const PDCode& pd) {
  std::vector<Crossing> out;
  out.reserve(pd.crossings().size());
  for (int i = 0; i < pd.crossing_count(); ++i) {
    const auto& x = pd.crossings()[i];
    out.push_back(pd.sign(i) > 0 ? Crossing{x.d, x.a, x.b, x.c} : Crossing{x.b, x.c, x.d, x.a});
  }
  return PDCode(std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strand_count) + ":";
  for (int l : letters) out += " " + std::to_string(l);
  return out;
}

BraidWord parse_braid(std::string_view text) {
  std::string s(text);
  std::istringstream in(s);
  char tag = 0;
  in >> tag;
  if (tag != 'B') throw DiagramError("braid must start with 'B<n>:'");
  BraidWord braid;
  if (!(in >> braid.strand_count)) throw DiagramError("braid: missing strand count");
  char colon = 0;
  if (!(in >> colon) || colon != ':') throw DiagramError("braid: expected ':' after strand count");
  if (braid.strand_count < 1) throw DiagramError("braid: strand count must be >= 1");
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DiagramError("braid: bad letter '" + token + "'");
    }
    if (used != token.size()) throw DiagramError("braid: bad letter '" + token + "'");
    if (letter == 0 || std::abs(letter) >= braid.strand_count)
      throw DiagramError("braid: letter " + token + " needs 1 <= |letter| < " + std::to_string(braid.strand_count));
    braid.letters.push_back(letter);
  }
  return braid;
}

int closure_components(const BraidWord& braid) {
  const int m = braid.strand_count;
  std::vector<int> at(static_cast<std::size_t>(m));  // at[position] = strand currently there
  std::iota(at.begin(), at.end(), 0);
  for (int letter : braid.letters) {
    int i = std::abs(letter) - 1;
    std::swap(at[i], at[i + 1]);
  }
  UnionFind uf(m);
  int components = m;
  for (int p = 0; p < m; ++p)
    if (uf.unite(at[p], p)) --components;
  return components;
}

PDCode braid_to_pd(const BraidWord& braid) {
  for (int letter : braid.letters)
    if (letter == 0 || std::abs(letter) >= braid.strand_count)
      throw DiagramError("braid letter " + std::to_string(letter) + " out of range");
  const int components = closure_components(braid);
  if (components != 1)
    throw DiagramError("braid closure has " + std::to_string(components) + " components; only knots are supported");
  if (braid.letters.empty()) return PDCode();

  const int m = braid.strand_count;
  struct Slots {
    int tl, tr, bl, br, sign;
  };
  std::vector<int> top(static_cast<std::size_t>(m)), cur(static_cast<std::size_t>(m));
  int segments = 0;
  for (int p = 0; p < m; ++p) top[p] = cur[p] = segments++;
  std::vector<Slots> slots;
  for (int letter : braid.letters) {
    const int i = std::abs(letter) - 1;
    Slots s{cur[i], cur[i + 1], segments, segments + 1, letter > 0 ? 1 : -1};
    segments += 2;
    cur[i] = s.bl;
    cur[i + 1] = s.br;
    slots.push_back(s);
  }
  UnionFind uf(segments);
  for (int p = 0; p < m; ++p) uf.unite(cur[p], top[p]);

  // Each edge enters exactly one crossing slot; strands run TL -> BR and TR -> BL.
  std::map<int, std::pair<int, bool>> entry;  // edge root -> (crossing, enters at TL)
  for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
    entry[uf.find(slots[k].tl)] = {k, true};
    entry[uf.find(slots[k].tr)] = {k, false};
  }
  std::map<int, int> label;
  int edge = uf.find(top[0]);
  for (int next_label = 1; !label.contains(edge); ++next_label) {
    label[edge] = next_label;
    const auto [k, at_left] = entry.at(edge);
    edge = uf.find(at_left ? slots[k].br : slots[k].bl);
  }
  if (label.size() != 2 * slots.size()) throw DiagramError("braid closure traversal did not visit every arc");

  std::vector<Crossing> crossings;
  for (const auto& s : slots) {
    const int tl = label.at(uf.find(s.tl)), tr = label.at(uf.find(s.tr));
    const int bl = label.at(uf.find(s.bl)), br = label.at(uf.find(s.br));
    crossings.push_back(s.sign > 0 ? Crossing{tl, bl, br, tr} : Crossing{tr, tl, bl, br});
  }
  return PDCode(std::move(crossings));
}

WirtingerPresentation wirtinger(const PDCode& pd) {
  WirtingerPresentation out;
  const int arcs = pd.arc_count();
  if (arcs == 0) return out;
  UnionFind uf(arcs + 1);
  for (const auto& x : pd.crossings()) uf.unite(x.b, x.d);
  std::vector<int> generator(static_cast<std::size_t>(arcs + 1), -1);
  int count = 0;
  for (int label = 1; label <= arcs; ++label) {
    int root = uf.find(label);
    if (generator[root] < 0) generator[root] = count++;
    generator[label] = generator[root];
  }
  out.generator_count = count;
  for (int i = 0; i < pd.crossing_count(); ++i) {
    const auto& x = pd.crossings()[i];
    out.relations.push_back({generator[x.c], generator[x.b], generator[x.a], pd.sign(i)});
  }
  return out;
}

int abelianized_rank(const WirtingerPresentation& presentation) {
  const int cols = presentation.generator_count;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& r : presentation.relations) {
    std::vector<mpq_class> row(static_cast<std::size_t>(cols), 0);
    row[r.input] += 1;
    row[r.output] -= 1;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      mpq_class f = rows[i][col] / rows[rank][col];
      for (int j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

SeifertCircles seifert_circles(const PDCode& pd) {
  const int n = pd.crossing_count();
  if (n == 0) return {1, 0};
  const int arcs = pd.arc_count();

  UnionFind components(n);
  std::vector<int> first_seen(static_cast<std::size_t>(arcs + 1), -1);
  for (int i = 0; i < n; ++i) {
    for (int label : pd.crossings()[i].arcs()) {
      if (first_seen[label] < 0)
        first_seen[label] = i;
      else
        components.unite(first_seen[label], i);
    }
  }
  for (int i = 1; i < n; ++i)
    if (components.find(i) != components.find(0)) throw DiagramError("diagram is disconnected");

  // Oriented smoothing: each incoming arc continues on the other strand's outgoing arc.
  std::vector<int> after(static_cast<std::size_t>(arcs + 1), 0);
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings()[i];
    after[x.a] = pd.over_out(i);
    after[pd.over_in(i)] = x.c;
  }
  std::vector<bool> visited(static_cast<std::size_t>(arcs + 1), false);
  int circles = 0;
  for (int label = 1; label <= arcs; ++label) {
    if (visited[label]) continue;
    ++circles;
    for (int e = label; !visited[e]; e = after[e]) visited[e] = true;
  }
  const int twice_genus = n - circles + 1;
  if (twice_genus % 2 != 0) throw DiagramError("Seifert circle count has the wrong parity; diagram is not planar");
  return {circles, twice_genus / 2};
}

}  // namespace knotdom
