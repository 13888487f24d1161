#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotdom {

/// Malformed or invalid diagram input (PD text, braid text, or PD invariants).
class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One PD crossing: arc labels counterclockwise, starting at the incoming
/// under-strand. Labels are 1-based.
struct Crossing {
  int a, b, c, d;

  std::array<int, 4> arcs() const { return {a, b, c, d}; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/**
 * Validated planar-diagram code of a knot.
 *
 * Arcs 1..2n follow the orientation (arc k is followed by k+1, wrapping 2n to
 * 1), every label occurs exactly twice, and each crossing's under-strand runs
 * from position a to position c = a+1. The over-strand occupies b and d; the
 * crossing is positive when it runs d -> b (b = d+1) and negative when it runs
 * b -> d. The empty code is the 0-crossing unknot.
 */
class PDCode {
 public:
  PDCode() = default;
  /// Throws DiagramError if the crossings violate any PD invariant.
  explicit PDCode(std::vector<Crossing> crossings);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  /// +1 or -1.
  int sign(int crossing) const { return signs_.at(crossing); }
  int writhe() const noexcept;
  /// Arc label on which the over-strand enters / leaves crossing i.
  int over_in(int crossing) const;
  int over_out(int crossing) const;

  std::string to_string() const;
  friend bool operator==(const PDCode& x, const PDCode& y) { return x.crossings_ == y.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
};

/// Whitespace-separated `X(a,b,c,d)` tokens. Empty text is the unknot.
PDCode parse_pd(std::string_view text);

/// Same knot type with every crossing switched (the mirror image).
PDCode mirror(const PDCode& pd);

struct BraidWord {
  int strand_count = 1;
  /// Letter i is sigma_|i|, with sign(i) the crossing sign.
  std::vector<int> letters;

  std::string to_string() const;
};

/// `B<n>: i1 i2 ...`.
BraidWord parse_braid(std::string_view text);

/// Number of cycles of the underlying permutation (components of the closure).
int closure_components(const BraidWord& braid);

/// PD code of the trace closure. Throws DiagramError unless the closure is a knot.
PDCode braid_to_pd(const BraidWord& braid);

/// x_output = x_over^sign * x_input * x_over^-sign, indices into the generators.
struct WirtingerRelation {
  int output;
  int over;
  int input;
  int sign;
};

struct WirtingerPresentation {
  int generator_count = 1;
  std::vector<WirtingerRelation> relations;
};

/// One meridian generator per over-arc, numbered by smallest PD arc label.
WirtingerPresentation wirtinger(const PDCode& pd);

/// Rank over Z of the relation matrix after sending every generator to the
/// same class. For a knot this is generator_count - 1.
int abelianized_rank(const WirtingerPresentation& presentation);

struct SeifertCircles {
  int circle_count;
  int genus_upper;
};

/// Oriented smoothing of every crossing; genus bound (n - s + 1) / 2.
SeifertCircles seifert_circles(const PDCode& pd);

}  // namespace knotdom
