#pragma once

#include <vector>

#include "knotdom/diagram.hpp"
#include "knotdom/laurent.hpp"

namespace knotdom {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Abelianized Fox Jacobian: one row per relation, one column per generator.
PolyMatrix fox_matrix(const WirtingerPresentation& presentation);

/// Fox matrix with one relation row and one generator column removed.
PolyMatrix alexander_matrix(const WirtingerPresentation& presentation, int deleted_row, int deleted_col);

/// Fraction-free (Bareiss) determinant. Rows are shifted into Z[t] first and
/// the shift is put back on the result. Every interior division is checked
/// to be exact.
LaurentPoly bareiss_determinant(PolyMatrix m);

/// Normalized Alexander polynomial. Deletes the last relation and the column
/// of the highest-numbered generator.
LaurentPoly alexander_polynomial(const PDCode& pd);
LaurentPoly alexander_polynomial(const PDCode& pd, int deleted_row, int deleted_col);

/// |Delta(-1)|.
Integer determinant_invariant(const LaurentPoly& delta);

LaurentPoly connected_sum_delta(const LaurentPoly& a, const LaurentPoly& b);

/// normalize(pattern(t) * companion(t^winding)).
LaurentPoly satellite_delta(const LaurentPoly& pattern, const LaurentPoly& companion, int winding);

inline constexpr int kJonesCrossingBudget = 24;

/// Unnormalized Kauffman bracket <D> in the variable A (loop value -A^2 - A^-2).
/// `threads` splits the state sum into partial sums merged in a fixed order.
LaurentPoly kauffman_bracket(const PDCode& pd, unsigned threads = 1);

/// Jones polynomial in t from (-A^3)^-w <D> with t = A^-4. Signs follow the
/// PD convention of PDCode, so the answer distinguishes mirror images.
LaurentPoly jones_polynomial(const PDCode& pd, unsigned threads = 1);

}  // namespace knotdom
