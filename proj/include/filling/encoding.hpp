#ifndef FILLING_ENCODING_HPP
#define FILLING_ENCODING_HPP

#include <string>
#include <string_view>

#include "filling/permutation.hpp"

namespace filling {

enum class Curve { alpha, beta };

/// An oriented arc of one of the two curves between consecutive crossings.
struct ArcLabel
{
  Curve curve = Curve::alpha;
  int index = 1;          // 1..n
  bool inverted = false;  // traversed against the curve orientation

  ArcLabel reversed() const { return {curve, index, !inverted}; }

  friend bool operator==(ArcLabel const &, ArcLabel const &) = default;
};

// Symbol layout for intersection number n:
//   2i - 1 -> alpha_i,  2i -> beta_i            (1 <= i <= n)
//   2n + j -> the reverse of the arc at symbol j (1 <= j <= 2n)

ArcLabel label_of(int symbol, int n);
int index_of(ArcLabel const &label, int n);

/// `a3`, `b2`, `a5'`.
std::string to_string(ArcLabel const &label);
ArcLabel parse_label(std::string_view token);

/// Reversal involution, j -> j + 2n (mod 4n).
Permutation make_Q(int n);

/// Advances every arc to the next arc of the same curve, same orientation.
Permutation make_tau(int n);

} // namespace filling

#endif // FILLING_ENCODING_HPP
