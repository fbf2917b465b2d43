#ifndef FILLING_PERMUTATION_HPP
#define FILLING_PERMUTATION_HPP

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace filling {

/// Malformed cycle notation or arc label text.
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Disjoint cycles covering {1, ..., degree}. Fixed points are length-1 cycles.
///
/// Values produced by to_cycles() are canonical: every cycle starts at its
/// smallest symbol and cycles are ordered by that symbol.
struct CycleDecomposition
{
  int degree = 0;
  std::vector<std::vector<int>> cycles;

  friend bool operator==(CycleDecomposition const &, CycleDecomposition const &) = default;
};

/// A bijection of {1, ..., m}. Symbols are 1-based in every public call.
class Permutation
{
public:
  /// `images[j - 1]` is the image of j. Throws std::invalid_argument unless
  /// the sequence is a bijection of {1, ..., images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(_images.size()); }

  int operator()(int j) const { return _images[static_cast<std::size_t>(j - 1)]; }

  /// One-line notation: element i is the image of i + 1.
  std::span<int const> images() const { return _images; }

  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;

  /// Degree first, then lexicographic on the one-line notation.
  friend std::strong_ordering operator<=>(Permutation const &lhs, Permutation const &rhs);

private:
  std::vector<int> _images;
};

/// result(j) = outer(inner(j)).
Permutation compose(Permutation const &outer, Permutation const &inner);

Permutation inverse(Permutation const &p);

/// Accepts cycles in any rotation and order; symbols missing from every cycle
/// become fixed points.
Permutation from_cycles(CycleDecomposition const &d);

CycleDecomposition to_cycles(Permutation const &p);

/// True iff every symbol changes parity. Throws for odd degree.
bool is_parity_reversing(Permutation const &p);

int cycle_count(Permutation const &p);
int two_cycle_count(Permutation const &p);

/// Parses `(1,2,19,14)(3,8)...`. Whitespace is ignored and fixed points may be
/// omitted. Without an explicit degree the degree is the smallest multiple of
/// four that covers the largest symbol.
Permutation parse_cycles(std::string_view text, std::optional<int> degree = std::nullopt);

/// Canonical cycle notation, fixed points included.
std::string format_cycles(Permutation const &p);

} // namespace filling

#endif // FILLING_PERMUTATION_HPP
