#ifndef FILLING_SEARCH_HPP
#define FILLING_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filling/permutation.hpp"

namespace filling {

struct SearchQuery
{
  int genus = 0;
  int punctures = 0;
  int n = 1;

  bool dedup = false;             // quotient by the basepoint symmetries
  std::optional<std::size_t> limit;
  bool naive = false;             // brute force over the whole symmetric group
  bool symmetry_pruning = false;  // fix the orbit of sigma(1) during search
  unsigned threads = 1;

  std::uint64_t max_nodes = 1'000'000'000;
  std::chrono::milliseconds max_time = std::chrono::minutes(10);

  int face_count() const { return n + 2 - 2 * genus; }
};

struct SearchResult
{
  /// Sorted. Canonical forms when the query asked for dedup.
  std::vector<Permutation> solutions;
  std::size_t raw_count = 0;
  std::size_t dedup_count = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
  /// Set when the query cannot have solutions for counting reasons alone.
  std::optional<std::string> vacuous;
};

/// Node or time cap hit; partial results are discarded.
class ResourceLimitExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Every sigma in S_{4n} satisfying all conditions for a filling pair on
/// S_{g,p} with n crossings. Assigning sigma(j) = k forces
/// sigma(Q(k)) = tau(j), so each guess fixes up to four values.
SearchResult enumerate(SearchQuery const &q);

/// Filters every permutation of degree 4n through validate(); 4n <= 8 only.
SearchResult naive_enumerate(SearchQuery const &q);

/// Generators advancing the alpha (resp. beta) arc numbering by one, i.e. a
/// change of basepoint on that curve. Both commute with Q and tau.
std::vector<Permutation> symmetry_group(int n);

/// Lexicographically smallest conjugate pi sigma pi^-1 over the group of
/// order n^2 generated by symmetry_group(n).
Permutation canonical_form(Permutation const &sigma);

} // namespace filling

#endif // FILLING_SEARCH_HPP
