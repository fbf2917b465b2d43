#ifndef FILLING_TABLES_HPP
#define FILLING_TABLES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "filling/search.hpp"

namespace filling {

/// The sphere with at most three punctures carries no filling pair.
class NoFillingPair : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Minimal intersection number i_{g,p} of a filling pair on S_{g,p}.
/// Throws NoFillingPair for g = 0, p <= 3.
int min_intersection(int genus, int punctures);

struct CrossValidationRow
{
  int n = 0;
  int faces = 0;          // n + 2 - 2g
  bool feasible = false;  // faces >= max(1, p)
  bool nonempty = false;
  std::uint64_t nodes = 0;
};

struct CrossValidationReport
{
  int genus = 0;
  int punctures = 0;
  int n_max = 0;
  std::vector<CrossValidationRow> rows;
  std::optional<int> smallest_nonempty;
  std::optional<int> table_value;  // empty when no filling pair exists

  /// Table and search agree on every n <= n_max.
  bool consistent() const;
};

/// Runs an existence search for every n in 1..n_max. Searches for different n
/// run concurrently. Propagates ResourceLimitExceeded.
CrossValidationReport cross_validate(int genus, int punctures, int n_max,
                                     SearchQuery const &limits = {});

} // namespace filling

#endif // FILLING_TABLES_HPP
