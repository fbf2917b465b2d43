#include "filling/tables.hpp"

#include <future>
#include <string>

namespace filling {

int min_intersection(int genus, int punctures)
{
  if (genus < 0 || punctures < 0)
    throw std::invalid_argument("genus and punctures must be non-negative");

  int const g = genus, p = punctures;
  if (g == 0) {
    if (p <= 3)
      throw NoFillingPair("no filling pair exists on S_{0," + std::to_string(p) + "}");
    return p % 2 == 0 ? p - 2 : p - 1;
  }

  if (g == 2) {
    std::optional<int> low, high;
    if (p <= 2)
      low = 4;
    if (p >= 2)
      high = 2 * g + p - 2;
    // p = 2 is covered by both branches.
    if (low && high && *low != *high)
      throw std::logic_error("genus two branches disagree at p = 2");
    return low ? *low : *high;
  }

  return p == 0 ? 2 * g - 1 : 2 * g + p - 2;
}

bool CrossValidationReport::consistent() const
{
  if (table_value && *table_value <= n_max)
    return smallest_nonempty == table_value;
  return !smallest_nonempty;
}

CrossValidationReport cross_validate(int genus, int punctures, int n_max, SearchQuery const &limits)
{
  if (n_max < 1)
    throw std::invalid_argument("n_max must be positive");

  CrossValidationReport report{genus, punctures, n_max, {}, std::nullopt, std::nullopt};
  try {
    report.table_value = min_intersection(genus, punctures);
  } catch (NoFillingPair const &) {
  }

  std::vector<std::future<SearchResult>> pending;
  for (int n = 1; n <= n_max; ++n) {
    SearchQuery q = limits;
    q.genus = genus;
    q.punctures = punctures;
    q.n = n;
    q.dedup = false;
    q.naive = false;
    q.limit = 1;
    pending.push_back(std::async(std::launch::async, [q] { return enumerate(q); }));
  }

  for (int n = 1; n <= n_max; ++n) {
    auto result = pending[static_cast<std::size_t>(n - 1)].get();
    CrossValidationRow row;
    row.n = n;
    row.faces = n + 2 - 2 * genus;
    row.feasible = !result.vacuous;
    row.nonempty = !result.solutions.empty();
    row.nodes = result.nodes_explored;
    if (row.nonempty && !report.smallest_nonempty)
      report.smallest_nonempty = n;
    report.rows.push_back(row);
  }
  return report;
}

} // namespace filling
