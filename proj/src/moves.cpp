#include "filling/moves.hpp"

#include <algorithm>

namespace filling {

namespace {

// Arc symbols for an intersection number n.
struct Symbols
{
  int n;

  int alpha(int i) const { return 2 * wrap(i) - 1; }
  int beta(int i) const { return 2 * wrap(i); }
  int alpha_rev(int i) const { return alpha(i) + 2 * n; }
  int beta_rev(int i) const { return beta(i) + 2 * n; }

  int wrap(int i) const { return (i - 1 + n) % n + 1; }
};

void require_valid(FillingInstance const &inst)
{
  auto report = validate(inst);
  if (report.valid())
    return;
  for (auto const &c : report.checks) {
    if (!c.passed)
      throw std::invalid_argument("instance is not a valid filling permutation: " + c.name +
                                  ": " + c.witness);
  }
}

} // namespace

std::vector<Crossing> crossings_of(Permutation const &sigma)
{
  int const n = intersection_number(sigma);
  if (!is_parity_reversing(sigma) || !check_equation(sigma))
    throw std::invalid_argument("crossings need a permutation satisfying sigma Q sigma = tau");

  Symbols const s{n};
  std::vector<Crossing> out;
  // Each vertex class holds alpha_i, beta_k (unreversed, both ending at the
  // crossing) and the reverses of alpha_{i+1}, beta_{k+1}.
  for (auto const &orbit : to_cycles(corner_rotation(sigma)).cycles) {
    Crossing c{0, 0, true};
    for (int j : orbit) {
      if (j > 2 * n)
        continue;
      if (j % 2 == 1)
        c.alpha_in = (j + 1) / 2;
      else
        c.beta_in = j / 2;
    }
    if (c.alpha_in == 0 || c.beta_in == 0)
      throw std::logic_error("vertex class without incoming alpha and beta arcs");
    c.positive = sigma(s.alpha(c.alpha_in)) == s.beta_rev(c.beta_in);
    out.push_back(c);
  }
  return out;
}

Permutation sigma_from_crossings(std::vector<Crossing> const &crossings)
{
  int const n = static_cast<int>(crossings.size());
  if (n < 1)
    throw std::invalid_argument("no crossings");

  Symbols const s{n};
  std::vector<int> images(static_cast<std::size_t>(4 * n), 0);
  auto set = [&](int from, int to) {
    auto &slot = images[static_cast<std::size_t>(from - 1)];
    if (slot != 0)
      throw std::invalid_argument("arc ends at two crossings");
    slot = to;
  };

  for (auto const &c : crossings) {
    if (c.alpha_in < 1 || c.alpha_in > n || c.beta_in < 1 || c.beta_in > n)
      throw std::invalid_argument("crossing arc index out of range");

    int const a_in = c.alpha_in, a_out = c.alpha_in + 1;
    int const b_in = c.beta_in, b_out = c.beta_in + 1;
    // The four corners at the crossing, each read clockwise inside its face.
    if (c.positive) {
      set(s.alpha(a_in), s.beta_rev(b_in));
      set(s.beta(b_in), s.alpha(a_out));
      set(s.alpha_rev(a_out), s.beta(b_out));
      set(s.beta_rev(b_out), s.alpha_rev(a_in));
    } else {
      set(s.alpha(a_in), s.beta(b_out));
      set(s.beta(b_in), s.alpha_rev(a_in));
      set(s.alpha_rev(a_out), s.beta_rev(b_in));
      set(s.beta_rev(b_out), s.alpha(a_out));
    }
  }
  return Permutation(std::move(images));
}

std::vector<SurgerySite> surgery_sites(Permutation const &sigma)
{
  std::vector<SurgerySite> sites;
  for (auto const &orbit : to_cycles(corner_rotation(sigma)).cycles)
    sites.push_back({orbit.front()});
  return sites;
}

FillingInstance double_bigon(FillingInstance const &inst, SurgerySite site)
{
  require_valid(inst);

  auto const sites = surgery_sites(inst.sigma);
  auto const where = std::find(sites.begin(), sites.end(), site);
  if (where == sites.end())
    throw std::invalid_argument("symbol " + std::to_string(site.vertex_class) +
                                " does not name a vertex class");

  auto const old = crossings_of(inst.sigma);
  Crossing const chosen = old[static_cast<std::size_t>(where - sites.begin())];
  int const i = chosen.alpha_in;
  int const k = chosen.beta_in;

  // Two new arcs are spliced into each curve right after the chosen crossing's
  // incoming arcs; later arcs shift by two.
  auto alpha_renum = [&](int m) { return m <= i ? m : m + 2; };
  auto beta_renum = [&](int m) { return m <= k ? m : m + 2; };

  std::vector<Crossing> next;
  next.reserve(old.size() + 2);
  for (auto const &c : old) {
    if (c == chosen) {
      next.push_back({i, k, c.positive});
      next.push_back({i + 1, k + 1, !c.positive});
      next.push_back({i + 2, k + 2, c.positive});
    } else {
      next.push_back({alpha_renum(c.alpha_in), beta_renum(c.beta_in), c.positive});
    }
  }

  FillingInstance out(sigma_from_crossings(next), inst.genus, inst.punctures + 2);
  if (!validate(out).valid())
    throw std::logic_error("double-bigon surgery produced an invalid permutation");
  return out;
}

FillingInstance extend_to(FillingInstance const &inst, int target_p)
{
  if (target_p < inst.punctures || (target_p - inst.punctures) % 2 != 0)
    throw std::invalid_argument("target punctures " + std::to_string(target_p) +
                                " not reachable from " + std::to_string(inst.punctures) +
                                " in steps of two");
  require_valid(inst);

  FillingInstance current = inst;
  while (current.punctures < target_p)
    current = double_bigon(current, surgery_sites(current.sigma).front());
  return current;
}

} // namespace filling
