#ifndef FILLING_MOVES_HPP
#define FILLING_MOVES_HPP

#include <vector>

#include "filling/verifier.hpp"

namespace filling {

/// One crossing of the two curves, seen locally.
///
/// Arc alpha_{alpha_in} ends here and alpha_{alpha_in + 1} starts here
/// (indices mod n), likewise for beta. `positive` records on which side of
/// alpha the incoming beta arc lies: with positive crossings the clockwise
/// successor of alpha_in is the reverse of beta_in.
struct Crossing
{
  int alpha_in = 1;
  int beta_in = 1;
  bool positive = true;

  friend bool operator==(Crossing const &, Crossing const &) = default;
};

/// The crossings of a filling permutation, one per vertex class, ordered by
/// the smallest corner symbol of the class. Requires a permutation that
/// passes the parity and equation checks.
std::vector<Crossing> crossings_of(Permutation const &sigma);

/// Rebuilds the face successor permutation from local crossing data.
/// `crossings` must mention every alpha and beta arc index exactly once.
Permutation sigma_from_crossings(std::vector<Crossing> const &crossings);

/// A vertex class, named by its smallest corner symbol.
struct SurgerySite
{
  int vertex_class = 1;

  friend bool operator==(SurgerySite const &, SurgerySite const &) = default;
};

std::vector<SurgerySite> surgery_sites(Permutation const &sigma);

/// Pushes beta across alpha twice at the chosen crossing: one crossing
/// becomes three and two new bigon faces appear, both punctured.
/// (g, p, n) -> (g, p + 2, n + 2). Arcs are renumbered along each curve
/// starting from the old alpha_1 / beta_1. Throws std::invalid_argument for
/// an invalid instance or an unknown site; throws std::logic_error if the
/// rewritten permutation fails validation.
FillingInstance double_bigon(FillingInstance const &inst, SurgerySite site);

/// Repeated double_bigon at the smallest site until `target_p` punctures.
FillingInstance extend_to(FillingInstance const &inst, int target_p);

} // namespace filling

#endif // FILLING_MOVES_HPP
