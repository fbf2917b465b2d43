#ifndef FILLING_VERIFIER_HPP
#define FILLING_VERIFIER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "filling/encoding.hpp"
#include "filling/permutation.hpp"

namespace filling {

/// A candidate filling permutation together with the surface S_{g,p} it is
/// claimed to live on. The degree must be 4n with n >= 1.
struct FillingInstance
{
  FillingInstance(Permutation sigma, int genus, int punctures);

  Permutation sigma;
  int genus;
  int punctures;

  int n() const { return sigma.degree() / 4; }
};

struct Check
{
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct ValidationReport
{
  int n = 0;
  std::vector<Check> checks;

  bool valid() const;
  Check const &check(std::string const &name) const;
};

/// Face boundary read clockwise, as arc labels.
using FaceWord = std::vector<ArcLabel>;

struct Face
{
  std::vector<int> symbols;  // one cycle of sigma, smallest symbol first
  FaceWord word;
  bool punctured = false;

  int sides() const { return static_cast<int>(symbols.size()); }
};

/// The closed surface obtained by gluing one polygon per cycle of sigma,
/// each edge to the edge carrying the reverse label.
struct GluedSurface
{
  int n = 0;
  std::vector<Face> faces;
  Permutation edge_pairing;  // j <-> Q(j)
  std::vector<std::vector<int>> vertex_classes;
  int euler_characteristic = 0;
  int genus = 0;
  bool connected = false;

  int vertex_count() const { return static_cast<int>(vertex_classes.size()); }
  int edge_count() const { return 2 * n; }
  int face_count() const { return static_cast<int>(faces.size()); }
  int puncture_count() const;
  std::vector<int> puncture_assignment() const;
};

/// Gluing cannot be carried out as requested.
class GluingError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// n = degree / 4; throws std::invalid_argument when the degree is not a
/// positive multiple of 4.
int intersection_number(Permutation const &sigma);

/// sigma(Q(sigma(j))) == tau(j) for every j.
bool check_equation(Permutation const &sigma);

/// Corner rotation r(j) = Q(sigma(j)); its orbits are the vertex classes.
Permutation corner_rotation(Permutation const &sigma);

/// Every check is evaluated; failures are reported, never thrown.
ValidationReport validate(FillingInstance const &inst);

std::vector<FaceWord> faces_as_words(Permutation const &sigma);

/// Throws std::invalid_argument if sigma is not parity reversing or fails the
/// equation, GluingError if the punctures cannot be placed.
GluedSurface glue(Permutation const &sigma, int punctures);

/// Inverse of faces_as_words.
Permutation sigma_from_faces(std::vector<FaceWord> const &faces, int n);

/// One `F<k>: <label> ...` line per face, ` *` marking a punctured face.
std::string format_faces(GluedSurface const &surface);

std::string format_report(ValidationReport const &report);

} // namespace filling

#endif // FILLING_VERIFIER_HPP
