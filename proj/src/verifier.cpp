#include "filling/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace filling {

namespace {

class DisjointSets
{
public:
  explicit DisjointSets(std::size_t size) : _parent(size) { std::iota(_parent.begin(), _parent.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (_parent[x] != x)
      x = _parent[x] = _parent[_parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) { _parent[find(a)] = find(b); }

  std::size_t components()
  {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _parent.size(); ++i)
      count += find(i) == i;
    return count;
  }

private:
  std::vector<std::size_t> _parent;
};

// Face index of every symbol, indexed by symbol - 1.
std::vector<std::size_t> face_of_symbol(CycleDecomposition const &cycles)
{
  std::vector<std::size_t> face(static_cast<std::size_t>(cycles.degree));
  for (std::size_t f = 0; f < cycles.cycles.size(); ++f) {
    for (int j : cycles.cycles[f])
      face[static_cast<std::size_t>(j - 1)] = f;
  }
  return face;
}

bool faces_connected(CycleDecomposition const &cycles, Permutation const &q)
{
  auto face = face_of_symbol(cycles);
  DisjointSets sets(cycles.cycles.size());
  for (int j = 1; j <= q.degree(); ++j)
    sets.unite(face[static_cast<std::size_t>(j - 1)], face[static_cast<std::size_t>(q(j) - 1)]);
  return sets.components() == 1;
}

Check make_check(std::string name, bool passed, std::string witness)
{
  return {std::move(name), passed, passed ? std::string() : std::move(witness)};
}

} // namespace

FillingInstance::FillingInstance(Permutation sigma_, int genus_, int punctures_)
: sigma(std::move(sigma_)),
  genus(genus_),
  punctures(punctures_)
{
  intersection_number(sigma);
  if (genus < 0 || punctures < 0)
    throw std::invalid_argument("genus and punctures must be non-negative");
}

bool ValidationReport::valid() const
{
  return std::all_of(checks.begin(), checks.end(), [](Check const &c) { return c.passed; });
}

Check const &ValidationReport::check(std::string const &name) const
{
  auto it = std::find_if(checks.begin(), checks.end(), [&](Check const &c) { return c.name == name; });
  if (it == checks.end())
    throw std::out_of_range("no check named " + name);
  return *it;
}

int GluedSurface::puncture_count() const
{
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [](Face const &f) { return f.punctured; }));
}

std::vector<int> GluedSurface::puncture_assignment() const
{
  std::vector<int> out;
  out.reserve(faces.size());
  for (auto const &f : faces)
    out.push_back(f.punctured ? 1 : 0);
  return out;
}

int intersection_number(Permutation const &sigma)
{
  if (sigma.degree() % 4 != 0)
    throw std::invalid_argument("degree " + std::to_string(sigma.degree()) +
                                " is not divisible by 4");
  return sigma.degree() / 4;
}

bool check_equation(Permutation const &sigma)
{
  int n = intersection_number(sigma);
  return compose(sigma, compose(make_Q(n), sigma)) == make_tau(n);
}

Permutation corner_rotation(Permutation const &sigma)
{
  return compose(make_Q(intersection_number(sigma)), sigma);
}

ValidationReport validate(FillingInstance const &inst)
{
  auto const &sigma = inst.sigma;
  int const n = inst.n();
  int const g = inst.genus;
  int const p = inst.punctures;
  int const expected_faces = n + 2 - 2 * g;

  ValidationReport report;
  report.n = n;
  auto &checks = report.checks;

  checks.push_back(make_check("degree-divisible-by-4", true, {}));

  {
    int bad = 0;
    for (int j = 1; j <= sigma.degree() && !bad; ++j) {
      if ((sigma(j) - j) % 2 == 0)
        bad = j;
    }
    std::string w = bad ? "sigma(" + std::to_string(bad) + ") = " + std::to_string(sigma(bad)) +
                              " has the same parity"
                        : "";
    checks.push_back(make_check("parity-reversing", bad == 0, w));
  }

  auto const q = make_Q(n);
  auto const tau = make_tau(n);
  {
    int bad = 0;
    for (int j = 1; j <= sigma.degree() && !bad; ++j) {
      if (sigma(q(sigma(j))) != tau(j))
        bad = j;
    }
    std::string w = bad ? "sigma(Q(sigma(" + std::to_string(bad) + "))) = " +
                              std::to_string(sigma(q(sigma(bad)))) + " but tau(" +
                              std::to_string(bad) + ") = " + std::to_string(tau(bad))
                        : "";
    checks.push_back(make_check("equation", bad == 0, w));
  }

  auto const cycles = to_cycles(sigma);
  int const faces = static_cast<int>(cycles.cycles.size());
  checks.push_back(make_check("cycle-count", faces == expected_faces,
                              std::to_string(faces) + " cycles, n+2-2g = " +
                                  std::to_string(expected_faces)));

  int const bigons = two_cycle_count(sigma);
  checks.push_back(make_check("two-cycles", bigons <= p,
                              std::to_string(bigons) + " 2-cycles exceed " + std::to_string(p) +
                                  " punctures"));

  checks.push_back(make_check("puncture-feasibility", p <= expected_faces,
                              std::to_string(p) + " punctures exceed n+2-2g = " +
                                  std::to_string(expected_faces) + " faces"));

  int const vertices = cycle_count(compose(q, sigma));
  checks.push_back(make_check("vertex-classes", vertices == n,
                              std::to_string(vertices) + " vertex classes, expected " +
                                  std::to_string(n)));

  int const chi = vertices - 2 * n + faces;
  checks.push_back(make_check("euler-characteristic", chi == 2 - 2 * g,
                              "V-E+F = " + std::to_string(chi) + ", 2-2g = " +
                                  std::to_string(2 - 2 * g)));

  checks.push_back(make_check("connectivity", faces_connected(cycles, q),
                              "glued polygons form more than one component"));

  return report;
}

std::vector<FaceWord> faces_as_words(Permutation const &sigma)
{
  int n = intersection_number(sigma);
  std::vector<FaceWord> words;
  for (auto const &cycle : to_cycles(sigma).cycles) {
    FaceWord word;
    word.reserve(cycle.size());
    for (int j : cycle)
      word.push_back(label_of(j, n));
    words.push_back(std::move(word));
  }
  return words;
}

GluedSurface glue(Permutation const &sigma, int punctures)
{
  int const n = intersection_number(sigma);
  if (!is_parity_reversing(sigma))
    throw std::invalid_argument("sigma is not parity reversing");
  if (!check_equation(sigma))
    throw std::invalid_argument("sigma does not satisfy sigma Q sigma = tau");
  if (punctures < 0)
    throw std::invalid_argument("negative puncture count");

  auto const cycles = to_cycles(sigma);
  auto q = make_Q(n);

  GluedSurface s{n, {}, q, {}, 0, 0, false};
  for (auto const &cycle : cycles.cycles) {
    Face face{cycle, {}, false};
    for (int j : cycle)
      face.word.push_back(label_of(j, n));
    s.faces.push_back(std::move(face));
  }

  int const bigons = two_cycle_count(sigma);
  if (punctures > s.face_count())
    throw GluingError(std::to_string(punctures) + " punctures exceed " +
                      std::to_string(s.face_count()) + " faces");
  if (bigons > punctures)
    throw GluingError(std::to_string(bigons) + " bigons cannot all be punctured with " +
                      std::to_string(punctures) + " punctures");

  int remaining = punctures;
  for (auto &f : s.faces) {
    if (f.sides() == 2) {
      f.punctured = true;
      --remaining;
    }
  }
  for (auto &f : s.faces) {
    if (remaining == 0)
      break;
    if (!f.punctured) {
      f.punctured = true;
      --remaining;
    }
  }

  for (auto &orbit : to_cycles(corner_rotation(sigma)).cycles) {
    if (orbit.size() != 4)
      throw GluingError("internal inconsistency: vertex class of size " +
                        std::to_string(orbit.size()));
    s.vertex_classes.push_back(std::move(orbit));
  }

  s.euler_characteristic = s.vertex_count() - s.edge_count() + s.face_count();
  s.genus = (2 - s.euler_characteristic) / 2;
  s.connected = faces_connected(cycles, q);
  return s;
}

Permutation sigma_from_faces(std::vector<FaceWord> const &faces, int n)
{
  CycleDecomposition d{4 * n, {}};
  for (auto const &word : faces) {
    std::vector<int> cycle;
    for (auto const &label : word)
      cycle.push_back(index_of(label, n));
    d.cycles.push_back(std::move(cycle));
  }
  return from_cycles(d);
}

std::string format_faces(GluedSurface const &surface)
{
  std::ostringstream out;
  for (std::size_t k = 0; k < surface.faces.size(); ++k) {
    auto const &f = surface.faces[k];
    out << 'F' << k + 1 << ':';
    for (auto const &label : f.word)
      out << ' ' << to_string(label);
    if (f.punctured)
      out << " *";
    out << '\n';
  }
  return out.str();
}

std::string format_report(ValidationReport const &report)
{
  std::ostringstream out;
  out << "n=" << report.n << '\n';
  for (auto const &c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed)
      out << ": " << c.witness;
    out << '\n';
  }
  out << (report.valid() ? "valid" : "invalid") << '\n';
  return out.str();
}

} // namespace filling
