#include "filling/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace filling {

Permutation::Permutation(std::vector<int> images)
: _images(std::move(images))
{
  if (_images.empty())
    throw std::invalid_argument("permutation degree must be positive");

  std::vector<bool> seen(_images.size(), false);
  for (int v : _images) {
    if (v < 1 || v > degree())
      throw std::invalid_argument("image " + std::to_string(v) + " outside 1.." +
                                  std::to_string(degree()));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int degree)
{
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");

  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (int j = 1; j <= degree(); ++j) {
    if ((*this)(j) != j)
      return false;
  }
  return true;
}

std::strong_ordering operator<=>(Permutation const &lhs, Permutation const &rhs)
{
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(lhs._images.begin(), lhs._images.end(),
                                                rhs._images.begin(), rhs._images.end());
}

Permutation compose(Permutation const &outer, Permutation const &inner)
{
  if (outer.degree() != inner.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(outer.degree()) + " and " +
                                std::to_string(inner.degree()));

  std::vector<int> images(static_cast<std::size_t>(inner.degree()));
  for (int j = 1; j <= inner.degree(); ++j)
    images[static_cast<std::size_t>(j - 1)] = outer(inner(j));
  return Permutation(std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int j = 1; j <= p.degree(); ++j)
    images[static_cast<std::size_t>(p(j) - 1)] = j;
  return Permutation(std::move(images));
}

Permutation from_cycles(CycleDecomposition const &d)
{
  if (d.degree < 1)
    throw std::invalid_argument("permutation degree must be positive");

  std::vector<int> images(static_cast<std::size_t>(d.degree), 0);
  for (auto const &cycle : d.cycles) {
    if (cycle.empty())
      throw std::invalid_argument("empty cycle");

    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > d.degree)
        throw std::invalid_argument("symbol " + std::to_string(from) + " outside 1.." +
                                    std::to_string(d.degree));
      auto &slot = images[static_cast<std::size_t>(from - 1)];
      if (slot != 0)
        throw std::invalid_argument("symbol " + std::to_string(from) + " repeated");
      slot = to;
    }
  }

  for (int j = 1; j <= d.degree; ++j) {
    auto &slot = images[static_cast<std::size_t>(j - 1)];
    if (slot == 0)
      slot = j;
  }
  return Permutation(std::move(images));
}

CycleDecomposition to_cycles(Permutation const &p)
{
  CycleDecomposition d{p.degree(), {}};
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);

  // Scanning in increasing order yields canonical form directly.
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;

    std::vector<int> cycle;
    for (int j = start; !seen[static_cast<std::size_t>(j - 1)]; j = p(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      cycle.push_back(j);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

bool is_parity_reversing(Permutation const &p)
{
  if (p.degree() % 2 != 0)
    throw std::invalid_argument("parity reversal needs even degree, got " +
                                std::to_string(p.degree()));

  for (int j = 1; j <= p.degree(); ++j) {
    if ((p(j) - j) % 2 == 0)
      return false;
  }
  return true;
}

int cycle_count(Permutation const &p)
{
  return static_cast<int>(to_cycles(p).cycles.size());
}

int two_cycle_count(Permutation const &p)
{
  int count = 0;
  for (int j = 1; j <= p.degree(); ++j) {
    if (p(j) > j && p(p(j)) == j)
      ++count;
  }
  return count;
}

namespace {

class CycleParser
{
public:
  explicit CycleParser(std::string_view text) : _text(text) {}

  std::vector<std::vector<int>> parse()
  {
    std::vector<std::vector<int>> cycles;
    skip_space();
    if (at_end())
      fail("expected '('");

    while (!at_end()) {
      cycles.push_back(parse_cycle());
      skip_space();
    }
    return cycles;
  }

private:
  std::vector<int> parse_cycle()
  {
    expect('(');
    std::vector<int> cycle{parse_int()};
    skip_space();
    while (peek() == ',') {
      ++_pos;
      cycle.push_back(parse_int());
      skip_space();
    }
    expect(')');
    return cycle;
  }

  int parse_int()
  {
    skip_space();
    std::size_t start = _pos;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + (_text[_pos] - '0');
      if (value > 1'000'000)
        fail("symbol too large");
      ++_pos;
    }
    if (_pos == start)
      fail("expected a positive integer");
    if (value == 0)
      fail("symbols start at 1");
    return static_cast<int>(value);
  }

  void expect(char c)
  {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++_pos;
  }

  char peek() const { return at_end() ? '\0' : _text[_pos]; }
  bool at_end() const { return _pos >= _text.size(); }

  void skip_space()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError(what + " at offset " + std::to_string(_pos) + " in \"" +
                     std::string(_text) + "\"");
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::optional<int> degree)
{
  auto cycles = CycleParser(text).parse();

  int largest = 0;
  for (auto const &cycle : cycles)
    largest = std::max(largest, *std::max_element(cycle.begin(), cycle.end()));

  int m = degree.value_or((largest + 3) / 4 * 4);
  if (m < largest)
    throw ParseError("symbol " + std::to_string(largest) + " exceeds degree " +
                     std::to_string(m));

  try {
    return from_cycles(CycleDecomposition{m, std::move(cycles)});
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

std::string format_cycles(Permutation const &p)
{
  std::ostringstream out;
  for (auto const &cycle : to_cycles(p).cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? "," : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

} // namespace filling
