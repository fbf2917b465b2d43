#include "filling/encoding.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace filling {

namespace {

void require_positive(int n)
{
  if (n < 1)
    throw std::invalid_argument("intersection number must be positive, got " + std::to_string(n));
}

} // namespace

ArcLabel label_of(int symbol, int n)
{
  require_positive(n);
  if (symbol < 1 || symbol > 4 * n)
    throw std::out_of_range("symbol " + std::to_string(symbol) + " outside 1.." +
                            std::to_string(4 * n));

  bool inverted = symbol > 2 * n;
  int base = inverted ? symbol - 2 * n : symbol;
  return {base % 2 == 1 ? Curve::alpha : Curve::beta, (base + 1) / 2, inverted};
}

int index_of(ArcLabel const &label, int n)
{
  require_positive(n);
  if (label.index < 1 || label.index > n)
    throw std::out_of_range("arc index " + std::to_string(label.index) + " outside 1.." +
                            std::to_string(n));

  int base = label.curve == Curve::alpha ? 2 * label.index - 1 : 2 * label.index;
  return label.inverted ? base + 2 * n : base;
}

std::string to_string(ArcLabel const &label)
{
  std::string s(1, label.curve == Curve::alpha ? 'a' : 'b');
  s += std::to_string(label.index);
  if (label.inverted)
    s += '\'';
  return s;
}

ArcLabel parse_label(std::string_view token)
{
  auto bad = [&] { return ParseError("malformed arc label \"" + std::string(token) + "\""); };

  if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b'))
    throw bad();

  ArcLabel label;
  label.curve = token[0] == 'a' ? Curve::alpha : Curve::beta;
  token.remove_prefix(1);
  if (token.back() == '\'') {
    label.inverted = true;
    token.remove_suffix(1);
  }
  if (token.empty() || token.size() > 7)
    throw bad();

  int index = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw bad();
    index = index * 10 + (c - '0');
  }
  if (index < 1)
    throw bad();
  label.index = index;
  return label;
}

Permutation make_Q(int n)
{
  require_positive(n);
  int m = 4 * n;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    images[static_cast<std::size_t>(j - 1)] = (j + 2 * n - 1) % m + 1;
  return Permutation(std::move(images));
}

Permutation make_tau(int n)
{
  require_positive(n);
  std::vector<std::vector<int>> cycles(4);
  for (int i = 1; i <= n; ++i) {
    cycles[0].push_back(2 * i - 1);
    cycles[1].push_back(2 * i);
    cycles[2].push_back(4 * n + 1 - 2 * i);
    cycles[3].push_back(4 * n + 2 - 2 * i);
  }
  return from_cycles(CycleDecomposition{4 * n, std::move(cycles)});
}

} // namespace filling
