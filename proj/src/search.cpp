#include "filling/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "filling/encoding.hpp"
#include "filling/verifier.hpp"

namespace filling {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<std::string> vacuous_reason(SearchQuery const &q)
{
  int faces = q.face_count();
  if (faces < 1)
    return "n+2-2g = " + std::to_string(faces) + " leaves no faces";
  if (q.punctures > faces)
    return std::to_string(q.punctures) + " punctures exceed " + std::to_string(faces) + " faces";
  return std::nullopt;
}

void check_query(SearchQuery const &q)
{
  if (q.n < 1)
    throw std::invalid_argument("intersection number must be positive");
  if (q.genus < 0 || q.punctures < 0)
    throw std::invalid_argument("genus and punctures must be non-negative");
}

// Shared between the workers of one enumerate() call.
struct Budget
{
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  // Returns false once either cap is hit.
  bool spend()
  {
    auto used = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > max_nodes || ((used & 1023) == 0 && Clock::now() > deadline))
      exhausted = true;
    return !exhausted.load(std::memory_order_relaxed);
  }
};

class Searcher
{
public:
  Searcher(SearchQuery const &q, Budget &budget)
  : _q(q),
    _n(q.n),
    _m(4 * q.n),
    _faces(q.face_count()),
    _budget(budget),
    _img(static_cast<std::size_t>(_m + 1), 0),
    _pre(static_cast<std::size_t>(_m + 1), 0)
  {
    auto Q = make_Q(_n);
    auto tau = make_tau(_n);
    _q_of.resize(static_cast<std::size_t>(_m + 1));
    _tau_of.resize(static_cast<std::size_t>(_m + 1));
    for (int j = 1; j <= _m; ++j) {
      _q_of[static_cast<std::size_t>(j)] = Q(j);
      _tau_of[static_cast<std::size_t>(j)] = tau(j);
    }
  }

  /// Explores the subtree with sigma(1) = first.
  void run(int first)
  {
    if (!_budget.spend())
      return;
    std::size_t mark = _trail.size();
    if (propagate(1, first) && bounds_ok())
      dfs();
    undo(mark);
  }

  std::size_t solution_count() const { return _solutions.size(); }
  std::vector<Permutation> take_solutions() { return std::move(_solutions); }

private:
  struct TrailEntry
  {
    int from;
    int closed_length;  // 0 unless this assignment closed a cycle
  };

  bool dfs()
  {
    int x = 1;
    while (x <= _m && _img[static_cast<std::size_t>(x)] != 0)
      ++x;
    if (x > _m)
      return record();

    for (int y = (x % 2 == 1) ? 2 : 1; y <= _m; y += 2) {
      if (_pre[static_cast<std::size_t>(y)] != 0)
        continue;
      if (!_budget.spend())
        return false;

      std::size_t mark = _trail.size();
      bool keep_going = true;
      if (propagate(x, y) && bounds_ok())
        keep_going = dfs();
      undo(mark);
      if (!keep_going)
        return false;
    }
    return true;
  }

  // sigma(j) = k forces sigma(Q(k)) = tau(j); the induced map on pairs has
  // order dividing four.
  bool propagate(int x, int y)
  {
    int j = x, k = y;
    for (int step = 0; step < 4; ++step) {
      if (!assign(j, k))
        return false;
      int nj = _q_of[static_cast<std::size_t>(k)];
      int nk = _tau_of[static_cast<std::size_t>(j)];
      j = nj;
      k = nk;
      if (j == x && k == y)
        break;
    }
    return true;
  }

  bool assign(int j, int k)
  {
    auto &img = _img[static_cast<std::size_t>(j)];
    if (img == k)
      return true;
    if (img != 0 || _pre[static_cast<std::size_t>(k)] != 0 || (j + k) % 2 == 0)
      return false;

    img = k;
    _pre[static_cast<std::size_t>(k)] = j;

    int len = 1;
    int t = k;
    while (t != j && _img[static_cast<std::size_t>(t)] != 0) {
      t = _img[static_cast<std::size_t>(t)];
      ++len;
    }
    int closed = t == j ? len : 0;
    if (closed) {
      ++_closed;
      _closed_two += closed == 2;
    }
    _trail.push_back({j, closed});
    return true;
  }

  void undo(std::size_t mark)
  {
    while (_trail.size() > mark) {
      auto e = _trail.back();
      _trail.pop_back();
      auto &img = _img[static_cast<std::size_t>(e.from)];
      _pre[static_cast<std::size_t>(img)] = 0;
      img = 0;
      if (e.closed_length) {
        --_closed;
        _closed_two -= e.closed_length == 2;
      }
    }
  }

  // Each cycle still open contains at least one unassigned symbol.
  bool bounds_ok() const
  {
    int open = _m - static_cast<int>(_trail.size());
    return _closed <= _faces && _closed_two <= _q.punctures && _closed + open >= _faces;
  }

  bool record()
  {
    if (_closed != _faces)
      return true;

    Permutation sigma(std::vector<int>(_img.begin() + 1, _img.end()));
    if (!validate(FillingInstance(sigma, _q.genus, _q.punctures)).valid())
      throw std::logic_error("search produced " + format_cycles(sigma) +
                             ", which fails validation");
    _solutions.push_back(std::move(sigma));
    return !_q.limit || _solutions.size() < *_q.limit;
  }

  SearchQuery const &_q;
  int _n;
  int _m;
  int _faces;
  Budget &_budget;

  std::vector<int> _q_of;
  std::vector<int> _tau_of;
  std::vector<int> _img;
  std::vector<int> _pre;
  std::vector<TrailEntry> _trail;
  int _closed = 0;
  int _closed_two = 0;
  std::vector<Permutation> _solutions;
};

void finish(SearchQuery const &q, SearchResult &result, std::vector<Permutation> raw,
            Clock::time_point start)
{
  std::sort(raw.begin(), raw.end());
  if (q.limit && raw.size() > *q.limit)
    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(*q.limit), raw.end());
  result.raw_count = raw.size();

  std::set<Permutation> classes;
  for (auto const &sigma : raw)
    classes.insert(canonical_form(sigma));
  result.dedup_count = classes.size();

  if (q.dedup)
    result.solutions.assign(classes.begin(), classes.end());
  else
    result.solutions = std::move(raw);
  result.wall_time = Clock::now() - start;
}

} // namespace

SearchResult enumerate(SearchQuery const &q)
{
  check_query(q);
  if (q.naive)
    return naive_enumerate(q);

  auto const start = Clock::now();
  SearchResult result;
  result.vacuous = vacuous_reason(q);
  if (result.vacuous) {
    finish(q, result, {}, start);
    return result;
  }

  Budget budget{q.max_nodes, start + q.max_time};

  std::vector<int> roots;
  if (q.symmetry_pruning) {
    // Conjugating by a beta basepoint shift fixes 1 and moves sigma(1) along
    // its beta orbit; {beta_1, beta_1^-1} meets every orbit.
    roots = {2, 2 * q.n + 2};
  } else {
    for (int y = 2; y <= 4 * q.n; y += 2)
      roots.push_back(y);
  }

  std::vector<Permutation> raw;
  unsigned const workers =
      q.limit ? 1u : std::clamp<unsigned>(q.threads, 1u, static_cast<unsigned>(roots.size()));

  if (workers == 1) {
    Searcher searcher(q, budget);
    for (int root : roots) {
      searcher.run(root);
      if (budget.exhausted || (q.limit && searcher.solution_count() >= *q.limit))
        break;
    }
    raw = searcher.take_solutions();
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex merge;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          Searcher searcher(q, budget);
          for (auto i = next++; i < roots.size() && !budget.exhausted; i = next++)
            searcher.run(roots[i]);
          auto found = searcher.take_solutions();
          std::lock_guard lock(merge);
          raw.insert(raw.end(), found.begin(), found.end());
        } catch (...) {
          std::lock_guard lock(merge);
          failure = std::current_exception();
          budget.exhausted = true;
        }
      });
    }
    for (auto &t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }

  result.nodes_explored = budget.nodes.load();
  if (budget.exhausted)
    throw ResourceLimitExceeded("search cap exceeded after " + std::to_string(result.nodes_explored) +
                                " nodes (limits: " + std::to_string(q.max_nodes) + " nodes, " +
                                std::to_string(q.max_time.count()) + " ms)");

  finish(q, result, std::move(raw), start);
  return result;
}

SearchResult naive_enumerate(SearchQuery const &q)
{
  check_query(q);
  int const m = 4 * q.n;
  if (m > 8)
    throw std::invalid_argument("naive enumeration is limited to degree 8, got " + std::to_string(m));

  auto const start = Clock::now();
  SearchResult result;
  result.vacuous = vacuous_reason(q);

  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> raw;
  do {
    ++result.nodes_explored;
    FillingInstance inst(Permutation(images), q.genus, q.punctures);
    if (validate(inst).valid())
      raw.push_back(inst.sigma);
  } while (std::next_permutation(images.begin(), images.end()));

  finish(q, result, std::move(raw), start);
  return result;
}

std::vector<Permutation> symmetry_group(int n)
{
  if (n < 1)
    throw std::invalid_argument("intersection number must be positive");

  auto tau = make_tau(n);
  std::vector<int> alpha(static_cast<std::size_t>(4 * n)), beta(alpha.size());
  for (int j = 1; j <= 4 * n; ++j) {
    auto label = label_of(j, n);
    // On reversed arcs tau steps backwards, so the shift uses tau^-1 there.
    int forward = label.inverted ? index_of({label.curve, label.index % n + 1, true}, n) : tau(j);
    alpha[static_cast<std::size_t>(j - 1)] = label.curve == Curve::alpha ? forward : j;
    beta[static_cast<std::size_t>(j - 1)] = label.curve == Curve::beta ? forward : j;
  }
  return {Permutation(std::move(alpha)), Permutation(std::move(beta))};
}

Permutation canonical_form(Permutation const &sigma)
{
  int const n = intersection_number(sigma);
  auto const gens = symmetry_group(n);

  Permutation best = sigma;
  Permutation shift_a = Permutation::identity(4 * n);
  for (int a = 0; a < n; ++a) {
    Permutation shift = shift_a;
    for (int b = 0; b < n; ++b) {
      auto conj = compose(shift, compose(sigma, inverse(shift)));
      if (conj < best)
        best = std::move(conj);
      shift = compose(gens[1], shift);
    }
    shift_a = compose(gens[0], shift_a);
  }
  return best;
}

} // namespace filling
