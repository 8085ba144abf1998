#include "linewalk/generators.hpp"

#include <algorithm>

#include "linewalk/errors.hpp"

namespace linewalk {

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

Digraph random_digraph(Rng& rng, int n, int percent) {
  std::vector<Arc> arcs;
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h)
      if (t != h && rng.chance(percent, 100)) arcs.emplace_back(t, h);
  return Digraph(n, std::move(arcs), false);
}

namespace {

std::vector<int> random_derangement(Rng& rng, int n) {
  while (true) {
    std::vector<int> p = random_permutation(rng, n);
    bool fixed_point = false;
    for (int i = 0; i < n; ++i)
      if (p[i] == i) {
        fixed_point = true;
        break;
      }
    if (!fixed_point) return p;
  }
}

}  // namespace

Digraph random_regular_digraph(Rng& rng, int n, int k) {
  if (k < 1 || k > n - 1)
    throw_error(ErrorCode::InvalidArgument, "regular model needs 1 <= k <= n-1");
  while (true) {
    std::vector<Arc> arcs;
    bool clash = false;
    for (int round = 0; round < k && !clash; ++round) {
      std::vector<int> p = random_derangement(rng, n);
      for (int v = 0; v < n; ++v) arcs.emplace_back(v, p[v]);
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) continue;
    return Digraph(n, std::move(arcs), false);
  }
}

Digraph random_eulerian_strongly_connected(Rng& rng, int n) {
  if (n < 2) throw_error(ErrorCode::InvalidArgument, "eulerian model needs n >= 2");
  std::vector<Arc> arcs;
  std::vector<int> order = random_permutation(rng, n);
  for (int i = 0; i < n; ++i) arcs.emplace_back(order[i], order[(i + 1) % n]);

  auto has = [&arcs](int t, int h) {
    return std::find(arcs.begin(), arcs.end(), Arc{t, h}) != arcs.end();
  };

  int extra_cycles = rng.below(3);
  for (int c = 0; c < extra_cycles; ++c) {
    int len = 2 + rng.below(std::max(1, n - 1));
    if (len > n) len = n;
    std::vector<int> subset = random_permutation(rng, n);
    subset.resize(len);
    bool fresh = true;
    for (int i = 0; i < len; ++i)
      if (has(subset[i], subset[(i + 1) % len])) fresh = false;
    if (!fresh) continue;  // adding part of a dicycle would unbalance a vertex
    for (int i = 0; i < len; ++i) arcs.emplace_back(subset[i], subset[(i + 1) % len]);
  }
  return Digraph(n, std::move(arcs), false);
}

Digraph random_dag(Rng& rng, int n, int percent) {
  std::vector<int> order = random_permutation(rng, n);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(percent, 100)) arcs.emplace_back(order[i], order[j]);
  return Digraph(n, std::move(arcs), false);
}

Digraph random_strongly_connected(Rng& rng, int n, int extra_percent) {
  if (n < 2) throw_error(ErrorCode::InvalidArgument, "strongly connected model needs n >= 2");
  std::vector<int> order = random_permutation(rng, n);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(order[i], order[(i + 1) % n]);
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h)
      if (t != h && rng.chance(extra_percent, 100)) arcs.emplace_back(t, h);
  return Digraph(n, std::move(arcs), false);
}

}  // namespace linewalk
