#include "linewalk/cayley.hpp"

#include <algorithm>
#include <map>

#include "linewalk/factorization.hpp"
#include "linewalk/line_ops.hpp"

namespace linewalk {

Perm perm_identity(int m) {
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

Perm perm_product(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

CayleyDigraph cayley_cyclic(int n, const std::vector<int>& generators) {
  if (n < 3) throw_error(ErrorCode::BadGenerators, "cyclic Cayley digraph needs n >= 3");
  if (generators.empty()) throw_error(ErrorCode::BadGenerators, "generator set is empty");
  std::vector<int> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int s : gens)
    if (s < 1 || s > n - 1)
      throw_error(ErrorCode::BadGenerators, "generator " + std::to_string(s) + " outside 1..n-1");

  CayleyDigraph out;
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v)
    for (int s : gens) arcs.emplace_back(v, (v + s) % n);
  out.graph = Digraph(n, std::move(arcs), false);
  for (int v = 0; v < n; ++v) {
    Perm el = perm_identity(n);
    for (int i = 0; i < n; ++i) el[i] = (i + v) % n;
    out.element_of.push_back(el);
  }
  for (int s : gens) {
    Perm g(n);
    for (int i = 0; i < n; ++i) g[i] = (i + s) % n;
    out.generators.push_back(g);
  }
  return out;
}

CayleyDigraph cayley_dihedral(int n) {
  if (n < 3 || n % 2 == 0)
    throw_error(ErrorCode::BadOrder, "dihedral construction takes odd n >= 3");
  Perm a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = (i + 1) % n;
    b[i] = n - 1 - i;
  }

  CayleyDigraph out;
  out.generators = {a, b};

  // Breadth-first closure from the identity under right multiplication;
  // discovery order fixes the vertex numbering.
  std::map<Perm, int> index_of;
  std::vector<Perm> elements{perm_identity(n)};
  index_of[elements[0]] = 0;
  std::vector<Arc> arcs;
  for (std::size_t from = 0; from < elements.size(); ++from) {
    Perm current = elements[from];
    for (const Perm& s : out.generators) {
      Perm next = perm_product(current, s);
      auto it = index_of.find(next);
      if (it == index_of.end()) {
        it = index_of.emplace(next, static_cast<int>(elements.size())).first;
        elements.push_back(next);
      }
      arcs.emplace_back(static_cast<int>(from), it->second);
    }
  }
  out.element_of = elements;
  out.graph = Digraph(static_cast<int>(elements.size()), std::move(arcs), false);
  return out;
}

std::optional<std::vector<int>> isomorphic(const Digraph& a, const Digraph& b, int max_n) {
  if (a.vertex_count() > max_n || b.vertex_count() > max_n)
    throw_error(ErrorCode::TooLarge,
                "isomorphism search limited to " + std::to_string(max_n) + " vertices");
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return std::nullopt;
  const int n = a.vertex_count();

  auto degree_pair = [](const Digraph& g, int v) { return std::pair(g.in_degree(v), g.out_degree(v)); };
  {
    std::vector<std::pair<int, int>> da, db;
    for (int v = 0; v < n; ++v) {
      da.push_back(degree_pair(a, v));
      db.push_back(degree_pair(b, v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }

  std::vector<int> map_ab(n, -1), used_b(n, 0);
  // Assign vertices of a in order; a candidate must match the degree pair and
  // respect every arc/non-arc against the vertices mapped so far.
  auto backtrack = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used_b[w] || degree_pair(a, v) != degree_pair(b, w)) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        if (a.has_arc(u, v) != b.has_arc(map_ab[u], w)) consistent = false;
        if (consistent && a.has_arc(v, u) != b.has_arc(w, map_ab[u])) consistent = false;
      }
      if (consistent && a.has_arc(v, v) != b.has_arc(w, w)) consistent = false;
      if (!consistent) continue;
      map_ab[v] = w;
      used_b[w] = 1;
      if (self(self, v + 1)) return true;
      map_ab[v] = -1;
      used_b[w] = 0;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return map_ab;
  return std::nullopt;
}

CycleExampleReport verify_cycle_example(int n) {
  if (n < 3 || n % 2 == 0) throw_error(ErrorCode::BadOrder, "the example takes odd n >= 3");
  if (n > 9) throw_error(ErrorCode::TooLarge, "isomorphism search is brute force; n <= 9");

  CayleyDigraph cycle = cayley_cyclic(n, {1, n - 1});
  CayleyDigraph prism = cayley_dihedral(n);
  Digraph line = line_digraph(cycle.graph).graph;

  CycleExampleReport report;
  report.line_isomorphic_to_prism = isomorphic(line, prism.graph, 2 * n).has_value();

  // Block form [[r, r^-1], [r, r^-1]] with r the +1 rotation matrix; this is
  // exactly block_line_matrix of the {+1 shift, -1 shift} factorization.
  std::vector<int> plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    plus[i] = (i + 1) % n;
    minus[i] = (i + n - 1) % n;
  }
  Factorization rotations = make_factorization(cycle.graph, {plus, minus});
  IntMatrix block = block_line_matrix(rotations);

  IntMatrix expected(2 * n, 2 * n);
  for (int rb = 0; rb < 2; ++rb)
    for (int i = 0; i < n; ++i) {
      expected.at(rb * n + i, plus[i]) = BigInt(1);
      expected.at(rb * n + i, n + minus[i]) = BigInt(1);
    }
  report.block_form_from_factors = block == expected;

  auto mapping = isomorphic(prism.graph, from_adjacency(block), 2 * n);
  if (mapping.has_value()) {
    IntMatrix prism_adj = adjacency(prism.graph);
    bool same = true;
    const auto& p = *mapping;
    for (int r = 0; r < 2 * n && same; ++r)
      for (int c = 0; c < 2 * n && same; ++c)
        if (prism_adj.at(r, c) != block.at(p[r], p[c])) same = false;
    report.prism_matches_block_form = same;
  }
  return report;
}

}  // namespace linewalk
