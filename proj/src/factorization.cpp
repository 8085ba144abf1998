#include "linewalk/factorization.hpp"

#include <algorithm>

namespace linewalk {

std::vector<Arc> OneFactor::arcs() const {
  std::vector<Arc> out;
  out.reserve(successor.size());
  for (int v = 0; v < static_cast<int>(successor.size()); ++v) out.emplace_back(v, successor[v]);
  return out;
}

namespace {

bool is_permutation_array(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void validate_against_host(const Digraph& g, const Factorization& f) {
  std::vector<Arc> all;
  for (const OneFactor& factor : f.factors) {
    if (static_cast<int>(factor.successor.size()) != g.vertex_count())
      throw_error(ErrorCode::InvalidArgument, "factor size differs from host vertex count");
    if (!is_permutation_array(factor.successor))
      throw_error(ErrorCode::InvalidArgument, "factor successor array is not a permutation");
    for (const Arc& a : factor.arcs()) {
      if (!g.has_arc(a.first, a.second))
        throw_error(ErrorCode::InvalidArgument, "factor uses an arc absent from the host");
      all.push_back(a);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw_error(ErrorCode::InvalidArgument, "factors are not arc-disjoint");
  if (all != g.arcs())
    throw_error(ErrorCode::InvalidArgument, "factors do not cover the host arc set");
}

}  // namespace

Factorization make_factorization(const Digraph& g, const std::vector<std::vector<int>>& successors) {
  int k = regular_degree(g);
  if (k < 0) throw_error(ErrorCode::NotRegular, "factorization requires a regular digraph");
  if (static_cast<int>(successors.size()) != k)
    throw_error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(k) + " factors for a " + std::to_string(k) +
                    "-regular digraph");
  Factorization f;
  f.host_n = g.vertex_count();
  for (const auto& s : successors) f.factors.push_back(OneFactor{s});
  validate_against_host(g, f);
  return f;
}

Factorization one_factorization(const Digraph& g) {
  int k = regular_degree(g);
  if (k < 0) throw_error(ErrorCode::NotRegular, "factorization requires a regular digraph");
  const int n = g.vertex_count();

  Factorization out;
  out.host_n = n;
  if (n == 0) return out;

  // Remaining out-lists start as the full (sorted) adjacency and lose one
  // matching per round. A (k-r)-regular bipartite graph always has a perfect
  // matching, so each round succeeds.
  std::vector<std::vector<int>> remaining(n);
  for (int v = 0; v < n; ++v) remaining[v] = g.out_neighbors(v);

  for (int round = 0; round < k; ++round) {
    std::vector<int> head_match(n, -1);  // head -> matched tail
    std::vector<char> visited(n, 0);

    // Kuhn's augmenting search, ascending visit order throughout.
    auto augment = [&](auto&& self, int tail) -> bool {
      for (int head : remaining[tail]) {
        if (visited[head]) continue;
        visited[head] = 1;
        if (head_match[head] == -1 || self(self, head_match[head])) {
          head_match[head] = tail;
          return true;
        }
      }
      return false;
    };

    for (int tail = 0; tail < n; ++tail) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, tail))
        throw_error(ErrorCode::NotRegular, "matching round failed; arc set is not factorable");
    }

    OneFactor factor;
    factor.successor.assign(n, -1);
    for (int head = 0; head < n; ++head) factor.successor[head_match[head]] = head;
    for (int tail = 0; tail < n; ++tail) {
      auto& rem = remaining[tail];
      rem.erase(std::find(rem.begin(), rem.end(), factor.successor[tail]));
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

IntMatrix factor_matrix(const OneFactor& f) {
  int n = static_cast<int>(f.successor.size());
  IntMatrix m(n, n);
  for (int v = 0; v < n; ++v) m.at(v, f.successor[v]) = BigInt(1);
  return m;
}

Subdigraph spanning_subdigraph(const Digraph& host, const Digraph& f) {
  if (f.vertex_count() != host.vertex_count())
    throw_error(ErrorCode::NotSpanning, "subdigraph does not span the host vertex set");
  Subdigraph s;
  s.vertices.resize(host.vertex_count());
  for (int v = 0; v < host.vertex_count(); ++v) s.vertices[v] = v;
  s.arcs = f.arcs();
  return s;
}

Subdigraph factor_subdigraph(const Digraph& host, const OneFactor& f) {
  Subdigraph s;
  s.vertices.resize(host.vertex_count());
  for (int v = 0; v < host.vertex_count(); ++v) s.vertices[v] = v;
  s.arcs = f.arcs();
  std::sort(s.arcs.begin(), s.arcs.end());
  return s;
}

GrowthResult growth(const Digraph& host, const Subdigraph& f) {
  std::vector<int> position(host.vertex_count(), -1);
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    int v = f.vertices[i];
    if (v < 0 || v >= host.vertex_count())
      throw_error(ErrorCode::NotSubdigraph, "subdigraph vertex outside the host");
    if (position[v] != -1) throw_error(ErrorCode::NotSubdigraph, "duplicate subdigraph vertex");
    position[v] = static_cast<int>(i);
  }
  std::vector<Arc> sub_arcs = f.arcs;
  std::sort(sub_arcs.begin(), sub_arcs.end());
  for (const Arc& a : sub_arcs) {
    if (!host.has_arc(a.first, a.second))
      throw_error(ErrorCode::NotSubdigraph, "subdigraph arc absent from the host");
    if (position[a.first] == -1 || position[a.second] == -1)
      throw_error(ErrorCode::NotSubdigraph, "subdigraph arc endpoint outside its vertex set");
  }

  // One fresh vertex per host out-arc that leaves a subdigraph vertex but is
  // missing from the subdigraph; ordered by the shadowed arc's (head, tail).
  std::vector<GrowthResult::Fresh> fresh;
  for (int v : f.vertices) {
    for (int h : host.out_neighbors(v)) {
      Arc a{v, h};
      if (!std::binary_search(sub_arcs.begin(), sub_arcs.end(), a))
        fresh.push_back({v, a});
    }
  }
  std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) {
    return std::pair(x.shadowed.second, x.shadowed.first) <
           std::pair(y.shadowed.second, y.shadowed.first);
  });

  const int core = static_cast<int>(f.vertices.size());
  std::vector<Arc> arcs;
  for (const Arc& a : sub_arcs) arcs.emplace_back(position[a.first], position[a.second]);
  for (std::size_t i = 0; i < fresh.size(); ++i)
    arcs.emplace_back(position[fresh[i].anchor], core + static_cast<int>(i));

  GrowthResult out;
  out.graph = Digraph(core + static_cast<int>(fresh.size()), std::move(arcs), host.allows_loops());
  out.core_vertices = f.vertices;
  out.fresh = std::move(fresh);
  return out;
}

GrowthResult growth(const Digraph& host, const Digraph& f) {
  return growth(host, spanning_subdigraph(host, f));
}

IntMatrix block_line_matrix(const Factorization& f) {
  const int n = f.host_n;
  const int k = f.k();
  IntMatrix m(k * n, k * n);
  for (int row_block = 0; row_block < k; ++row_block)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i)
        m.at(row_block * n + i, j * n + f.factors[j].successor[i]) = BigInt(1);
  return m;
}

Digraph factorization_host(const Factorization& f) {
  std::vector<Arc> arcs;
  for (const OneFactor& factor : f.factors)
    for (const Arc& a : factor.arcs()) arcs.push_back(a);
  return Digraph(f.host_n, std::move(arcs), true);
}

std::vector<int> permutation_to_line_labels(const Factorization& f) {
  Digraph host = factorization_host(f);
  std::vector<int> perm(host.arc_count(), -1);
  for (int j = 0; j < f.k(); ++j) {
    for (int i = 0; i < f.host_n; ++i) {
      int head = f.factors[j].successor[i];
      int lex = host.arc_index(i, head);
      perm[lex] = j * f.host_n + head;
    }
  }
  return perm;
}

std::string format_factorization(const Factorization& f) {
  std::string out = "factors " + std::to_string(f.k()) + " " + std::to_string(f.host_n) + "\n";
  for (const OneFactor& factor : f.factors) {
    for (int v = 0; v < f.host_n; ++v) {
      if (v > 0) out += ' ';
      out += std::to_string(factor.successor[v]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace linewalk
