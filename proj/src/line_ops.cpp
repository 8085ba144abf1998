#include "linewalk/line_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linewalk {

ArcLabeledDigraph line_digraph(const Digraph& g) {
  if (g.arc_count() == 0) throw_error(ErrorCode::EmptyArcSet, "line digraph of an arcless digraph");
  const std::vector<Arc>& base = g.arcs();
  const int m = static_cast<int>(base.size());

  // base is sorted lexicographically, so the arcs with a given tail form a
  // contiguous block; record where each block starts.
  std::vector<int> block_start(g.vertex_count() + 1, 0);
  {
    int v = 0;
    for (int i = 0; i < m; ++i) {
      while (v <= base[i].first) block_start[v++] = i;
    }
    while (v <= g.vertex_count()) block_start[v++] = m;
  }

  std::vector<Arc> line_arcs;
  for (int a = 0; a < m; ++a) {
    int join = base[a].second;  // head of a = tail of every successor arc
    for (int b = block_start[join]; b < block_start[join + 1]; ++b) line_arcs.emplace_back(a, b);
  }

  ArcLabeledDigraph out;
  out.graph = Digraph(m, std::move(line_arcs), true);
  out.base_arc_of = base;
  out.base_n = g.vertex_count();
  return out;
}

IteratedLineDigraph iterated_line_digraph(const Digraph& g, int k, std::size_t max_vertices) {
  if (k < 0) throw_error(ErrorCode::InvalidArgument, "negative iteration count");
  IteratedLineDigraph cur;
  cur.graph = g;
  cur.base_n = g.vertex_count();
  cur.dipath_of.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) cur.dipath_of[v] = {v};

  for (int step = 0; step < k; ++step) {
    if (cur.graph.arc_count() == 0) {
      // The next iterate has no vertices at all; everything from here on is
      // the truly empty digraph.
      cur.graph = Digraph(0, {}, true);
      cur.dipath_of.clear();
      return cur;
    }
    if (static_cast<std::size_t>(cur.graph.arc_count()) > max_vertices)
      throw_error(ErrorCode::SizeLimitExceeded,
                  "iterate would have " + std::to_string(cur.graph.arc_count()) +
                      " vertices, limit " + std::to_string(max_vertices));
    ArcLabeledDigraph next = line_digraph(cur.graph);
    std::vector<std::vector<int>> labels(next.graph.vertex_count());
    for (int v = 0; v < next.graph.vertex_count(); ++v) {
      const Arc& a = next.base_arc_of[v];  // arc of the previous iterate
      labels[v] = cur.dipath_of[a.first];
      labels[v].push_back(cur.dipath_of[a.second].back());
    }
    cur.graph = std::move(next.graph);
    cur.dipath_of = std::move(labels);
  }
  return cur;
}

namespace {

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

// Rows-as-sets criterion; with row_view = out-neighborhoods this is the row
// test, with in-neighborhoods it is its column dual.
bool identical_or_orthogonal_criterion(const Digraph& g, bool rows) {
  const int n = g.vertex_count();
  auto primary = [&](int v) -> const std::vector<int>& {
    return rows ? g.out_neighbors(v) : g.in_neighbors(v);
  };
  auto dual = [&](int v) -> const std::vector<int>& {
    return rows ? g.in_neighbors(v) : g.out_neighbors(v);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& pi = primary(i);
      const auto& pj = primary(j);
      if (pi == pj) {
        if (!pi.empty() && !disjoint_sorted(dual(i), dual(j))) return false;
      } else if (!disjoint_sorted(pi, pj)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_line_digraph_matrix(const Digraph& g) {
  if (g.has_loops())
    throw_error(ErrorCode::LoopsPresent, "line-digraph recognition requires loopless input");
  bool by_rows = identical_or_orthogonal_criterion(g, true);
  bool by_cols = identical_or_orthogonal_criterion(g, false);
  if (by_rows != by_cols)
    throw std::logic_error("row and column line-digraph criteria disagree");
  return by_rows;
}

// Brute-force witness scan. A loopless digraph fails to be a line digraph
// exactly when one of three small induced configurations occurs; each loop
// below enumerates candidate vertex tuples directly through arc queries, so
// this path shares nothing with the row/column set comparisons above.
//
//   incomplete out-sharing: u,w aim at a common head yet u also aims at some
//     b that w misses (the two-tails pattern and all its fatal completions;
//     the fully completed four-arc form has no missing b and survives);
//   incomplete in-sharing: the transpose configuration;
//   twin pair: u,v share both an in-neighbor and an out-neighbor, which
//     would force two parallel arcs in any base digraph.
bool is_line_digraph_forbidden(const Digraph& g, int max_n) {
  if (g.has_loops())
    throw_error(ErrorCode::LoopsPresent, "line-digraph recognition requires loopless input");
  if (g.vertex_count() > max_n)
    throw_error(ErrorCode::TooLarge, "forbidden-pattern scan limited to " + std::to_string(max_n) +
                                         " vertices");
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (u == w) continue;
      for (int a = 0; a < n; ++a) {
        if (!g.has_arc(u, a) || !g.has_arc(w, a)) continue;
        // Common head a: every other out-neighbor of u must also serve w.
        for (int b = 0; b < n; ++b)
          if (b != a && g.has_arc(u, b) && !g.has_arc(w, b)) return false;
      }
      for (int a = 0; a < n; ++a) {
        if (!g.has_arc(a, u) || !g.has_arc(a, w)) continue;
        // Common tail a: every other in-neighbor of u must also feed w.
        for (int b = 0; b < n; ++b)
          if (b != a && g.has_arc(b, u) && !g.has_arc(b, w)) return false;
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool shared_out = false, shared_in = false;
      for (int x = 0; x < n; ++x) {
        if (g.has_arc(u, x) && g.has_arc(v, x)) shared_out = true;
        if (g.has_arc(x, u) && g.has_arc(x, v)) shared_in = true;
      }
      if (shared_out && shared_in) return false;  // twin pair
    }
  return true;
}

GeneralPartitions recover_partitions(const Digraph& g) {
  if (!is_line_digraph_matrix(g))
    throw_error(ErrorCode::NotLineDigraph, "cannot recover partitions: matrix criterion fails");

  GeneralPartitions parts;
  std::map<std::vector<int>, std::vector<int>> by_out_set;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.out_neighbors(v).empty()) by_out_set[g.out_neighbors(v)].push_back(v);
  }
  std::vector<char> covered(g.vertex_count(), 0);
  for (const auto& [out_set, group] : by_out_set) {
    parts.a_classes.push_back(group);
    parts.b_classes.push_back(out_set);
    for (int v : out_set) covered[v] = 1;
  }
  // Sinks become singleton A-classes paired with empty B-classes; vertices in
  // nobody's out-neighborhood become singleton B-classes paired with empty
  // A-classes. Singletons keep every |A_j inter B_i| at most 1.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.out_neighbors(v).empty()) {
      parts.a_classes.push_back({v});
      parts.b_classes.push_back({});
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!covered[v]) {
      parts.a_classes.push_back({});
      parts.b_classes.push_back({v});
    }
  }
  if (!partitions_reconstruct(g, parts))
    throw std::logic_error("recovered partitions fail their defining conditions");
  return parts;
}

bool partitions_reconstruct(const Digraph& g, const GeneralPartitions& parts) {
  if (parts.a_classes.size() != parts.b_classes.size()) return false;
  const int n = g.vertex_count();
  std::vector<int> seen_a(n, 0), seen_b(n, 0);
  for (const auto& cls : parts.a_classes)
    for (int v : cls) {
      if (v < 0 || v >= n) return false;
      ++seen_a[v];
    }
  for (const auto& cls : parts.b_classes)
    for (int v : cls) {
      if (v < 0 || v >= n) return false;
      ++seen_b[v];
    }
  for (int v = 0; v < n; ++v)
    if (seen_a[v] != 1 || seen_b[v] != 1) return false;

  std::vector<Arc> product;
  for (std::size_t i = 0; i < parts.a_classes.size(); ++i)
    for (int t : parts.a_classes[i])
      for (int h : parts.b_classes[i]) product.emplace_back(t, h);
  std::sort(product.begin(), product.end());
  if (std::adjacent_find(product.begin(), product.end()) != product.end()) return false;
  if (product != g.arcs()) return false;

  for (std::size_t i = 0; i < parts.b_classes.size(); ++i) {
    for (std::size_t j = 0; j < parts.a_classes.size(); ++j) {
      std::vector<int> a_sorted = parts.a_classes[j];
      std::vector<int> b_sorted = parts.b_classes[i];
      std::sort(a_sorted.begin(), a_sorted.end());
      std::sort(b_sorted.begin(), b_sorted.end());
      std::vector<int> inter;
      std::set_intersection(a_sorted.begin(), a_sorted.end(), b_sorted.begin(), b_sorted.end(),
                            std::back_inserter(inter));
      std::size_t limit = i == j ? 0 : 1;
      if (inter.size() > limit) return false;
    }
  }
  return true;
}

InSplitPartition InSplitPartition::maximal(const Digraph& g) {
  InSplitPartition p;
  p.classes_per_vertex.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int t : g.in_neighbors(v)) p.classes_per_vertex[v].push_back({t});
  return p;
}

InSplitPartition InSplitPartition::trivial(const Digraph& g) {
  InSplitPartition p;
  p.classes_per_vertex.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.in_neighbors(v).empty()) p.classes_per_vertex[v].push_back(g.in_neighbors(v));
  return p;
}

MultiDigraph in_split(const Digraph& g, const InSplitPartition& p) {
  if (static_cast<int>(p.classes_per_vertex.size()) != g.vertex_count())
    throw_error(ErrorCode::InvalidPartition, "partition covers a different vertex count");

  // Validate per vertex: classes nonempty, disjoint, jointly the in-arc tails.
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> all;
    for (const auto& cls : p.classes_per_vertex[v]) {
      if (cls.empty())
        throw_error(ErrorCode::InvalidPartition, "empty class at vertex " + std::to_string(v));
      for (int t : cls) all.push_back(t);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw_error(ErrorCode::InvalidPartition, "overlapping classes at vertex " + std::to_string(v));
    if (all != g.in_neighbors(v))
      throw_error(ErrorCode::InvalidPartition,
                  "classes do not cover the in-arcs of vertex " + std::to_string(v));
  }

  // Global class ids in (vertex, class position) order.
  std::vector<std::vector<int>> class_id(g.vertex_count());
  int next_id = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (std::size_t j = 0; j < p.classes_per_vertex[v].size(); ++j)
      class_id[v].push_back(next_id++);

  MultiDigraph out;
  out.n = next_id;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t j = 0; j < p.classes_per_vertex[v].size(); ++j) {
      int target = class_id[v][j];
      for (int tail : p.classes_per_vertex[v][j]) {
        // Every class of the tail vertex sends one arc per member.
        for (int source : class_id[tail]) out.multiplicity[{source, target}] += 1;
      }
    }
  }
  return out;
}

Digraph debruijn(int d, int k, std::size_t max_vertices) {
  if (d < 2) throw_error(ErrorCode::InvalidArgument, "alphabet size must be at least 2");
  if (k < 1) throw_error(ErrorCode::InvalidArgument, "word length must be at least 1");
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::size_t>(d);
    if (size > max_vertices)
      throw_error(ErrorCode::SizeLimitExceeded,
                  "d^k exceeds the vertex limit " + std::to_string(max_vertices));
  }
  return iterated_line_digraph(complete_with_loops(d), k - 1, max_vertices).graph;
}

std::vector<int> euler_to_hamilton(const Digraph& g) {
  std::vector<Arc> circuit = euler_circuit(g);
  std::vector<int> cycle;
  cycle.reserve(circuit.size());
  for (const Arc& a : circuit) cycle.push_back(g.arc_index(a.first, a.second));
  return cycle;
}

std::string format_labeled(const ArcLabeledDigraph& lg) {
  std::string out = format_edge_list(lg.graph);
  for (std::size_t v = 0; v < lg.base_arc_of.size(); ++v)
    out += "# vertex " + std::to_string(v) + " = arc (" + std::to_string(lg.base_arc_of[v].first) +
           "," + std::to_string(lg.base_arc_of[v].second) + ")\n";
  return out;
}

}  // namespace linewalk
