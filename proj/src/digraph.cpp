#include "linewalk/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace linewalk {

Digraph::Digraph(int n, std::vector<Arc> arcs, bool allow_loops)
    : n_(n), allow_loops_(allow_loops) {
  if (n < 0) throw_error(ErrorCode::InvalidArgument, "negative vertex count");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (const Arc& a : arcs) {
    if (a.first < 0 || a.first >= n || a.second < 0 || a.second >= n)
      throw_error(ErrorCode::VertexOutOfRange,
                  "arc (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                      ") outside 0.." + std::to_string(n - 1));
    if (a.first == a.second) {
      if (!allow_loops_)
        throw_error(ErrorCode::LoopsPresent, "loop at vertex " + std::to_string(a.first));
      has_loops_ = true;
    }
  }
  arcs_ = std::move(arcs);
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const Arc& a : arcs_) {
    out_[a.first].push_back(a.second);
    in_[a.second].push_back(a.first);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
  // out_ lists come out sorted already because arcs_ is sorted.
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw_error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

bool Digraph::has_arc(int tail, int head) const { return arc_index(tail, head) >= 0; }

int Digraph::arc_index(int tail, int head) const {
  Arc key{tail, head};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
  if (it == arcs_.end() || *it != key) return -1;
  return static_cast<int>(it - arcs_.begin());
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

int MultiDigraph::total_arc_count() const {
  int total = 0;
  for (const auto& [arc, count] : multiplicity) total += count;
  return total;
}

bool MultiDigraph::all_multiplicities_one() const {
  for (const auto& [arc, count] : multiplicity)
    if (count != 1) return false;
  return true;
}

int in_degree(const Digraph& g, int v) { return g.in_degree(v); }
int out_degree(const Digraph& g, int v) { return g.out_degree(v); }
const std::vector<int>& in_neighbors(const Digraph& g, int v) { return g.in_neighbors(v); }
const std::vector<int>& out_neighbors(const Digraph& g, int v) { return g.out_neighbors(v); }

namespace {

// Iterative DFS reach count over a supplied neighbor accessor.
int reach_count(const Digraph& g, int start, bool forward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    const auto& nbrs = forward ? g.out_neighbors(v) : g.in_neighbors(v);
    for (int w : nbrs)
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count() < 1)
    throw_error(ErrorCode::InvalidArgument, "strong connectivity needs at least one vertex");
  if (g.vertex_count() == 1) return true;
  return reach_count(g, 0, true) == g.vertex_count() &&
         reach_count(g, 0, false) == g.vertex_count();
}

std::vector<std::vector<int>> connected_components(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.out_neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      for (int w : g.in_neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_weakly_connected(const Digraph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).size() == 1;
}

bool is_balanced(const Digraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) != g.out_degree(v)) return false;
  return true;
}

bool is_eulerian(const Digraph& g) { return is_weakly_connected(g) && is_balanced(g); }

bool all_components_eulerian(const Digraph& g) {
  // Each weak component is connected by construction, so the component-wise
  // condition collapses to balance at every vertex.
  return is_balanced(g);
}

std::vector<Arc> euler_circuit(const Digraph& g) {
  if (!is_eulerian(g)) throw_error(ErrorCode::NotEulerian, "circuit requires an eulerian digraph");
  if (g.arc_count() == 0) return {};

  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) > 0) {
      start = v;
      break;
    }

  // Hierholzer with a vertex stack; arcs consumed in ascending head order.
  std::vector<std::size_t> next_arc(g.vertex_count(), 0);
  std::vector<int> stack{start};
  std::vector<int> walk;
  while (!stack.empty()) {
    int v = stack.back();
    const auto& nbrs = g.out_neighbors(v);
    if (next_arc[v] < nbrs.size()) {
      stack.push_back(nbrs[next_arc[v]++]);
    } else {
      walk.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());

  if (static_cast<int>(walk.size()) != g.arc_count() + 1)
    throw_error(ErrorCode::NotEulerian, "arc set is not traversable in one circuit");
  std::vector<Arc> circuit;
  circuit.reserve(g.arc_count());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) circuit.emplace_back(walk[i], walk[i + 1]);
  return circuit;
}

bool is_hamilton_dicycle(const Digraph& g, const std::vector<int>& cycle) {
  if (static_cast<int>(cycle.size()) != g.vertex_count() || cycle.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool is_acyclic(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> indegree(n, 0);
  for (int v = 0; v < n; ++v) indegree[v] = g.in_degree(v);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int w : g.out_neighbors(v))
      if (--indegree[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

int longest_dipath_length(const Digraph& g) {
  if (!is_acyclic(g)) throw_error(ErrorCode::NotAcyclic, "longest dipath needs an acyclic digraph");
  int n = g.vertex_count();
  // Topological order by Kahn, then longest-path DP counting arcs.
  std::vector<int> indegree(n, 0), order;
  for (int v = 0; v < n; ++v) indegree[v] = g.in_degree(v);
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : g.out_neighbors(order[i]))
      if (--indegree[w] == 0) order.push_back(w);
  std::vector<int> best(n, 0);
  int longest = 0;
  for (int v : order)
    for (int w : g.out_neighbors(v)) {
      best[w] = std::max(best[w], best[v] + 1);
      longest = std::max(longest, best[w]);
    }
  return longest;
}

Digraph reverse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.emplace_back(a.second, a.first);
  return Digraph(g.vertex_count(), std::move(arcs), g.allows_loops());
}

IntMatrix adjacency(const Digraph& g) {
  IntMatrix m(g.vertex_count(), g.vertex_count());
  for (const Arc& a : g.arcs()) m.at(a.first, a.second) = BigInt(1);
  return m;
}

Digraph from_adjacency(const IntMatrix& m) {
  if (!m.is_square()) throw_error(ErrorCode::NotSquare, "adjacency matrix must be square");
  if (!m.is_zero_one()) throw_error(ErrorCode::NonBinaryMatrix, "adjacency entries must be 0 or 1");
  std::vector<Arc> arcs;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c).is_one()) arcs.emplace_back(r, c);
  return Digraph(m.rows(), std::move(arcs), true);
}

int regular_degree(const Digraph& g) {
  if (g.vertex_count() == 0) return -1;
  int k = g.out_degree(0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != k || g.in_degree(v) != k) return -1;
  return k;
}

Digraph dicycle(int n) {
  if (n < 2) throw_error(ErrorCode::InvalidArgument, "dicycle needs at least 2 vertices");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, std::move(arcs), false);
}

Digraph dipath(int n) {
  if (n < 1) throw_error(ErrorCode::InvalidArgument, "dipath needs at least 1 vertex");
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
  return Digraph(n, std::move(arcs), false);
}

Digraph complete_with_loops(int d) {
  if (d < 1) throw_error(ErrorCode::InvalidArgument, "need at least 1 vertex");
  std::vector<Arc> arcs;
  for (int t = 0; t < d; ++t)
    for (int h = 0; h < d; ++h) arcs.emplace_back(t, h);
  return Digraph(d, std::move(arcs), true);
}

std::string format_edge_list(const Digraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs())
    out += std::to_string(a.first) + " " + std::to_string(a.second) + "\n";
  return out;
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw_error(ErrorCode::ParseError, "expected header 'n m' on line " + std::to_string(line_no));
      have_header = true;
      continue;
    }
    long long t = 0, h = 0;
    if (!(fields >> t >> h))
      throw_error(ErrorCode::ParseError, "expected 'tail head' on line " + std::to_string(line_no));
    arcs.emplace_back(static_cast<int>(t), static_cast<int>(h));
  }
  if (!have_header) throw_error(ErrorCode::ParseError, "missing 'n m' header line");
  if (static_cast<long long>(arcs.size()) != m)
    throw_error(ErrorCode::ParseError, "header announced " + std::to_string(m) + " arcs, found " +
                                           std::to_string(arcs.size()));
  return Digraph(static_cast<int>(n), std::move(arcs), true);
}

}  // namespace linewalk
