#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/graph.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

// Node count bound for the exhaustive searches below.
inline constexpr Code kStructureCap = 4096;

struct Violation {
  std::string case_id;
  std::string expected;
  std::string observed;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct TheoremReport {
  int n = 0;
  int k = 0;
  std::size_t cases_checked = 0;
  std::size_t exceptions = 0;  // cases where the theorem predicts "no"
  std::vector<Violation> violations;

  bool confirmed() const { return violations.empty(); }
};

namespace detail {

inline Code structure_nodes(int n, int k) {
  if (n < 1 || k < 2) throw InvalidArgument("need n >= 1 and k >= 2");
  Code nodes = checked_pow(k, n);
  if (nodes > kStructureCap) throw WorkCapExceeded("k^n = " + std::to_string(nodes) + " exceeds 4096");
  return nodes;
}

inline std::string node_name(Code v, int n, int k) { return word_to_string(Word{v, n, k}); }

class HamiltonSearch {
 public:
  HamiltonSearch(int n, int k) : k_(k), nodes_(checked_pow(k, n)), visited_(nodes_, 0) {}

  std::optional<std::vector<Code>> through(Code a, Code b) {
    if (a == b) return nodes_ == 1 ? std::optional<std::vector<Code>>{std::vector<Code>{a}} : std::nullopt;
    start_ = a;
    path_ = {a, b};
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[a] = visited_[b] = 1;
    if (nodes_ == 2) {
      if (is_succ(b, a)) return path_;
      return std::nullopt;
    }
    if (!feasible_after(a, b)) return std::nullopt;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  Code succ(Code v, int c) const { return (v * static_cast<Code>(k_) + static_cast<Code>(c)) % nodes_; }
  Code pred(Code v, int c) const { return v / static_cast<Code>(k_) + static_cast<Code>(c) * (nodes_ / static_cast<Code>(k_)); }
  bool is_succ(Code v, Code w) const { return w / static_cast<Code>(k_) == v % (nodes_ / static_cast<Code>(k_)); }

  // `prev` just became interior and `end` is the new path end: every node still
  // waiting for a predecessor (unvisited nodes, and the start) must keep one.
  bool feasible_after(Code prev, Code end) const {
    auto has_pred = [&](Code u) {
      for (int c = 0; c < k_; ++c) {
        Code p = pred(u, c);
        if (p == u) continue;
        if (p == end || !visited_[p]) return true;
      }
      return false;
    };
    for (int c = 0; c < k_; ++c) {
      Code u = succ(prev, c);
      if (u == end) continue;
      if (u == start_ || !visited_[u])
        if (!has_pred(u)) return false;
    }
    return true;
  }

  bool extend() {
    Code v = path_.back();
    if (path_.size() == nodes_) return is_succ(v, start_);
    for (int c = 0; c < k_; ++c) {
      Code w = succ(v, c);
      if (visited_[w]) continue;
      visited_[w] = 1;
      path_.push_back(w);
      if (feasible_after(v, w) && extend()) return true;
      path_.pop_back();
      visited_[w] = 0;
    }
    return false;
  }

  int k_;
  Code nodes_;
  Code start_ = 0;
  std::vector<char> visited_;
  std::vector<Code> path_;
};

}  // namespace detail

// Closed walk check: k^n distinct nodes, consecutive overlaps, and a -> b used.
inline bool is_hamiltonian_cycle_through(int n, int k, const std::vector<Code>& cycle, Code a, Code b) {
  Code nodes = checked_pow(k, n);
  if (cycle.size() != nodes) return false;
  std::vector<char> seen(nodes, 0);
  for (Code v : cycle) {
    if (v >= nodes || seen[v]) return false;
    seen[v] = 1;
  }
  bool uses_edge = false;
  Code shift = nodes / static_cast<Code>(k);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Code v = cycle[i];
    Code w = cycle[(i + 1) % cycle.size()];
    if (w / static_cast<Code>(k) != v % shift) return false;
    if (v == a && w == b) uses_edge = true;
  }
  return uses_edge;
}

// Backtracking with a -> b forced first and successors tried in code order.
inline std::optional<std::vector<Code>> hamiltonian_cycle_through_edge(int n, int k, const Word& a, const Word& b) {
  Code nodes = detail::structure_nodes(n, k);
  if (a.code >= nodes || b.code >= nodes) throw InvalidArgument("hamiltonian_cycle_through_edge: node out of range");
  if (b.code / static_cast<Code>(k) != a.code % (nodes / static_cast<Code>(k)))
    throw NotAnEdge(detail::node_name(a.code, n, k) + " -> " + detail::node_name(b.code, n, k) + " is not an edge");
  detail::HamiltonSearch search(n, k);
  return search.through(a.code, b.code);
}

// Every non-loop edge a -> b should lie on a Hamiltonian cycle unless k = 2,
// a is out-special and b is in-special.
inline TheoremReport verify_ham_edge_theorem(int n, int k) {
  Code nodes = detail::structure_nodes(n, k);
  TheoremReport report{n, k, 0, 0, {}};
  detail::HamiltonSearch search(n, k);
  for (Code a = 0; a < nodes; ++a) {
    for (int c = 0; c < k; ++c) {
      Code b = (a * static_cast<Code>(k) + static_cast<Code>(c)) % nodes;
      if (a == b) continue;
      ++report.cases_checked;
      bool expected = !(k == 2 && classify_node(n, k, a).is_out_special && classify_node(n, k, b).is_in_special);
      if (!expected) ++report.exceptions;
      auto cycle = search.through(a, b);
      bool observed = cycle.has_value();
      std::string id = detail::node_name(a, n, k) + "->" + detail::node_name(b, n, k);
      if (observed && !is_hamiltonian_cycle_through(n, k, *cycle, a, b)) {
        report.violations.push_back({id, "valid hamiltonian cycle", "malformed cycle"});
      } else if (observed != expected) {
        report.violations.push_back({id, expected ? "cycle" : "no cycle", observed ? "cycle" : "no cycle"});
      }
    }
  }
  return report;
}

namespace detail {

// Unit-capacity max flow, BFS augmenting paths.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  void add_edge(std::size_t from, std::size_t to, int cap) {
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, cap});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  int max_flow(std::size_t source, std::size_t sink) {
    int flow = 0;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    for (;;) {
      std::vector<std::size_t> via(adj_.size(), none);
      std::deque<std::size_t> queue{source};
      std::vector<char> seen(adj_.size(), 0);
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t id : adj_[v]) {
          const Arc& arc = edges_[id];
          if (arc.cap > 0 && !seen[arc.to]) {
            seen[arc.to] = 1;
            via[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[sink]) return flow;
      int push = std::numeric_limits<int>::max();
      for (std::size_t v = sink; v != source; v = edges_[via[v] ^ 1].to) push = std::min(push, edges_[via[v]].cap);
      for (std::size_t v = sink; v != source; v = edges_[via[v] ^ 1].to) {
        edges_[via[v]].cap -= push;
        edges_[via[v] ^ 1].cap += push;
      }
      flow += push;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> edges_;
};

}  // namespace detail

// Maximum number of u -> v paths in B(n, k) sharing no node besides u and v
// and avoiding loop nodes.
inline int max_node_disjoint_paths(int n, int k, const Word& u, const Word& v) {
  Code nodes = detail::structure_nodes(n, k);
  if (u.code >= nodes || v.code >= nodes) throw InvalidArgument("max_node_disjoint_paths: node out of range");
  if (u.code == v.code) throw InvalidArgument("max_node_disjoint_paths: u and v must differ");
  if (classify_node(n, k, u.code).is_loop || classify_node(n, k, v.code).is_loop)
    throw InvalidArgument("max_node_disjoint_paths: u and v must not be loops");

  // Paths run in the loopless graph: loop nodes are never interior. Node x
  // splits into in = 2x and out = 2x + 1.
  const int big = static_cast<int>(nodes) * k + 1;
  detail::FlowNetwork net(2 * nodes);
  for (Code x = 0; x < nodes; ++x) {
    if (classify_node(n, k, x).is_loop) continue;
    int cap = (x == u.code || x == v.code) ? big : 1;
    net.add_edge(2 * x, 2 * x + 1, cap);
    for (int c = 0; c < k; ++c) {
      Code y = (x * static_cast<Code>(k) + static_cast<Code>(c)) % nodes;
      if (!classify_node(n, k, y).is_loop) net.add_edge(2 * x + 1, 2 * y, 1);
    }
  }
  return net.max_flow(2 * u.code + 1, 2 * v.code);
}

// For distinct non-loop u, v: exactly k disjoint paths iff u is not
// out-special and v is not in-special.
inline TheoremReport verify_menger_theorem(int n, int k) {
  Code nodes = detail::structure_nodes(n, k);
  TheoremReport report{n, k, 0, 0, {}};
  std::vector<NodeClass> cls;
  cls.reserve(nodes);
  for (Code x = 0; x < nodes; ++x) cls.push_back(classify_node(n, k, x));
  for (Code u = 0; u < nodes; ++u) {
    if (cls[u].is_loop) continue;
    for (Code v = 0; v < nodes; ++v) {
      if (v == u || cls[v].is_loop) continue;
      ++report.cases_checked;
      bool expected = !cls[u].is_out_special && !cls[v].is_in_special;
      if (!expected) ++report.exceptions;
      int count = max_node_disjoint_paths(n, k, Word{u, n, k}, Word{v, n, k});
      if ((count == k) != expected)
        report.violations.push_back({detail::node_name(u, n, k) + "=>" + detail::node_name(v, n, k),
                                     expected ? std::to_string(k) + " paths" : "fewer than " + std::to_string(k),
                                     std::to_string(count) + " paths"});
    }
  }
  return report;
}

}  // namespace ucycle
