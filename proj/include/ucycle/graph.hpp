#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

// Largest edge universe k^(m+1) we are willing to materialize.
inline constexpr Code kEnumerationCap = Code{1} << 20;

// Subgraph of the de Bruijn graph B(m, k). Nodes are words of length m, edges
// are words x_1..x_{m+1} of length m+1 running x_1..x_m -> x_2..x_{m+1}.
class DbSubgraph {
 public:
  DbSubgraph(int m, int k) : m_(m), k_(k) {
    if (m < 1 || k < 2) throw InvalidArgument("DbSubgraph: need m >= 1 and k >= 2");
    edge_universe_ = checked_pow(k, m + 1);
    if (edge_universe_ > kEnumerationCap)
      throw WorkCapExceeded("k^(m+1) = " + std::to_string(edge_universe_) + " exceeds the enumeration cap 2^20");
    nodes_ = edge_universe_ / static_cast<Code>(k);
    present_.assign(edge_universe_, 0);
    out_deg_.assign(nodes_, 0);
    in_deg_.assign(nodes_, 0);
  }

  static DbSubgraph full(int m, int k) {
    DbSubgraph g(m, k);
    g.rebuild_from_removal({});
    return g;
  }

  // Edges are the surviving words of length n; the graph lives on A^(n-1).
  static DbSubgraph from_survivors(const WordSet& survivors) {
    DbSubgraph g(survivors.n() - 1, survivors.k());
    std::fill(g.present_.begin(), g.present_.end(), 0);
    for (Code e : survivors.members()) g.present_[e] = 1;
    g.recount();
    return g;
  }

  static DbSubgraph from_removal(int m, int k, std::span<const Code> removed) {
    DbSubgraph g(m, k);
    g.rebuild_from_removal(removed);
    return g;
  }

  // Resets to B(m, k) minus `removed`, reusing storage.
  void rebuild_from_removal(std::span<const Code> removed) {
    std::fill(present_.begin(), present_.end(), 1);
    for (Code e : removed) {
      if (e >= edge_universe_) throw InvalidArgument("DbSubgraph: edge code out of range");
      present_[e] = 0;
    }
    recount();
  }

  int node_length() const { return m_; }
  int alphabet() const { return k_; }
  Code node_count() const { return nodes_; }
  Code edge_universe() const { return edge_universe_; }
  std::size_t edge_count() const { return edge_count_; }

  Code tail(Code e) const { return e / static_cast<Code>(k_); }
  Code head(Code e) const { return e % nodes_; }
  bool has_edge(Code e) const { return e < edge_universe_ && present_[e] != 0; }

  std::span<const int> out_degrees() const { return out_deg_; }
  std::span<const int> in_degrees() const { return in_deg_; }

  std::vector<Code> edges() const {
    std::vector<Code> out;
    out.reserve(edge_count_);
    for (Code e = 0; e < edge_universe_; ++e)
      if (present_[e]) out.push_back(e);
    return out;
  }

  // Present out-edges of `node` in increasing code order.
  template <typename Fn>
  void for_each_out_edge(Code node, Fn&& fn) const {
    Code base = node * static_cast<Code>(k_);
    for (int c = 0; c < k_; ++c)
      if (present_[base + static_cast<Code>(c)]) fn(base + static_cast<Code>(c));
  }

  template <typename Fn>
  void for_each_in_edge(Code node, Fn&& fn) const {
    for (int c = 0; c < k_; ++c) {
      Code e = static_cast<Code>(c) * nodes_ + node;
      if (present_[e]) fn(e);
    }
  }

 private:
  void recount() {
    std::fill(out_deg_.begin(), out_deg_.end(), 0);
    std::fill(in_deg_.begin(), in_deg_.end(), 0);
    edge_count_ = 0;
    for (Code e = 0; e < edge_universe_; ++e) {
      if (!present_[e]) continue;
      ++out_deg_[tail(e)];
      ++in_deg_[head(e)];
      ++edge_count_;
    }
  }

  int m_;
  int k_;
  Code nodes_ = 0;
  Code edge_universe_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> present_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

inline DbSubgraph build_full(int m, int k) { return DbSubgraph::full(m, k); }
inline DbSubgraph build_from_survivors(const WordSet& survivors) { return DbSubgraph::from_survivors(survivors); }

struct DegreeDefect {
  Code node;
  int defect;  // out_deg - in_deg

  friend bool operator==(const DegreeDefect&, const DegreeDefect&) = default;
};

inline std::vector<DegreeDefect> degree_defects(const DbSubgraph& g) {
  std::vector<DegreeDefect> out;
  auto od = g.out_degrees();
  auto id = g.in_degrees();
  for (Code v = 0; v < g.node_count(); ++v)
    if (od[v] != id[v]) out.push_back({v, od[v] - id[v]});
  return out;
}

inline bool is_balanced(const DbSubgraph& g) {
  auto od = g.out_degrees();
  auto id = g.in_degrees();
  for (Code v = 0; v < g.node_count(); ++v)
    if (od[v] != id[v]) return false;
  return true;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Code{0}); }
  Code find(Code x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Code a, Code b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Code> parent_;
};

inline bool on_support(const DbSubgraph& g, Code v) { return g.out_degrees()[v] + g.in_degrees()[v] > 0; }

}  // namespace detail

// Weak connectivity over nodes that touch at least one edge. A graph with no
// edges is reported as not connected.
inline bool is_connected_on_support(const DbSubgraph& g) {
  if (g.edge_count() == 0) return false;
  detail::DisjointSets sets(g.node_count());
  std::size_t support = 0;
  std::size_t merges = 0;
  for (Code v = 0; v < g.node_count(); ++v) {
    if (!detail::on_support(g, v)) continue;
    ++support;
    g.for_each_out_edge(v, [&](Code e) {
      if (sets.unite(v, g.head(e))) ++merges;
    });
  }
  return merges + 1 == support;
}

inline bool is_strongly_connected_on_support(const DbSubgraph& g) {
  if (g.edge_count() == 0) return false;
  Code root = g.node_count();
  std::size_t support = 0;
  for (Code v = 0; v < g.node_count(); ++v) {
    if (!detail::on_support(g, v)) continue;
    if (root == g.node_count()) root = v;
    ++support;
  }
  auto reach = [&](bool forward) {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<Code> stack{root};
    seen[root] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Code v = stack.back();
      stack.pop_back();
      auto visit = [&](Code w) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      };
      if (forward)
        g.for_each_out_edge(v, [&](Code e) { visit(g.head(e)); });
      else
        g.for_each_in_edge(v, [&](Code e) { visit(g.tail(e)); });
    }
    return count;
  };
  return reach(true) == support && reach(false) == support;
}

struct NodeClass {
  bool is_loop = false;
  bool is_out_special = false;  // y x^(m-1), y != x
  bool is_in_special = false;   // x^(m-1) y, y != x

  friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

inline NodeClass classify_node(int m, int k, Code node) {
  if (m < 1 || node >= checked_pow(k, m)) throw InvalidArgument("classify_node: node out of range");
  auto x = decode(node, m, k);
  auto all_equal = [](auto first, auto last) { return std::adjacent_find(first, last, std::not_equal_to<>{}) == last; };
  NodeClass cls;
  cls.is_loop = all_equal(x.begin(), x.end());
  if (!cls.is_loop && m >= 2) {
    cls.is_out_special = all_equal(x.begin() + 1, x.end()) && x[0] != x[1];
    cls.is_in_special = all_equal(x.begin(), x.end() - 1) && x[m - 1] != x[m - 2];
  }
  return cls;
}

}  // namespace ucycle
