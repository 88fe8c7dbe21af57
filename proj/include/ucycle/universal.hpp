#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/graph.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

enum class UKind { cycle, word };

inline std::string to_string(UKind kind) { return kind == UKind::cycle ? "cycle" : "word"; }

inline UKind parse_kind(std::string_view text) {
  if (text == "cycle") return UKind::cycle;
  if (text == "word") return UKind::word;
  throw InvalidArgument("kind must be 'cycle' or 'word', got '" + std::string(text) + "'");
}

// A u-cycle (circular, length |S|) or u-word (linear, length |S| + n - 1).
struct UObject {
  UKind kind = UKind::word;
  std::vector<Letter> text;
  int n = 2;
  int k = 2;

  std::string str() const { return letters_to_string(text, k); }
};

// Degree part of the semi-Eulerian criterion: at most one +1 node, at most one
// -1 node, everything else balanced.
inline bool has_trail_degrees(const DbSubgraph& g) {
  int plus = 0;
  int minus = 0;
  auto od = g.out_degrees();
  auto id = g.in_degrees();
  for (Code v = 0; v < g.node_count(); ++v) {
    int d = od[v] - id[v];
    if (d == 0) continue;
    if (d == 1 && ++plus <= 1) continue;
    if (d == -1 && ++minus <= 1) continue;
    return false;
  }
  return true;
}

inline bool has_eulerian_trail(const DbSubgraph& g) { return has_trail_degrees(g) && is_connected_on_support(g); }

inline bool has_eulerian_circuit(const DbSubgraph& g) { return is_balanced(g) && is_connected_on_support(g); }

inline bool u_word_exists(const WordSet& survivors) {
  if (survivors.empty()) return false;
  return has_eulerian_trail(build_from_survivors(survivors));
}

// A u-cycle needs an Eulerian circuit and at least n words.
inline bool u_cycle_exists(const WordSet& survivors) {
  if (survivors.size() < static_cast<std::size_t>(survivors.n())) return false;
  return has_eulerian_circuit(build_from_survivors(survivors));
}

namespace detail {

// Hierholzer from `start`, always taking the smallest unused out-edge.
inline std::vector<Code> eulerian_edge_sequence(const DbSubgraph& g, Code start) {
  const int k = g.alphabet();
  std::vector<int> cursor(g.node_count(), 0);
  constexpr Code none = ~Code{0};
  std::vector<std::pair<Code, Code>> stack{{start, none}};  // (node, edge used to reach it)
  std::vector<Code> trail;
  trail.reserve(g.edge_count());
  while (!stack.empty()) {
    Code v = stack.back().first;
    Code base = v * static_cast<Code>(k);
    int& c = cursor[v];
    while (c < k && !g.has_edge(base + static_cast<Code>(c))) ++c;
    if (c < k) {
      Code e = base + static_cast<Code>(c);
      ++c;
      stack.emplace_back(g.head(e), e);
    } else {
      if (stack.back().second != none) trail.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(trail.begin(), trail.end());
  return trail;
}

inline Code smallest_node_with_edge(const DbSubgraph& g) {
  for (Code v = 0; v < g.node_count(); ++v)
    if (g.out_degrees()[v] > 0) return v;
  return g.node_count();
}

}  // namespace detail

inline UObject construct_u_word(const WordSet& survivors) {
  if (!u_word_exists(survivors)) throw NotUniversal("no u-word exists for this word set");
  DbSubgraph g = build_from_survivors(survivors);
  Code start = detail::smallest_node_with_edge(g);
  for (const auto& d : degree_defects(g))
    if (d.defect == 1) start = d.node;
  auto trail = detail::eulerian_edge_sequence(g, start);
  if (trail.size() != g.edge_count()) throw Error("construct_u_word: trail does not cover all edges");
  UObject obj{UKind::word, decode(start, g.node_length(), g.alphabet()), survivors.n(), survivors.k()};
  for (Code e : trail) obj.text.push_back(static_cast<Letter>(e % static_cast<Code>(g.alphabet())));
  return obj;
}

inline UObject construct_u_cycle(const WordSet& survivors) {
  if (!u_cycle_exists(survivors)) throw NotUniversal("no u-cycle exists for this word set");
  DbSubgraph g = build_from_survivors(survivors);
  auto trail = detail::eulerian_edge_sequence(g, detail::smallest_node_with_edge(g));
  if (trail.size() != g.edge_count()) throw Error("construct_u_cycle: circuit does not cover all edges");
  UObject obj{UKind::cycle, {}, survivors.n(), survivors.k()};
  for (Code e : trail) obj.text.push_back(static_cast<Letter>(e / g.node_count()));
  return obj;
}

inline UObject construct(UKind kind, const WordSet& survivors) {
  return kind == UKind::cycle ? construct_u_cycle(survivors) : construct_u_word(survivors);
}

// Windows of the candidate (wrapping for cycles) must list `survivors` exactly once each.
inline bool verify_u_object(const UObject& candidate, const WordSet& survivors) {
  const int n = survivors.n();
  const int k = survivors.k();
  if (candidate.n != n || candidate.k != k) return false;
  const std::size_t len = candidate.text.size();
  for (Letter x : candidate.text)
    if (x < 0 || x >= k) return false;
  std::size_t windows = 0;
  if (candidate.kind == UKind::cycle) {
    if (len < static_cast<std::size_t>(n)) return false;
    windows = len;
  } else {
    if (len < static_cast<std::size_t>(n)) return false;
    windows = len - static_cast<std::size_t>(n) + 1;
  }
  if (windows != survivors.size()) return false;
  std::vector<Code> seen;
  seen.reserve(windows);
  for (std::size_t i = 0; i < windows; ++i) {
    Code code = 0;
    for (int j = 0; j < n; ++j)
      code = code * static_cast<Code>(k) + static_cast<Code>(candidate.text[(i + static_cast<std::size_t>(j)) % len]);
    seen.push_back(code);
  }
  std::sort(seen.begin(), seen.end());
  return std::equal(seen.begin(), seen.end(), survivors.members().begin(), survivors.members().end());
}

}  // namespace ucycle
