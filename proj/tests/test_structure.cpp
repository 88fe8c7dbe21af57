#include <catch_amalgamated.hpp>

#include <cstring>

#include "oracles.hpp"
#include "ucycle/structure.hpp"

using namespace ucycle;

namespace {

Word w(const char* text, int k = 2) { return word_from_string(text, static_cast<int>(std::strlen(text)), k); }

}  // namespace

TEST_CASE("hamiltonian cycles through a given edge", "[structure]") {
  CHECK_FALSE(hamiltonian_cycle_through_edge(3, 2, w("100"), w("001")).has_value());
  CHECK_FALSE(hamiltonian_cycle_through_edge(3, 2, w("011"), w("110")).has_value());

  auto cyc = hamiltonian_cycle_through_edge(3, 2, w("000"), w("001"));
  REQUIRE(cyc.has_value());
  CHECK(is_hamiltonian_cycle_through(3, 2, *cyc, w("000").code, w("001").code));

  for (Code a = 0; a < 9; ++a)
    for (int c = 0; c < 3; ++c) {
      Code b = (a * 3 + static_cast<Code>(c)) % 9;
      if (a == b) continue;
      auto found = hamiltonian_cycle_through_edge(2, 3, Word{a, 2, 3}, Word{b, 2, 3});
      REQUIRE(found.has_value());
      REQUIRE(is_hamiltonian_cycle_through(2, 3, *found, a, b));
    }

  CHECK_THROWS_AS(hamiltonian_cycle_through_edge(3, 2, w("000"), w("100")), NotAnEdge);
  CHECK_THROWS_AS(hamiltonian_cycle_through_edge(13, 2, w("0000000000000"), w("0000000000001")), WorkCapExceeded);
}

TEST_CASE("cycle checker", "[structure]") {
  // 00 -> 01 -> 11 -> 10
  std::vector<Code> cyc{0, 1, 3, 2};
  CHECK(is_hamiltonian_cycle_through(2, 2, cyc, 1, 3));
  CHECK_FALSE(is_hamiltonian_cycle_through(2, 2, cyc, 3, 1));
  CHECK_FALSE(is_hamiltonian_cycle_through(2, 2, {0, 1, 3}, 0, 1));
  CHECK_FALSE(is_hamiltonian_cycle_through(2, 2, {0, 1, 2, 3}, 0, 1));
  CHECK_FALSE(is_hamiltonian_cycle_through(2, 2, {0, 1, 1, 2}, 0, 1));
}

TEST_CASE("edge theorem reports", "[structure]") {
  auto r32 = verify_ham_edge_theorem(3, 2);
  CHECK(r32.confirmed());
  CHECK(r32.cases_checked == 14);
  CHECK(r32.exceptions == 2);

  struct Row { int n, k; std::size_t cases, exceptions; };
  for (auto row : {Row{2, 2, 6, 2}, Row{4, 2, 30, 2}, Row{5, 2, 62, 2}, Row{2, 3, 24, 0}, Row{3, 3, 78, 0},
                   Row{2, 4, 60, 0}}) {
    auto r = verify_ham_edge_theorem(row.n, row.k);
    INFO("n=" << row.n << " k=" << row.k);
    CHECK(r.confirmed());
    CHECK(r.cases_checked == row.cases);
    CHECK(r.exceptions == row.exceptions);
  }
}

TEST_CASE("node-disjoint path counts", "[structure]") {
  CHECK(max_node_disjoint_paths(3, 2, w("010"), w("101")) == 2);
  CHECK(max_node_disjoint_paths(3, 2, w("100"), w("010")) <= 1);
  CHECK(max_node_disjoint_paths(2, 3, w("01", 3), w("20", 3)) == 2);
  CHECK(max_node_disjoint_paths(3, 3, w("012", 3), w("120", 3)) == 3);

  CHECK_THROWS_AS(max_node_disjoint_paths(3, 2, w("010"), w("010")), InvalidArgument);
  CHECK_THROWS_AS(max_node_disjoint_paths(3, 2, w("000"), w("010")), InvalidArgument);
}

TEST_CASE("path counts never exceed k", "[structure][property]") {
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    Code nodes = checked_pow(k, n);
    for (Code u = 0; u < nodes; ++u)
      for (Code v = 0; v < nodes; ++v) {
        if (u == v || classify_node(n, k, u).is_loop || classify_node(n, k, v).is_loop) continue;
        int count = max_node_disjoint_paths(n, k, Word{u, n, k}, Word{v, n, k});
        REQUIRE(count >= 1);
        REQUIRE(count <= k);
      }
  }
}

TEST_CASE("max flow matches exhaustive path packing", "[structure][oracle]") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    Code nodes = checked_pow(k, n);
    for (Code u = 0; u < nodes; ++u)
      for (Code v = 0; v < nodes; ++v) {
        if (u == v || classify_node(n, k, u).is_loop || classify_node(n, k, v).is_loop) continue;
        INFO("n=" << n << " k=" << k << " u=" << u << " v=" << v);
        REQUIRE(max_node_disjoint_paths(n, k, Word{u, n, k}, Word{v, n, k}) ==
                oracle::disjoint_path_packing(n, k, u, v));
      }
  }
}

TEST_CASE("path theorem reports", "[structure]") {
  struct Row { int n, k; std::size_t cases, exceptions; };
  for (auto row : {Row{3, 2, 30, 16}, Row{4, 2, 182, 48}, Row{2, 3, 30, 30}, Row{3, 3, 552, 240},
                   Row{2, 4, 132, 132}}) {
    auto r = verify_menger_theorem(row.n, row.k);
    INFO("n=" << row.n << " k=" << row.k);
    CHECK(r.confirmed());
    CHECK(r.cases_checked == row.cases);
    CHECK(r.exceptions == row.exceptions);
  }
}
