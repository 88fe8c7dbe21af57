#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/graph.hpp"
#include "ucycle/number.hpp"
#include "ucycle/universal.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

inline constexpr std::uint64_t kDefaultWorkCap = 200'000'000;

// UCYCLE_WORKERS if set to a positive integer, else the hardware thread count.
inline unsigned default_worker_count() {
  if (const char* env = std::getenv("UCYCLE_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct EnumerateOptions {
  unsigned workers = 0;        // 0: default_worker_count()
  std::uint64_t chunks = 0;    // 0: 8 per worker
  std::uint64_t work_cap = kDefaultWorkCap;
};

struct ExactResult {
  Params params;
  UKind kind = UKind::word;
  BigCount favorable;
  BigCount total;
  ExactRational probability;
};

namespace detail {

struct ScanSetup {
  Code universe;
  std::uint64_t total;
};

inline ScanSetup scan_setup(int n, int k, int s, std::uint64_t work_cap) {
  Params{n, k, s}.validate();
  Code universe = checked_pow(k, n);
  if (universe > kEnumerationCap)
    throw WorkCapExceeded("k^n = " + std::to_string(universe) + " exceeds the enumeration cap 2^20");
  BigCount total = binomial(static_cast<std::int64_t>(universe), s);
  if (total > work_cap)
    throw WorkCapExceeded("C(" + std::to_string(universe) + ", " + std::to_string(s) + ") = " + total.str() +
                          " subsets exceeds the work cap of " + std::to_string(work_cap) +
                          "; use the closed-form bounds instead");
  return {universe, total.convert_to<std::uint64_t>()};
}

// Walks removal subsets in colex order, rebuilding the survivor graph for each.
class RemovalScanner {
 public:
  RemovalScanner(int n, int k, int s, UKind kind) : n_(n), s_(s), kind_(kind), universe_(checked_pow(k, n)),
                                                    graph_(n - 1, k), subset_(static_cast<std::size_t>(s)),
                                                    removed_(static_cast<std::size_t>(s)) {}

  void seek(std::uint64_t rank) { subset_ = unrank_subset(rank, static_cast<std::int64_t>(universe_), s_); }
  bool advance() { return next_subset_colex(subset_, static_cast<std::int64_t>(universe_)); }

  std::span<const Code> removed() {
    for (std::size_t i = 0; i < subset_.size(); ++i) removed_[i] = static_cast<Code>(subset_[i]);
    return removed_;
  }

  bool current_is_favorable() {
    Code survivors = universe_ - static_cast<Code>(s_);
    if (kind_ == UKind::cycle && survivors < static_cast<Code>(n_)) return false;
    if (survivors == 0) return false;
    graph_.rebuild_from_removal(removed());
    return kind_ == UKind::cycle ? has_eulerian_circuit(graph_) : has_eulerian_trail(graph_);
  }

 private:
  int n_;
  int s_;
  UKind kind_;
  Code universe_;
  DbSubgraph graph_;
  std::vector<std::int64_t> subset_;
  std::vector<Code> removed_;
};

inline std::uint64_t count_range(int n, int k, int s, UKind kind, std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) return 0;
  RemovalScanner scan(n, k, s, kind);
  scan.seek(lo);
  std::uint64_t favorable = 0;
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (scan.current_is_favorable()) ++favorable;
    if (r + 1 < hi) scan.advance();
  }
  return favorable;
}

}  // namespace detail

// Favorable removal subsets among colex ranks [rank_lo, rank_hi).
inline BigCount count_favorable_chunk(int n, int k, int s, UKind kind, const BigCount& rank_lo,
                                      const BigCount& rank_hi) {
  Params{n, k, s}.validate();
  Code universe = checked_pow(k, n);
  if (universe > kEnumerationCap) throw WorkCapExceeded("k^n exceeds the enumeration cap 2^20");
  BigCount total = binomial(static_cast<std::int64_t>(universe), s);
  if (rank_lo < 0 || rank_lo > rank_hi || rank_hi > total)
    throw InvalidArgument("count_favorable_chunk: need 0 <= rank_lo <= rank_hi <= C(k^n, s) = " + total.str());
  if (rank_hi - rank_lo > std::numeric_limits<std::uint64_t>::max() / 2)
    throw WorkCapExceeded("count_favorable_chunk: range too large");
  return detail::count_range(n, k, s, kind, rank_lo.convert_to<std::uint64_t>(), rank_hi.convert_to<std::uint64_t>());
}

// Serial scan calling `visit` with each favorable removal set (ascending codes).
inline void for_each_favorable(int n, int k, int s, UKind kind, const std::function<void(std::span<const Code>)>& visit,
                               std::uint64_t work_cap = kDefaultWorkCap) {
  auto setup = detail::scan_setup(n, k, s, work_cap);
  detail::RemovalScanner scan(n, k, s, kind);
  scan.seek(0);
  for (std::uint64_t r = 0; r < setup.total; ++r) {
    if (scan.current_is_favorable()) visit(scan.removed());
    if (r + 1 < setup.total) scan.advance();
  }
}

inline ExactResult exact_probability(int n, int k, int s, UKind kind, const EnumerateOptions& options = {}) {
  auto setup = detail::scan_setup(n, k, s, options.work_cap);
  unsigned workers = options.workers ? options.workers : default_worker_count();
  std::uint64_t chunks = options.chunks ? options.chunks : std::uint64_t{8} * workers;
  chunks = std::max<std::uint64_t>(1, std::min(chunks, setup.total));

  auto bound = [&](std::uint64_t i) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(setup.total) * i) / chunks);
  };
  std::vector<std::uint64_t> per_chunk(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) per_chunk[c] = detail::count_range(n, k, s, kind, bound(c), bound(c + 1));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  ExactResult result{Params{n, k, s}, kind, 0, setup.total, {}};
  for (auto c : per_chunk) result.favorable += c;
  result.probability = ExactRational(result.favorable, result.total);
  return result;
}

struct TableCell {
  int s = 0;
  std::optional<ExactResult> result;
  std::string error;  // set when the cell was refused
};

// One cell per s in [s_lo, s_hi]; refused cells keep their error and the rest are still computed.
inline std::vector<TableCell> probability_table(int n, int k, UKind kind, int s_lo, int s_hi,
                                                const EnumerateOptions& options = {}) {
  Params{n, k, 0}.validate();
  std::vector<TableCell> cells;
  for (int s = s_lo; s <= s_hi; ++s) {
    TableCell cell{s, std::nullopt, {}};
    try {
      cell.result = exact_probability(n, k, s, kind, options);
    } catch (const WorkCapExceeded& e) {
      cell.error = e.what();
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace ucycle
