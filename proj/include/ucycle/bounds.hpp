#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/number.hpp"
#include "ucycle/universal.hpp"
#include "ucycle/words.hpp"

namespace ucycle {

// ---------------------------------------------------------------------------
// Counting functions

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw NotApplicable(what);
}

inline void require_lower_bound_range(int n, int k, int s) {
  require(s >= 1 && BigCount(s) < power(k, n), "lower bounds need 1 <= s < k^n");
}

// Binary i-cycles of B(n-1, k) for k >= 3: k loops, and (i-1)C(k,2) cycles of length i >= 2.
inline std::vector<Part> general_cycle_parts(int n, int k, int s) {
  std::vector<Part> parts;
  for (int i = 1; i <= n - 2; ++i) {
    BigCount available = i == 1 ? BigCount(k) : BigCount(i - 1) * binomial(k, 2);
    int cap = available > s ? s : available.convert_to<int>();
    parts.push_back({i, std::max(cap, 0)});
  }
  return parts;
}

inline BigCount general_term(int k, std::span<const int> mult) {
  BigCount term = binomial(k, mult[0]);
  for (std::size_t idx = 1; idx < mult.size(); ++idx) {
    std::int64_t i = static_cast<std::int64_t>(idx) + 1;
    BigCount avail = BigCount(i - 1) * binomial(k, 2);
    term *= binomial(avail.convert_to<std::int64_t>(), mult[idx]);
  }
  return term;
}

// Loops (2, weight 1), the alternating 2-cycle (1, weight 2), and the two (n-1)-cycles.
inline std::vector<Part> binary_cycle_parts(int n) { return {{1, 2}, {2, 1}, {n - 1, 2}}; }

inline BigCount binary_term(std::span<const int> mult) {
  return binomial(2, mult[0]) * binomial(1, mult[1]) * binomial(2, mult[2]);
}

}  // namespace detail

// S(k, s): removals made of whole binary i-cycles, 1 <= i <= n-2, of B(n-1, k).
inline BigCount s_count(int n, int k, int s) {
  detail::require(n >= 3 && k >= 3, "S(k,s) needs n >= 3 and k >= 3");
  BigCount total = 0;
  if (s < 0) return total;
  auto parts = detail::general_cycle_parts(n, k, s);
  for_each_composition(s, parts, [&](std::span<const int> m) { total += detail::general_term(k, m); });
  return total;
}

inline ExactRational pc_lower_general(int n, int k, int s) {
  detail::require(n >= 3 && k >= 3, "general bound needs n >= 3 and k >= 3");
  detail::require_lower_bound_range(n, k, s);
  return {s_count(n, k, s), binomial(power(k, n).convert_to<std::int64_t>(), s)};
}

// Sum over compositions of s-1 of alpha * C(k, s_1) * prod C((i-1)C(k,2), s_i),
// alpha = k^n - s + s_1 - k + 1.
inline BigCount general_alpha_sum(int n, int k, int s) {
  BigCount sum = 0;
  if (s - 1 < 0) return sum;
  BigCount kn = power(k, n);
  auto parts = detail::general_cycle_parts(n, k, s - 1);
  for_each_composition(s - 1, parts, [&](std::span<const int> m) {
    BigCount alpha = kn - s + m[0] - k + 1;
    sum += alpha * detail::general_term(k, m);
  });
  return sum;
}

inline ExactRational pw_lower_general(int n, int k, int s) {
  detail::require(n >= 3 && k >= 3, "general bound needs n >= 3 and k >= 3");
  detail::require_lower_bound_range(n, k, s);
  return {s_count(n, k, s) + general_alpha_sum(n, k, s), binomial(power(k, n).convert_to<std::int64_t>(), s)};
}

// Linear binary strings of length k with i ones, no two adjacent.
inline BigCount h_count(int k, int i) { return binomial(k - i + 1, i); }

// Circular binary strings with i ones and k - i zeros, no two ones adjacent.
inline BigCount circular_count(int k, int i) {
  if (k < 2 || i < 0) throw InvalidArgument("circular_count needs k >= 2 and i >= 0");
  return binomial(k - i - 1, i - 1) + binomial(k - i, i);
}

inline BigCount f_count(int k, int s) {
  detail::require(k >= 3, "f(k,s) needs k >= 3");
  std::int64_t pairs = static_cast<std::int64_t>(k) * (k - 3) / 2;  // non-special 2-cycles
  BigCount total = 0;
  for (std::int64_t i = 0; i <= pairs; ++i) {
    if (s - 2 * i < 0) break;
    total += binomial(pairs, i) * binomial(k, s - 2 * i);
  }
  return total;
}

// The i >= 3 sum stops at i = k: circular_count is zero past k/2.
inline BigCount g_count(int k, int s) {
  detail::require(k >= 3, "g(k,s) needs k >= 3");
  BigCount total = 0;
  for (int i = 3; i <= k; ++i) total += factorial(i - 1) * circular_count(k, i) * binomial(k, s - i);
  return total;
}

inline BigCount u_count(int k, int s) {
  return f_count(k, s) + 2 * f_count(k, s - k) + g_count(k, s) + 2 * g_count(k, s - k);
}

inline BigCount v_count(int k, int s) {
  detail::require(k >= 3, "V(k,s) needs k >= 3");
  return BigCount(k) * (k - 3) * (binomial(k, s - 1) + 2 * binomial(k, s - k - 1));
}

// 2k * sum_{j=1}^{k-1} (f(k, s-j) + g(k, s-j))
inline BigCount special_path_sum(int k, int s) {
  BigCount total = 0;
  for (int j = 1; j <= k - 1; ++j) total += f_count(k, s - j) + g_count(k, s - j);
  return 2 * BigCount(k) * total;
}

inline ExactRational pc_lower_n2(int k, int s) {
  detail::require(k >= 3, "n = 2 bound needs k >= 3");
  detail::require_lower_bound_range(2, k, s);
  return {u_count(k, s), binomial(static_cast<std::int64_t>(k) * k, s)};
}

inline ExactRational pw_lower_n2(int k, int s) {
  detail::require(k >= 3, "n = 2 bound needs k >= 3");
  detail::require_lower_bound_range(2, k, s);
  return {u_count(k, s) + v_count(k, s) + special_path_sum(k, s), binomial(static_cast<std::int64_t>(k) * k, s)};
}

// T(n, s) for k = 2. The (n-1)-cycle factor is C(2, s_{n-1}): there are two such cycles.
inline BigCount t_count(int n, int s) {
  detail::require(n >= 5, "T(n,s) needs n >= 5");
  BigCount total = 0;
  if (s < 0) return total;
  auto parts = detail::binary_cycle_parts(n);
  for_each_composition(s, parts, [&](std::span<const int> m) { total += detail::binary_term(m); });
  return total;
}

inline BigCount binary_alpha_sum(int n, int s) {
  BigCount sum = 0;
  if (s - 1 < 0) return sum;
  BigCount two_n = power(2, n);
  auto parts = detail::binary_cycle_parts(n);
  for_each_composition(s - 1, parts, [&](std::span<const int> m) {
    sum += (two_n - s + m[0] - 1) * detail::binary_term(m);
  });
  return sum;
}

inline ExactRational pc_lower_k2(int n, int s) {
  detail::require(n >= 5, "k = 2 bound needs n >= 5");
  detail::require_lower_bound_range(n, 2, s);
  return {t_count(n, s), binomial(power(2, n).convert_to<std::int64_t>(), s)};
}

inline ExactRational pw_lower_k2(int n, int s) {
  detail::require(n >= 5, "k = 2 bound needs n >= 5");
  detail::require_lower_bound_range(n, 2, s);
  return {t_count(n, s) + binary_alpha_sum(n, s), binomial(power(2, n).convert_to<std::int64_t>(), s)};
}

// ---------------------------------------------------------------------------
// Exact values for s = 1 and s = 2

namespace detail {
inline void require_params(int n, int k) {
  if (n < 2 || k < 2) throw InvalidArgument("need n >= 2 and k >= 2");
}
}  // namespace detail

inline ExactRational pc_exact_s1(int n, int k) {
  detail::require_params(n, k);
  return {1, power(k, n - 1)};
}

inline ExactRational pw_exact_s1(int n, int k) {
  detail::require_params(n, k);
  return 1;
}

// Two loops or one 2-cycle; B(2,2) is special because removing its 2-cycle strands the loops.
inline ExactRational pc_exact_s2(int n, int k) {
  detail::require_params(n, k);
  if (n == 2 && k == 2) return {1, 6};
  BigCount kn = power(k, n);
  return {BigCount(k) * (k - 1), kn * (kn - 1) / 2};
}

inline ExactRational pw_exact_s2(int n, int k) {
  detail::require_params(n, k);
  if (n == 2 && k == 2) return {5, 6};
  if (k == 2) {
    BigCount two_n = power(2, n);
    return {two_n - 3, (two_n - 1) * power(2, n - 3)};
  }
  BigCount kn = power(k, n);
  return {2 * (2 * kn - 3 * k + 1), power(k, n - 1) * (kn - 1)};
}

// ---------------------------------------------------------------------------
// Report

enum class FormulaId {
  pc_lower_general,
  pw_lower_general,
  pc_lower_n2,
  pw_lower_n2,
  pc_lower_k2,
  pw_lower_k2,
  pc_exact_s1,
  pw_exact_s1,
  pc_exact_s2,
  pw_exact_s2,
};

inline constexpr FormulaId kAllFormulas[] = {
    FormulaId::pc_lower_general, FormulaId::pw_lower_general, FormulaId::pc_lower_n2, FormulaId::pw_lower_n2,
    FormulaId::pc_lower_k2,      FormulaId::pw_lower_k2,      FormulaId::pc_exact_s1, FormulaId::pw_exact_s1,
    FormulaId::pc_exact_s2,      FormulaId::pw_exact_s2,
};

inline std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::pc_lower_general: return "pc_lower_general";
    case FormulaId::pw_lower_general: return "pw_lower_general";
    case FormulaId::pc_lower_n2: return "pc_lower_n2";
    case FormulaId::pw_lower_n2: return "pw_lower_n2";
    case FormulaId::pc_lower_k2: return "pc_lower_k2";
    case FormulaId::pw_lower_k2: return "pw_lower_k2";
    case FormulaId::pc_exact_s1: return "pc_exact_s1";
    case FormulaId::pw_exact_s1: return "pw_exact_s1";
    case FormulaId::pc_exact_s2: return "pc_exact_s2";
    case FormulaId::pw_exact_s2: return "pw_exact_s2";
  }
  return "?";
}

inline UKind kind_of(FormulaId id) {
  switch (id) {
    case FormulaId::pc_lower_general:
    case FormulaId::pc_lower_n2:
    case FormulaId::pc_lower_k2:
    case FormulaId::pc_exact_s1:
    case FormulaId::pc_exact_s2: return UKind::cycle;
    default: return UKind::word;
  }
}

inline bool is_exact(FormulaId id) {
  return id == FormulaId::pc_exact_s1 || id == FormulaId::pw_exact_s1 || id == FormulaId::pc_exact_s2 ||
         id == FormulaId::pw_exact_s2;
}

struct BoundEntry {
  FormulaId id;
  bool applicable = false;
  ExactRational value;
  std::map<std::string, BigCount> counts;
};

struct BoundReport {
  Params params;
  std::vector<BoundEntry> entries;

  const BoundEntry& entry(FormulaId id) const {
    for (const auto& e : entries)
      if (e.id == id) return e;
    throw InvalidArgument("BoundReport: missing entry");
  }
};

inline bool formula_applies(FormulaId id, int n, int k, int s) {
  const bool s_range = s >= 1 && BigCount(s) < power(k, n);
  switch (id) {
    case FormulaId::pc_lower_general:
    case FormulaId::pw_lower_general: return n >= 3 && k >= 3 && s_range;
    case FormulaId::pc_lower_n2:
    case FormulaId::pw_lower_n2: return n == 2 && k >= 3 && s_range;
    case FormulaId::pc_lower_k2:
    case FormulaId::pw_lower_k2: return k == 2 && n >= 5 && s_range;
    case FormulaId::pc_exact_s1:
    case FormulaId::pw_exact_s1: return s == 1;
    case FormulaId::pc_exact_s2:
    case FormulaId::pw_exact_s2: return s == 2;
  }
  return false;
}

inline BoundReport bounds_report(int n, int k, int s) {
  Params params{n, k, s};
  params.validate();
  BoundReport report{params, {}};
  for (FormulaId id : kAllFormulas) {
    BoundEntry entry{id, formula_applies(id, n, k, s), ExactRational{}, {}};
    if (entry.applicable) {
      BigCount total = binomial(power(k, n).convert_to<std::int64_t>(), s);
      switch (id) {
        case FormulaId::pc_lower_general:
          entry.value = pc_lower_general(n, k, s);
          entry.counts = {{"S", s_count(n, k, s)}, {"total", total}};
          break;
        case FormulaId::pw_lower_general:
          entry.value = pw_lower_general(n, k, s);
          entry.counts = {{"alpha_sum", general_alpha_sum(n, k, s)}, {"total", total}};
          break;
        case FormulaId::pc_lower_n2:
          entry.value = pc_lower_n2(k, s);
          entry.counts = {{"U", u_count(k, s)}, {"f", f_count(k, s)}, {"g", g_count(k, s)}, {"total", total}};
          break;
        case FormulaId::pw_lower_n2:
          entry.value = pw_lower_n2(k, s);
          entry.counts = {{"V", v_count(k, s)}, {"path_sum", special_path_sum(k, s)}, {"total", total}};
          break;
        case FormulaId::pc_lower_k2:
          entry.value = pc_lower_k2(n, s);
          entry.counts = {{"T", t_count(n, s)}, {"total", total}};
          break;
        case FormulaId::pw_lower_k2:
          entry.value = pw_lower_k2(n, s);
          entry.counts = {{"alpha_sum", binary_alpha_sum(n, s)}, {"total", total}};
          break;
        case FormulaId::pc_exact_s1: entry.value = pc_exact_s1(n, k); break;
        case FormulaId::pw_exact_s1: entry.value = pw_exact_s1(n, k); break;
        case FormulaId::pc_exact_s2: entry.value = pc_exact_s2(n, k); break;
        case FormulaId::pw_exact_s2: entry.value = pw_exact_s2(n, k); break;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// Applicable closed-form lower bound for the kind, if any.
inline std::optional<ExactRational> formula_lower_bound(int n, int k, int s, UKind kind) {
  for (FormulaId id : kAllFormulas)
    if (!is_exact(id) && kind_of(id) == kind && formula_applies(id, n, k, s))
      return bounds_report(n, k, s).entry(id).value;
  return std::nullopt;
}

// Exact value when an s = 1 / s = 2 result applies, else the formula bound, else nothing.
inline std::optional<ExactRational> best_lower_bound(int n, int k, int s, UKind kind) {
  Params{n, k, s}.validate();
  if (s == 1) return kind == UKind::cycle ? pc_exact_s1(n, k) : pw_exact_s1(n, k);
  if (s == 2) return kind == UKind::cycle ? pc_exact_s2(n, k) : pw_exact_s2(n, k);
  return formula_lower_bound(n, k, s, kind);
}

// ---------------------------------------------------------------------------
// Witness removal families

enum class FamilyKind { general, k2 };

// A cycle of B(n-1, k) given by the length-n windows of a periodic pattern.
struct BinaryCycle {
  std::vector<Letter> pattern;
  std::vector<Code> edges;
};

struct RemovalFamily {
  std::vector<int> multiplicities;  // s_i per cycle group
  std::vector<std::string> cycles;  // patterns of the removed cycles
  WordSet removal;
};

namespace detail {

inline BinaryCycle cycle_from_pattern(int n, int k, std::vector<Letter> pattern) {
  BinaryCycle cyc{std::move(pattern), {}};
  const std::size_t period = cyc.pattern.size();
  for (std::size_t t = 0; t < period; ++t) {
    Code code = 0;
    for (int j = 0; j < n; ++j)
      code = code * static_cast<Code>(k) + static_cast<Code>(cyc.pattern[(t + static_cast<std::size_t>(j)) % period]);
    cyc.edges.push_back(code);
  }
  return cyc;
}

// Groups of removable cycles, one group per cycle length, plus the matching parts.
inline std::vector<std::vector<BinaryCycle>> family_groups(int n, int k, FamilyKind kind) {
  std::vector<std::vector<BinaryCycle>> groups;
  if (kind == FamilyKind::general) {
    require(n >= 3 && k >= 3, "general families need n >= 3 and k >= 3");
    for (int i = 1; i <= n - 2; ++i) {
      std::vector<BinaryCycle> group;
      if (i == 1) {
        for (Letter x = 0; x < k; ++x) group.push_back(cycle_from_pattern(n, k, {x}));
      } else {
        for (Letter x = 0; x < k; ++x)
          for (Letter y = x + 1; y < k; ++y)
            for (int m = 1; m <= i - 1; ++m) {
              std::vector<Letter> pattern(static_cast<std::size_t>(m), x);
              pattern.insert(pattern.end(), static_cast<std::size_t>(i - m), y);
              group.push_back(cycle_from_pattern(n, k, std::move(pattern)));
            }
      }
      groups.push_back(std::move(group));
    }
  } else {
    require(k == 2 && n >= 5, "k2 families need k = 2 and n >= 5");
    groups.push_back({cycle_from_pattern(n, 2, {0}), cycle_from_pattern(n, 2, {1})});
    groups.push_back({cycle_from_pattern(n, 2, {0, 1})});
    std::vector<Letter> a(static_cast<std::size_t>(n - 2), 0);
    a.push_back(1);
    std::vector<Letter> b(static_cast<std::size_t>(n - 2), 1);
    b.push_back(0);
    groups.push_back({cycle_from_pattern(n, 2, a), cycle_from_pattern(n, 2, b)});
  }
  return groups;
}

}  // namespace detail

// Every removal of s words made of whole cycles from the family's groups.
// The number visited equals s_count (general) or t_count (k2).
inline void for_each_removal_family(int n, int k, int s, FamilyKind kind,
                                    const std::function<void(const RemovalFamily&)>& visit) {
  auto groups = detail::family_groups(n, k, kind);
  if (s < 0) return;
  std::vector<Part> parts;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    int weight = static_cast<int>(groups[g].front().edges.size());
    parts.push_back({weight, static_cast<int>(groups[g].size())});
  }
  for_each_composition(s, parts, [&](std::span<const int> mult) {
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t, int)> pick = [&](std::size_t g, std::size_t from, int left) {
      if (left == 0) {
        if (g + 1 < groups.size()) {
          pick(g + 1, 0, mult[g + 1]);
          return;
        }
        RemovalFamily fam{{mult.begin(), mult.end()}, {}, WordSet(n, k, {})};
        std::vector<Code> removed;
        std::size_t offset = 0;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
          for (int c = 0; c < mult[gi]; ++c) {
            const auto& cyc = groups[gi][chosen[offset++]];
            fam.cycles.push_back(letters_to_string(cyc.pattern, k));
            removed.insert(removed.end(), cyc.edges.begin(), cyc.edges.end());
          }
        }
        fam.removal = WordSet(n, k, std::move(removed));  // throws if two cycles shared an edge
        visit(fam);
        return;
      }
      for (std::size_t c = from; c < groups[g].size(); ++c) {
        chosen.push_back(c);
        pick(g, c + 1, left - 1);
        chosen.pop_back();
      }
    };
    pick(0, 0, mult[0]);
  });
}

inline std::vector<RemovalFamily> enumerate_removal_families(int n, int k, int s, FamilyKind kind) {
  std::vector<RemovalFamily> out;
  for_each_removal_family(n, k, s, kind, [&](const RemovalFamily& f) { out.push_back(f); });
  return out;
}

}  // namespace ucycle
