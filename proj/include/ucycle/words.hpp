#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucycle/error.hpp"
#include "ucycle/number.hpp"

namespace ucycle {

// Radix-k code of a word; x_1 is the most significant letter.
using Code = std::uint64_t;
using Letter = int;

// k^n, throwing if it does not fit a Code.
inline Code checked_pow(int k, int n) {
  if (k < 1 || n < 0) throw InvalidArgument("checked_pow: bad base/exponent");
  Code acc = 1;
  for (int i = 0; i < n; ++i) {
    if (acc > std::numeric_limits<Code>::max() / static_cast<Code>(k))
      throw InvalidArgument("k^n overflows 64 bits (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    acc *= static_cast<Code>(k);
  }
  return acc;
}

// Word length n, alphabet size k and removal count s.
struct Params {
  int n = 2;
  int k = 2;
  int s = 0;

  Code universe() const { return checked_pow(k, n); }

  void validate() const {
    if (n < 2 || k < 2)
      throw InvalidArgument("need n >= 2 and k >= 2 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    if (s < 0 || static_cast<Code>(s) > universe())
      throw InvalidArgument("need 0 <= s <= k^n (got s=" + std::to_string(s) + ")");
  }

  friend bool operator==(const Params&, const Params&) = default;
};

struct Word {
  Code code = 0;
  int n = 0;
  int k = 0;

  friend bool operator==(const Word&, const Word&) = default;
};

inline std::vector<Letter> decode(Code code, int n, int k) {
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<Letter>(code % static_cast<Code>(k));
    code /= static_cast<Code>(k);
  }
  return letters;
}

inline Code encode(std::span<const Letter> letters, int k) {
  Code code = 0;
  for (Letter x : letters) {
    if (x < 0 || x >= k) throw InvalidArgument("letter " + std::to_string(x) + " outside alphabet of size " + std::to_string(k));
    code = code * static_cast<Code>(k) + static_cast<Code>(x);
  }
  return code;
}

// Digits when k <= 10, otherwise comma-separated decimal letters.
inline std::string letters_to_string(std::span<const Letter> letters, int k) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (k <= 10) {
      out.push_back(static_cast<char>('0' + letters[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

inline std::vector<Letter> letters_from_string(std::string_view text, int k) {
  std::vector<Letter> letters;
  auto bad = [&](const std::string& why) {
    return InvalidArgument("cannot parse word '" + std::string(text) + "': " + why);
  };
  if (k <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw bad("non-digit character");
      letters.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (item.empty()) throw bad("empty letter");
      Letter x = 0;
      for (char c : item) {
        if (c < '0' || c > '9') throw bad("non-digit character");
        if (x > 1'000'000) throw bad("letter too large");
        x = x * 10 + (c - '0');
      }
      letters.push_back(x);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  for (Letter x : letters)
    if (x >= k) throw bad("letter " + std::to_string(x) + " >= k=" + std::to_string(k));
  return letters;
}

inline std::string word_to_string(const Word& w) {
  auto letters = decode(w.code, w.n, w.k);
  return letters_to_string(letters, w.k);
}

inline Word word_from_string(std::string_view text, int n, int k) {
  auto letters = letters_from_string(text, k);
  if (static_cast<int>(letters.size()) != n)
    throw InvalidArgument("word '" + std::string(text) + "' has length " + std::to_string(letters.size()) +
                          ", expected " + std::to_string(n));
  return Word{encode(letters, k), n, k};
}

// A set of words of A^n, stored as strictly increasing codes.
class WordSet {
 public:
  WordSet(int n, int k, std::vector<Code> codes) : n_(n), k_(k), members_(std::move(codes)) {
    Code universe = checked_pow(k, n);
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw InvalidArgument("WordSet: duplicate word");
    if (!members_.empty() && members_.back() >= universe) throw InvalidArgument("WordSet: code out of range");
  }

  static WordSet all(int n, int k) {
    std::vector<Code> codes(checked_pow(k, n));
    for (Code c = 0; c < codes.size(); ++c) codes[c] = c;
    return WordSet(n, k, std::move(codes));
  }

  // A^n minus the removed words; duplicates in `removed` are rejected.
  static WordSet complement_of(int n, int k, std::span<const Code> removed) {
    Code universe = checked_pow(k, n);
    std::vector<char> gone(universe, 0);
    for (Code c : removed) {
      if (c >= universe) throw InvalidArgument("WordSet: removed code out of range");
      if (gone[c]) throw InvalidArgument("WordSet: word removed twice");
      gone[c] = 1;
    }
    std::vector<Code> codes;
    codes.reserve(universe - removed.size());
    for (Code c = 0; c < universe; ++c)
      if (!gone[c]) codes.push_back(c);
    return WordSet(n, k, std::move(codes));
  }

  static WordSet from_strings(int n, int k, std::span<const std::string> words) {
    std::vector<Code> codes;
    codes.reserve(words.size());
    for (const auto& w : words) codes.push_back(word_from_string(w, n, k).code);
    return WordSet(n, k, std::move(codes));
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Code> members() const { return members_; }
  bool contains(Code c) const { return std::binary_search(members_.begin(), members_.end(), c); }

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  int n_;
  int k_;
  std::vector<Code> members_;
};

// ---------------------------------------------------------------------------
// Subsets in colexicographic order: {c_0 < ... < c_{s-1}} has rank sum C(c_i, i+1).

inline BigCount rank_subset(std::span<const std::int64_t> subset) {
  BigCount rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || (i > 0 && subset[i] <= subset[i - 1]))
      throw InvalidArgument("rank_subset: subset must be strictly increasing and nonnegative");
    rank += binomial(subset[i], static_cast<std::int64_t>(i) + 1);
  }
  return rank;
}

inline std::vector<std::int64_t> unrank_subset(const BigCount& rank, std::int64_t universe_size, int s) {
  if (s < 0 || universe_size < 0) throw InvalidArgument("unrank_subset: negative size");
  if (rank < 0 || rank >= binomial(universe_size, s))
    throw InvalidArgument("unrank_subset: rank " + rank.str() + " out of range for C(" + std::to_string(universe_size) +
                          ", " + std::to_string(s) + ")");
  std::vector<std::int64_t> out(static_cast<std::size_t>(s));
  BigCount rest = rank;
  std::int64_t c = universe_size - 1;
  for (int i = s; i >= 1; --i) {
    // largest c with C(c, i) <= rest; c is nonincreasing across iterations
    while (binomial(c, i) > rest) --c;
    out[static_cast<std::size_t>(i - 1)] = c;
    rest -= binomial(c, i);
    --c;
  }
  return out;
}

// Advances to the colex successor in place; false after the last subset.
inline bool next_subset_colex(std::span<std::int64_t> subset, std::int64_t universe_size) {
  const std::size_t s = subset.size();
  for (std::size_t i = 0; i < s; ++i) {
    std::int64_t limit = (i + 1 < s) ? subset[i + 1] : universe_size;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<std::int64_t>(j);
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Weighted compositions: vectors (s_i) with sum weight_i * s_i = s, 0 <= s_i <= max_i.

struct Part {
  static constexpr int unbounded = std::numeric_limits<int>::max();
  int weight = 1;
  int max_multiplicity = unbounded;
};

// Visits every solution once; earlier coordinates are tried from largest to smallest.
inline void for_each_composition(int s, std::span<const Part> parts,
                                 const std::function<void(std::span<const int>)>& visit) {
  if (parts.empty()) throw InvalidArgument("compositions: no parts");
  for (const auto& p : parts)
    if (p.weight <= 0 || p.max_multiplicity < 0) throw InvalidArgument("compositions: weights must be positive");
  if (s < 0) return;
  std::vector<int> current(parts.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rest) {
    if (idx == parts.size()) {
      if (rest == 0) visit(current);
      return;
    }
    int hi = std::min(rest / parts[idx].weight, parts[idx].max_multiplicity);
    for (int m = hi; m >= 0; --m) {
      current[idx] = m;
      rec(idx + 1, rest - m * parts[idx].weight);
    }
    current[idx] = 0;
  };
  rec(0, s);
}

inline std::vector<std::vector<int>> compositions(int s, std::span<const Part> parts) {
  std::vector<std::vector<int>> out;
  for_each_composition(s, parts, [&](std::span<const int> v) { out.emplace_back(v.begin(), v.end()); });
  return out;
}

}  // namespace ucycle
