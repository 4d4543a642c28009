#ifndef PALIMORPH_TESTS_PALINDROME_ORACLE_HPP
#define PALIMORPH_TESTS_PALINDROME_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "palimorph/word.hpp"

namespace oracle {

/// Exact distinct-palindrome counts per length, computed without any
/// palindrome-tree machinery: every palindromic occurrence is found by naive
/// centre expansion, and occurrences are deduplicated by content through
/// doubling rank tables (constant-time exact substring equality).
inline std::vector<std::size_t> distinct_palindromes_by_length(const palimorph::Word& text) {
  const auto& s = text.symbols();
  std::size_t n = s.size();
  if (n == 0) return {};

  // rank[k][i]: rank of s[i..i+2^k) among all such windows
  std::vector<std::vector<std::uint32_t>> rank;
  {
    std::vector<std::uint32_t> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = s[i];
    rank.push_back(level);
  }
  for (std::size_t step = 1; step < n; step *= 2) {
    const auto& prev = rank.back();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t i) {
      std::uint64_t hi = prev[i];
      std::uint64_t lo = i + step < n ? prev[i + step] + 1 : 0;
      return (hi << 32) | lo;
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::vector<std::uint32_t> level(n);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i && key(order[i]) != key(order[i - 1])) ++next;
      level[order[i]] = next;
    }
    rank.push_back(std::move(level));
  }

  auto level_for = [&](std::size_t len) {
    std::size_t k = 0;
    while ((std::size_t{2} << k) <= len) ++k;  // largest k with 2^k <= len
    return k;
  };
  auto signature = [&](std::size_t pos, std::size_t len) {
    std::size_t k = level_for(len);
    std::uint64_t a = rank[k][pos];
    std::uint64_t b = rank[k][pos + len - (std::size_t{1} << k)];
    return (static_cast<std::uint64_t>(len) << 42) | (a << 21) | b;
  };

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(4 * n);
  std::vector<std::size_t> counts(n + 1, 0);
  auto record = [&](std::size_t pos, std::size_t len) {
    if (seen.insert(signature(pos, len)).second) ++counts[len];
  };

  for (std::size_t centre = 0; centre < n; ++centre) {
    // odd lengths
    std::size_t r = 0;
    while (centre >= r + 1 && centre + r + 1 < n && s[centre - r - 1] == s[centre + r + 1]) ++r;
    for (std::size_t i = 0; i <= r; ++i) record(centre - i, 2 * i + 1);
    // even lengths between centre and centre+1
    if (centre + 1 < n && s[centre] == s[centre + 1]) {
      r = 0;
      while (centre >= r + 1 && centre + r + 2 < n && s[centre - r - 1] == s[centre + r + 2]) ++r;
      for (std::size_t i = 0; i <= r; ++i) record(centre - i, 2 * i + 2);
    }
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

/// Quadratic reference for short texts: every palindromic substring, by value.
inline std::set<palimorph::Word> distinct_palindromes_naive(const palimorph::Word& text) {
  std::set<palimorph::Word> out;
  for (std::size_t len = 1; len <= text.size(); ++len)
    for (std::size_t pos = 0; pos + len <= text.size(); ++pos) {
      palimorph::Word f = text.subword(pos, len);
      if (palimorph::is_palindrome(f)) out.insert(std::move(f));
    }
  return out;
}

}  // namespace oracle

#endif
