#ifndef PALIMORPH_WORD_HPP
#define PALIMORPH_WORD_HPP

#include <cstdint>
#include <vector>

#include "palimorph/alphabet.hpp"

namespace palimorph {

/// A finite word over a fixed alphabet.  Symbols are stored as indices into
/// the alphabet, never as raw characters.  Words are immutable values; all
/// operations on them are pure.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<std::uint8_t> symbols);

  /// Parses a run of letters, e.g. Word::parse(ab, "abba").
  static Word parse(const AlphabetPtr& alphabet, std::string_view text);
  static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  /// The word rendered back as letters.
  std::string str() const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  /// Comparison is by symbol sequence; mismatched alphabets are rejected.
  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b);

  friend Word operator+(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<std::uint8_t> symbols_;
};

Word reversed(const Word& w);
bool is_palindrome(const Word& w);

/// Rotation moving the last (k mod |y|) symbols of y to the front; the unique
/// word x with x·s = s·y for the suffix s of y of that length.  Rejects the
/// empty word.
Word kth_right_conjugate(const Word& y, std::uint64_t k);

struct PrimitiveRoot {
  Word root;
  std::uint32_t exponent;
};

/// Shortest u and largest k with u^k = w; rejects the empty word.
PrimitiveRoot primitive_root(const Word& w);

Word repeat(const Word& u, std::size_t k);

struct OverlapParts {
  Word u;
  Word v;
  std::uint64_t repeat;  // x = uv, w = (uv)^repeat · u, y = vu
};

/// Unique decomposition of an overlap equation xw = wy with x nonempty.
/// Rejects inputs that do not satisfy the equation.
OverlapParts overlap_decomposition(const Word& x, const Word& w, const Word& y);

struct OverlapPalindromeReport {
  bool ends_mirrored;              // x equals the reversal of y
  bool parts_palindromic;          // u and v are both palindromes
  bool left_product_palindromic;   // xw is a palindrome
  bool full_product_palindromic;   // xwy is a palindrome
  bool overlap_palindromic;        // w is a palindrome
};

/// Evaluates the five palindromicity conditions of an overlap equation
/// directly.  The first four agree on every valid input and imply the fifth;
/// all five agree once |w| >= |x|.
OverlapPalindromeReport overlap_palindrome_report(const Word& x, const Word& w,
                                                  const Word& y);

}  // namespace palimorph

#endif
