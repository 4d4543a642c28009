#include "palimorph/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace palimorph {

namespace {

void require_same(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw std::invalid_argument("words are over different alphabets");
}

}  // namespace

Word::Word(AlphabetPtr alphabet, std::vector<std::uint8_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
  for (std::uint8_t s : symbols_)
    if (s >= alphabet_->size())
      throw std::invalid_argument("word symbol outside its alphabet");
}

Word Word::parse(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    auto i = alphabet->index_of(c);
    if (!i) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    symbols.push_back(*i);
  }
  return Word(alphabet, std::move(symbols));
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (std::uint8_t s : symbols_) out.push_back(alphabet_->letter(s));
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos)
    throw std::out_of_range("subword range outside word");
  return Word(alphabet_, std::vector<std::uint8_t>(symbols_.begin() + pos,
                                                   symbols_.begin() + pos + len));
}

bool Word::starts_with(const Word& p) const {
  require_same(*this, p);
  return p.size() <= size() && std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

bool Word::ends_with(const Word& s) const {
  require_same(*this, s);
  return s.size() <= size() &&
         std::equal(s.symbols_.rbegin(), s.symbols_.rend(), symbols_.rbegin());
}

bool operator==(const Word& a, const Word& b) {
  require_same(a, b);
  return a.symbols_ == b.symbols_;
}

bool operator<(const Word& a, const Word& b) {
  require_same(a, b);
  return a.symbols_ < b.symbols_;
}

Word operator+(const Word& a, const Word& b) {
  require_same(a, b);
  std::vector<std::uint8_t> symbols;
  symbols.reserve(a.size() + b.size());
  symbols.insert(symbols.end(), a.symbols_.begin(), a.symbols_.end());
  symbols.insert(symbols.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(a.alphabet_, std::move(symbols));
}

Word reversed(const Word& w) {
  std::vector<std::uint8_t> symbols(w.symbols().rbegin(), w.symbols().rend());
  return Word(w.alphabet(), std::move(symbols));
}

bool is_palindrome(const Word& w) {
  const auto& s = w.symbols();
  for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
    if (s[i] != s[j - 1]) return false;
  return true;
}

Word kth_right_conjugate(const Word& y, std::uint64_t k) {
  if (y.empty()) throw std::invalid_argument("cannot rotate the empty word");
  std::size_t r = static_cast<std::size_t>(k % y.size());
  if (r == 0) return y;
  return y.suffix(r) + y.prefix(y.size() - r);
}

Word repeat(const Word& u, std::size_t k) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(u.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    symbols.insert(symbols.end(), u.symbols().begin(), u.symbols().end());
  return Word(u.alphabet(), std::move(symbols));
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no primitive root");
  std::size_t n = w.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i)
      if (w[i] != w[i - len]) ok = false;
    if (ok) return {w.prefix(len), static_cast<std::uint32_t>(n / len)};
  }
  return {w, 1};  // unreachable: len == n always matches
}

OverlapParts overlap_decomposition(const Word& x, const Word& w, const Word& y) {
  if (x.empty()) throw std::invalid_argument("overlap equation needs nonempty x");
  if (x + w != w + y) throw std::invalid_argument("overlap equation xw = wy does not hold");
  std::uint64_t quotient = w.size() / x.size();
  std::size_t rest = w.size() % x.size();
  // w = x^quotient · u, so u is both the length-rest prefix and suffix of w.
  Word u = w.prefix(rest);
  Word v = x.subword(rest, x.size() - rest);
  return {std::move(u), std::move(v), quotient};
}

OverlapPalindromeReport overlap_palindrome_report(const Word& x, const Word& w,
                                                  const Word& y) {
  OverlapParts parts = overlap_decomposition(x, w, y);
  OverlapPalindromeReport report;
  report.ends_mirrored = (x == reversed(y));
  report.parts_palindromic = is_palindrome(parts.u) && is_palindrome(parts.v);
  report.left_product_palindromic = is_palindrome(x + w);
  report.full_product_palindromic = is_palindrome(x + w + y);
  report.overlap_palindromic = is_palindrome(w);
  return report;
}

}  // namespace palimorph
