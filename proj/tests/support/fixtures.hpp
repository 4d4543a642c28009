#ifndef PALIMORPH_TESTS_FIXTURES_HPP
#define PALIMORPH_TESTS_FIXTURES_HPP

#include <random>

#include "palimorph/morphism_text.hpp"

namespace fixtures {

using palimorph::Morphism;
using palimorph::Word;
using palimorph::parse_morphism;

inline Morphism thue_morse() { return parse_morphism("0->01;1->10"); }
inline Morphism fibonacci() { return parse_morphism("0->01;1->0"); }
inline Morphism fibonacci_left_shift() { return parse_morphism("0->100;1->10"); }

// One conjugacy class over {a,b}; chain1 is the rightmost end, chain7 the
// leftmost.
inline Morphism chain(int i) {
  switch (i) {
    case 1: return parse_morphism("a->babba;b->bab");
    case 2: return parse_morphism("a->abbab;b->abb");
    case 3: return parse_morphism("a->bbaba;b->bba");
    case 4: return parse_morphism("a->babab;b->bab");
    case 5: return parse_morphism("a->ababb;b->abb");
    case 6: return parse_morphism("a->babba;b->bba");
    case 7: return parse_morphism("a->abbab;b->bab");
    default: throw std::invalid_argument("chain index out of range");
  }
}

inline Morphism binary_periodic() { return parse_morphism("a->aba;b->bab"); }
inline Morphism ternary_periodic() { return parse_morphism("a->abcabcab;b->cabca;c->bc"); }
inline Morphism nonprimitive_padded() { return parse_morphism("0->000;1->10110100"); }

inline Word word(const Morphism& m, std::string_view text) {
  return Word::parse(m.alphabet(), text);
}

/// Deterministic generator for random-morphism property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  Word random_word(const palimorph::AlphabetPtr& alphabet, std::size_t len) {
    std::vector<std::uint8_t> symbols;
    symbols.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      symbols.push_back(static_cast<std::uint8_t>(below(alphabet->size())));
    return Word(alphabet, std::move(symbols));
  }

  Word random_palindrome(const palimorph::AlphabetPtr& alphabet, std::size_t half,
                         bool odd_centre) {
    Word left = random_word(alphabet, half);
    Word centre = odd_centre ? random_word(alphabet, 1) : Word::empty(alphabet);
    return left + centre + palimorph::reversed(left);
  }

  Morphism random_morphism(const palimorph::AlphabetPtr& alphabet, std::size_t min_image,
                           std::size_t max_image) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < alphabet->size(); ++a)
      images.push_back(random_word(alphabet, between(min_image, max_image)));
    return Morphism(alphabet, std::move(images));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fixtures

#endif
