#ifndef PALIMORPH_FACTORS_HPP
#define PALIMORPH_FACTORS_HPP

#include <map>
#include <set>

#include "palimorph/conjugacy.hpp"
#include "palimorph/eertree.hpp"
#include "palimorph/morphism.hpp"

namespace palimorph {

/// Bounded-length factor set of a fixed-point language.  When certified, the
/// set is exactly the language up to max_len; a scraped set (from a finite
/// prefix) can only under-approximate.
struct FactorIndex {
  Morphism source;
  std::uint8_t start_letter = 0;
  std::size_t max_len = 0;
  bool certified = false;
  std::set<Word> factors;  // closed under taking factors; contains the empty word

  bool contains(const Word& f) const { return factors.count(f) != 0; }
};

/// Certified construction for primitive morphisms: close the set of length-2
/// factors under taking images (monotone on a finite lattice, so it stops),
/// then scan the images of those pairs under a power whose shortest letter
/// image reaches max_len.  Non-primitive sources fall back to scraping
/// scrape_len symbols of the fixed point, with certified = false.
FactorIndex build_factor_index(const Morphism& m, std::uint8_t letter, std::size_t max_len,
                               std::size_t scrape_len = 20000);

struct SpecialFactors {
  std::set<Word> left;
  std::set<Word> right;
  std::set<Word> bispecial;
};

/// Classifies factors of length <= up_to_len by their one-letter extensions
/// inside the index.  up_to_len must stay below max_len so extensions are
/// visible.
SpecialFactors special_factors(const FactorIndex& idx, std::size_t up_to_len);

struct PalindromeCensus {
  PalindromeTree tree;
  std::vector<std::size_t> count_by_length;  // distinct palindromes per length

  std::size_t total() const;
  /// Sums over [lo, lo+width), [lo+width, ...), starting at length 1.
  std::vector<std::size_t> band_counts(std::size_t width) const;
};

PalindromeCensus palindrome_census(const Word& text);
PalindromeCensus palindrome_census(const FactorIndex& idx);

struct ReturnWordScan {
  std::set<Word> words;  // factors with the query as prefix and suffix and no
                         // occurrence in between
  bool saturated = false;  // every return word recurred within the scan
};

/// Complete return words of w collected from a finite text.  Needs at least
/// two occurrences.
ReturnWordScan complete_return_words(const Word& text, const Word& w);

/// Extends a factor w to the bispecial factor U·w·V, where w·V is the longest
/// common prefix and U·w the longest common suffix of all complete return
/// words of w.  For palindromic w the result is the palindrome U·w·reversal(U).
/// Rejects periodic sources (decided by the periodicity certificate when the
/// morphism is primitive and marked, by a tail-period heuristic otherwise).
Word bispecial_extension(const Morphism& m, std::uint8_t letter, const Word& w,
                         std::size_t prefix_len = 20000);

/// u -> rightmost(u)·w, the map carrying special factors to special factors
/// of the same kind for primitive marked morphisms.
Word bispecial_step(const ConjugacyExtremes& ext, const Word& u);
Word bispecial_step(const Morphism& m, const Word& u);

struct BispecialOrbit {
  std::set<Word> initial;      // bispecials below the seed bound that are not
                               // the step-image of a shorter bispecial
  std::map<Word, Word> orbit;  // u -> step(u), while the image fits max_len
  Word w;
  std::size_t seed_bound = 0;
  std::size_t max_len = 0;
};

/// Seeds with the bispecial factors the step map cannot produce and iterates
/// the map while results stay within max_len, checking along the way that
/// every produced word is again bispecial in the certified index.  The
/// default seed bound is max(|w|, twice the longest image) + alphabet size.
BispecialOrbit bispecial_orbit(const Morphism& m, std::size_t max_len,
                               std::optional<std::size_t> seed_bound = std::nullopt);

}  // namespace palimorph

#endif
