#ifndef PALIMORPH_MORPHISM_HPP
#define PALIMORPH_MORPHISM_HPP

#include <optional>
#include <vector>

#include "palimorph/word.hpp"

namespace palimorph {

/// A substitution on the free monoid over one alphabet, determined by the
/// image of each letter.  Immutable.
class Morphism {
 public:
  Morphism(AlphabetPtr alphabet, std::vector<Word> images);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_->size(); }
  const Word& image(std::uint8_t letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const { return images_; }

  /// Applies the morphism: the concatenation of the images of the symbols.
  Word operator()(const Word& w) const;

  /// `letter->image;letter->image` in alphabet order.
  std::string format() const;

  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
  friend bool operator<(const Morphism& a, const Morphism& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
};

/// outer ∘ inner; both must share one alphabet.
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism power(const Morphism& m, unsigned k);

/// Image-wise reversal; an involution.
Morphism reversed(const Morphism& m);

struct IncidenceMatrix {
  std::size_t dim = 0;
  std::vector<std::uint64_t> cells;  // row-major; at(row, col)

  std::uint64_t at(std::size_t row, std::size_t col) const { return cells[row * dim + col]; }
  std::uint64_t& at(std::size_t row, std::size_t col) { return cells[row * dim + col]; }
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/// Entry (a, b) counts occurrences of letter a in the image of b, so column
/// sums are image lengths.  Conjugate morphisms share this matrix.
IncidenceMatrix incidence_matrix(const Morphism& m);
IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);

bool is_erasing(const Morphism& m);

/// The common primitive root when every image is a power of one word;
/// nullopt for acyclic morphisms.  A morphism whose images are all empty is
/// cyclic with the empty root.
std::optional<Word> cyclic_root(const Morphism& m);
inline bool is_cyclic(const Morphism& m) { return cyclic_root(m).has_value(); }

/// Primitivity decided by boolean reachability at the Wielandt exponent
/// (d-1)^2 + 1, so no integer powers are ever formed.
bool is_primitive(const Morphism& m);

/// Injectivity on the whole free monoid: images must be pairwise distinct and
/// form a uniquely decodable code (dangling-suffix closure).  Erasing
/// morphisms are rejected rather than guessed at.
bool is_injective(const Morphism& m);

/// Letters a with image a·w for nonempty w; each starts a fixed point.
std::vector<std::uint8_t> prolongable_letters(const Morphism& m);

/// Length-n prefix of the fixed point starting at the prolongable letter.
/// Linear in n; rejects non-prolongable letters and finite fixed points.
Word fixed_point_prefix(const Morphism& m, std::uint8_t letter, std::size_t n);

struct PeriodicityCertificate {
  bool periodic = false;
  std::optional<Word> period_word;  // contains every letter exactly once
  unsigned power = 0;               // image of the period word is its power
  bool exact = false;               // decision is complete (primitive + marked)
};

/// Detects purely periodic fixed points of the form p^omega with |p| = d.
/// Sound and complete for primitive marked morphisms; otherwise the answer is
/// best-effort and exact is left false.
PeriodicityCertificate periodicity_certificate(const Morphism& m, std::uint8_t letter);

}  // namespace palimorph

#endif
