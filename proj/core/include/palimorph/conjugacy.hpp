#ifndef PALIMORPH_CONJUGACY_HPP
#define PALIMORPH_CONJUGACY_HPP

#include <optional>
#include <utility>

#include "palimorph/morphism.hpp"

namespace palimorph {

/// True iff w·psi(a) = phi(a)·w for every letter, i.e. phi is a right
/// conjugate of psi with conjugate word w.
bool check_right_conjugate(const Morphism& phi, const Morphism& psi, const Word& w);

/// One step towards the rightmost conjugate: if every image ends with the same
/// letter c, each image is rotated right by one and (result, c) is returned.
/// Rejects erasing morphisms.
std::optional<std::pair<Morphism, std::uint8_t>> shift_right_once(const Morphism& m);

/// Mirror step towards the leftmost conjugate: requires a common first letter.
std::optional<std::pair<Morphism, std::uint8_t>> shift_left_once(const Morphism& m);

/// The two ends of the conjugacy chain of an acyclic non-erasing morphism.
///
/// The conjugate word satisfies rightmost(x)·w = w·leftmost(x) for all x and
/// factors as w = right_shift·left_shift, where right_shift links the
/// rightmost conjugate back to the input and left_shift links the input to the
/// leftmost conjugate.  Both relations are checked at construction time.
struct ConjugacyExtremes {
  Morphism leftmost;
  Morphism rightmost;
  Word w;
  Word left_shift;
  Word right_shift;
};

/// Follows the shift chain in both directions.  Termination is by pigeonhole:
/// shifting preserves image lengths, so revisiting a morphism proves the input
/// cyclic and is reported as an error; acyclic inputs always reach both ends.
ConjugacyExtremes conjugacy_extremes(const Morphism& m);

struct MarkednessReport {
  bool marked = false;
  bool well_marked = false;
  std::vector<std::uint8_t> fst_of_leftmost;  // letter -> first letter of leftmost image
  std::vector<std::uint8_t> lst_of_rightmost;
};

/// Marked: both letter maps above are injective.  Well-marked: marked and the
/// two maps coincide.  Rejects cyclic or erasing input.
MarkednessReport markedness(const Morphism& m);
bool is_marked(const Morphism& m);

/// Smallest k >= 1 whose power is well-marked, together with that power.
/// k never exceeds lcm(1..d).  Rejects morphisms that are not marked.
std::pair<unsigned, Morphism> well_marked_power(const Morphism& m);

}  // namespace palimorph

#endif
