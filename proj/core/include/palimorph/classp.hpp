#ifndef PALIMORPH_CLASSP_HPP
#define PALIMORPH_CLASSP_HPP

#include <map>
#include <optional>
#include <string>

#include "palimorph/conjugacy.hpp"

namespace palimorph {

struct ClassPMembership {
  bool in_class_p = false;
  std::optional<Word> witness_p;  // maximal palindromic prefix that works
  bool strict_q = false;          // mode echoed from the request
};

/// Class-P membership: a palindrome p that prefixes every image with every
/// image·p a palindrome.  Candidates are the palindromic prefixes of the
/// longest common image prefix, scanned longest first so the reported p is
/// canonical.  strict_q additionally demands every quotient p^-1·image be
/// nonempty, which is the reading under which the classic Fibonacci morphism
/// falls outside the class.
ClassPMembership is_class_p(const Morphism& m, bool strict_q = false);

/// Mirror-image variant: images factor as q_a·p with p a common palindromic
/// suffix and all q_a palindromes.  Equivalent to literal membership of the
/// reversed morphism.
ClassPMembership is_class_p_suffix_form(const Morphism& m);

/// The five equivalent ways for an acyclic non-erasing morphism to have a
/// class-P conjugate, evaluated independently of each other.
struct ClassPReport {
  bool half_shift_in_class_p = false;   // (1) the half-way conjugate of the
                                        //     leftmost end is in class P
  bool has_class_p_conjugate = false;   // (2)
  bool conjugate_to_reversal = false;   // (3) input and its reversal conjugate
  bool extremes_mirrored = false;       // (4) leftmost = reversal of rightmost
  bool word_and_heads_palindromic = false;  // (5) w and every image head
  Word w;
  std::vector<std::uint8_t> larger_letters;   // letters with |image| > |w|
  std::map<std::uint8_t, Word> image_heads;   // leftmost image minus the w tail
  std::optional<Morphism> witness;
  std::optional<Word> witness_p;

  bool all_conditions() const {
    return half_shift_in_class_p && has_class_p_conjugate &&
           conjugate_to_reversal && extremes_mirrored &&
           word_and_heads_palindromic;
  }
};

ClassPReport class_p_conjugacy_report(const Morphism& m);

struct MirrorEquationCheck {
  bool w_palindrome = false;
  bool u_reverse_of_v = false;
  bool per_letter_mirror = false;  // leftmost image = reversed rightmost image
                                   // for every letter occurring in u
};

/// For a well-marked morphism whose rightmost images satisfy the mirror
/// equation reversal(rightmost(u)·w) = rightmost(v)·w, evaluates the three
/// forced conclusions.  Rejects inputs violating the hypothesis.
MirrorEquationCheck mirror_equation_check(const Morphism& m, const Word& u, const Word& v);

/// Given a palindromic conjugate word w at least as long as every image and
/// realized by |w| right shifts of m, returns the half-way shifted conjugate,
/// which lands in class P.  Returns nullopt (with a reason) when a
/// precondition fails.
std::optional<Morphism> class_p_conjugate_via_word(const Morphism& m, const Word& w,
                                                   std::string* why_rejected = nullptr);

struct HksVerdict {
  bool palindromic = false;
  unsigned power = 0;  // power of the input that carries the witness
  std::optional<Morphism> conjugate_witness;
  std::optional<Word> class_p_p;
  std::optional<PeriodicityCertificate> periodic_case;
};

/// Exact palindromicity decision for primitive marked morphisms: periodic
/// fixed points are palindromic exactly over a binary alphabet (where the
/// morphism itself is in class P); aperiodic ones exactly when the
/// well-marked power has mirrored conjugacy extremes, in which case the
/// half-shift witness is returned.  Inputs outside the regime are rejected
/// with the failing classification.
HksVerdict hks_verify(const Morphism& m);

}  // namespace palimorph

#endif
