#include "palimorph/classp.hpp"

#include <cassert>
#include <stdexcept>

namespace palimorph {

namespace {

Word longest_common_prefix(const Morphism& m) {
  const std::vector<Word>& images = m.images();
  std::size_t len = images[0].size();
  for (const Word& img : images) len = std::min(len, img.size());
  std::size_t i = 0;
  for (; i < len; ++i) {
    bool agree = true;
    for (const Word& img : images)
      if (img[i] != images[0][i]) agree = false;
    if (!agree) break;
  }
  return images[0].prefix(i);
}

/// k-fold right shift along the conjugacy chain; every step must exist.
Morphism shift_right_times(const Morphism& m, std::size_t k) {
  Morphism cur = m;
  for (std::size_t i = 0; i < k; ++i) {
    auto step = shift_right_once(cur);
    if (!step) throw std::logic_error("right-shift chain ended early");
    cur = std::move(step->first);
  }
  return cur;
}

}  // namespace

ClassPMembership is_class_p(const Morphism& m, bool strict_q) {
  ClassPMembership out;
  out.strict_q = strict_q;
  Word lcp = longest_common_prefix(m);
  for (std::size_t len = lcp.size() + 1; len-- > 0;) {
    Word p = lcp.prefix(len);
    if (!is_palindrome(p)) continue;
    bool ok = true;
    for (const Word& img : m.images()) {
      if (strict_q && img.size() == p.size()) {  // empty quotient
        ok = false;
        break;
      }
      if (!is_palindrome(img + p)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.in_class_p = true;
      out.witness_p = std::move(p);
      return out;
    }
  }
  return out;
}

ClassPMembership is_class_p_suffix_form(const Morphism& m) {
  ClassPMembership out = is_class_p(reversed(m), false);
  out.strict_q = false;
  return out;
}

ClassPReport class_p_conjugacy_report(const Morphism& m) {
  ConjugacyExtremes ext = conjugacy_extremes(m);
  ClassPReport report{.w = ext.w};

  // (4) directly, per letter.
  report.extremes_mirrored = (ext.leftmost == reversed(ext.rightmost));

  // (5) the conjugate word and the image heads it cuts off.
  report.word_and_heads_palindromic = is_palindrome(ext.w);
  for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
    std::uint8_t letter = static_cast<std::uint8_t>(a);
    if (m.image(letter).size() <= ext.w.size()) continue;
    report.larger_letters.push_back(letter);
    const Word& left_image = ext.leftmost.image(letter);
    if (!left_image.ends_with(ext.w))
      throw std::logic_error("conjugate word is not a suffix of a longer image");
    Word head = left_image.prefix(left_image.size() - ext.w.size());
    if (!is_palindrome(head)) report.word_and_heads_palindromic = false;
    report.image_heads.emplace(letter, std::move(head));
  }

  // (3) conjugacy to the reversal, via the shared leftmost end.
  report.conjugate_to_reversal =
      (conjugacy_extremes(reversed(m)).leftmost == ext.leftmost);

  // (1) construct the half-way conjugate of the leftmost end by walking the
  // chain; all |w|/2 steps exist because the rightmost end is |w| steps away.
  std::size_t half = (ext.w.size() + 1) / 2;
  Morphism candidate = shift_right_times(ext.leftmost, half);
  ClassPMembership membership = is_class_p(candidate, false);
  report.half_shift_in_class_p = membership.in_class_p;
  report.has_class_p_conjugate = report.half_shift_in_class_p;
  if (membership.in_class_p) {
    report.witness = std::move(candidate);
    report.witness_p = membership.witness_p;
  }

  assert(report.half_shift_in_class_p == report.extremes_mirrored &&
         report.extremes_mirrored == report.word_and_heads_palindromic &&
         report.conjugate_to_reversal == report.extremes_mirrored);
  return report;
}

MirrorEquationCheck mirror_equation_check(const Morphism& m, const Word& u, const Word& v) {
  MarkednessReport mark = markedness(m);
  if (!mark.well_marked)
    throw std::invalid_argument("mirror equation check needs a well-marked morphism");
  ConjugacyExtremes ext = conjugacy_extremes(m);
  if (reversed(ext.rightmost(u) + ext.w) != ext.rightmost(v) + ext.w)
    throw std::invalid_argument("mirror equation hypothesis does not hold for (u, v)");

  MirrorEquationCheck out;
  out.w_palindrome = is_palindrome(ext.w);
  out.u_reverse_of_v = (reversed(u) == v);
  out.per_letter_mirror = true;
  std::vector<bool> occurs(m.alphabet_size(), false);
  for (std::uint8_t s : u.symbols()) occurs[s] = true;
  for (std::size_t a = 0; a < m.alphabet_size(); ++a)
    if (occurs[a] && ext.leftmost.image(static_cast<std::uint8_t>(a)) !=
                         reversed(ext.rightmost.image(static_cast<std::uint8_t>(a))))
      out.per_letter_mirror = false;
  return out;
}

std::optional<Morphism> class_p_conjugate_via_word(const Morphism& m, const Word& w,
                                                   std::string* why_rejected) {
  auto reject = [&](const char* why) -> std::optional<Morphism> {
    if (why_rejected) *why_rejected = why;
    return std::nullopt;
  };
  if (!same_alphabet(m.alphabet(), w.alphabet()))
    return reject("word is over a different alphabet");
  if (!is_palindrome(w)) return reject("conjugate word is not a palindrome");

  // The word must be realized letter-for-letter by |w| right shifts.
  std::size_t half = (w.size() + 1) / 2;
  Morphism cur = m;
  std::optional<Morphism> at_half = half == 0 ? std::optional<Morphism>(m) : std::nullopt;
  std::vector<std::uint8_t> emitted;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto step = shift_right_once(cur);
    if (!step) return reject("morphism cannot be shifted right |w| times");
    cur = std::move(step->first);
    emitted.insert(emitted.begin(), step->second);
    if (i + 1 == half) at_half = cur;
  }
  if (Word(m.alphabet(), std::move(emitted)) != w)
    return reject("w is not the conjugate word of the right-shift chain");

  if (!w.empty())
    for (const Word& img : m.images())
      if (img.size() > w.size())
        return reject("conjugate word is shorter than an image");

  if (!is_class_p(*at_half, false).in_class_p)
    return reject("half-way conjugate is not in class P");
  return at_half;
}

HksVerdict hks_verify(const Morphism& m) {
  if (is_erasing(m)) throw std::invalid_argument("the palindromicity decision rejects erasing morphisms");
  if (is_cyclic(m))
    throw std::invalid_argument("the palindromicity decision rejects cyclic morphisms (not marked)");
  if (!is_primitive(m))
    throw std::invalid_argument("the palindromicity decision needs a primitive morphism");
  MarkednessReport mark = markedness(m);
  if (!mark.marked) throw std::invalid_argument("the palindromicity decision needs a marked morphism");
  std::vector<std::uint8_t> starts = prolongable_letters(m);
  if (starts.empty())
    throw std::invalid_argument("the palindromicity decision needs a fixed point (no prolongable letter)");

  HksVerdict verdict;
  PeriodicityCertificate cert = periodicity_certificate(m, starts[0]);
  if (cert.periodic) {
    // Periodic fixed points are palindromic exactly over two letters, and
    // then the morphism itself already lies in class P.
    verdict.periodic_case = cert;
    verdict.power = 1;
    verdict.palindromic = (m.alphabet_size() == 2);
    if (verdict.palindromic) {
      ClassPMembership membership = is_class_p(m, false);
      if (!membership.in_class_p)
        throw std::logic_error("binary periodic marked morphism escaped class P");
      verdict.conjugate_witness = m;
      verdict.class_p_p = membership.witness_p;
    }
    return verdict;
  }

  auto [k, wm] = well_marked_power(m);
  verdict.power = k;
  ClassPReport report = class_p_conjugacy_report(wm);
  verdict.palindromic = report.extremes_mirrored;
  if (verdict.palindromic) {
    verdict.conjugate_witness = report.witness;
    verdict.class_p_p = report.witness_p;
  }
  return verdict;
}

}  // namespace palimorph
