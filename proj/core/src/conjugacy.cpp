#include "palimorph/conjugacy.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace palimorph {

namespace {

void require_nonerasing(const Morphism& m, const char* op) {
  if (is_erasing(m))
    throw std::invalid_argument(std::string(op) + " rejects erasing morphisms");
}

[[noreturn]] void throw_cyclic() {
  throw std::invalid_argument(
      "cyclic morphism: leftmost and rightmost conjugates exist only for "
      "acyclic morphisms");
}

std::string state_key(const Morphism& m) { return m.format(); }

}  // namespace

bool check_right_conjugate(const Morphism& phi, const Morphism& psi, const Word& w) {
  if (!same_alphabet(phi.alphabet(), psi.alphabet()))
    throw std::invalid_argument("morphisms are over different alphabets");
  for (std::size_t a = 0; a < phi.alphabet_size(); ++a) {
    std::uint8_t letter = static_cast<std::uint8_t>(a);
    if (w + psi.image(letter) != phi.image(letter) + w) return false;
  }
  return true;
}

std::optional<std::pair<Morphism, std::uint8_t>> shift_right_once(const Morphism& m) {
  require_nonerasing(m, "shift_right_once");
  const Word& first = m.image(0);
  std::uint8_t c = first[first.size() - 1];
  for (const Word& img : m.images())
    if (img[img.size() - 1] != c) return std::nullopt;
  std::vector<Word> images;
  images.reserve(m.alphabet_size());
  for (const Word& img : m.images())
    images.push_back(kth_right_conjugate(img, 1));
  return std::make_pair(Morphism(m.alphabet(), std::move(images)), c);
}

std::optional<std::pair<Morphism, std::uint8_t>> shift_left_once(const Morphism& m) {
  require_nonerasing(m, "shift_left_once");
  std::uint8_t c = m.image(0)[0];
  for (const Word& img : m.images())
    if (img[0] != c) return std::nullopt;
  std::vector<Word> images;
  images.reserve(m.alphabet_size());
  for (const Word& img : m.images())
    images.push_back(img.subword(1, img.size() - 1) + img.prefix(1));
  return std::make_pair(Morphism(m.alphabet(), std::move(images)), c);
}

ConjugacyExtremes conjugacy_extremes(const Morphism& m) {
  require_nonerasing(m, "conjugacy_extremes");
  AlphabetPtr alphabet = m.alphabet();

  // Rightward: every emitted letter goes to the front of the linking word.
  Morphism rightmost = m;
  std::vector<std::uint8_t> right_letters;
  {
    std::set<std::string> visited{state_key(rightmost)};
    while (auto step = shift_right_once(rightmost)) {
      rightmost = std::move(step->first);
      right_letters.insert(right_letters.begin(), step->second);
      if (!visited.insert(state_key(rightmost)).second) throw_cyclic();
    }
  }

  // Leftward: emitted letters append to the linking word.
  Morphism leftmost = m;
  std::vector<std::uint8_t> left_letters;
  {
    std::set<std::string> visited{state_key(leftmost)};
    while (auto step = shift_left_once(leftmost)) {
      leftmost = std::move(step->first);
      left_letters.push_back(step->second);
      if (!visited.insert(state_key(leftmost)).second) throw_cyclic();
    }
  }

  ConjugacyExtremes out{std::move(leftmost), std::move(rightmost),
                        Word(alphabet, {}), Word(alphabet, std::move(left_letters)),
                        Word(alphabet, std::move(right_letters))};
  out.w = out.right_shift + out.left_shift;

  if (!check_right_conjugate(out.rightmost, out.leftmost, out.w) ||
      !check_right_conjugate(m, out.leftmost, out.left_shift) ||
      !check_right_conjugate(out.rightmost, m, out.right_shift) ||
      !(incidence_matrix(out.leftmost) == incidence_matrix(out.rightmost)))
    throw std::logic_error("conjugacy extremes failed their construction checks");
  return out;
}

namespace {

bool injective_letter_map(const std::vector<std::uint8_t>& map) {
  std::vector<bool> seen(map.size(), false);
  for (std::uint8_t v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::uint8_t> first_letters(const Morphism& m) {
  std::vector<std::uint8_t> out;
  out.reserve(m.alphabet_size());
  for (const Word& img : m.images()) out.push_back(img[0]);
  return out;
}

std::vector<std::uint8_t> last_letters(const Morphism& m) {
  std::vector<std::uint8_t> out;
  out.reserve(m.alphabet_size());
  for (const Word& img : m.images()) out.push_back(img[img.size() - 1]);
  return out;
}

std::vector<std::uint8_t> compose_maps(const std::vector<std::uint8_t>& outer,
                                       const std::vector<std::uint8_t>& inner) {
  std::vector<std::uint8_t> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

MarkednessReport markedness(const Morphism& m) {
  ConjugacyExtremes ext = conjugacy_extremes(m);
  MarkednessReport report;
  report.fst_of_leftmost = first_letters(ext.leftmost);
  report.lst_of_rightmost = last_letters(ext.rightmost);
  report.marked = injective_letter_map(report.fst_of_leftmost) &&
                  injective_letter_map(report.lst_of_rightmost);
  report.well_marked =
      report.marked && report.fst_of_leftmost == report.lst_of_rightmost;
  return report;
}

bool is_marked(const Morphism& m) { return markedness(m).marked; }

std::pair<unsigned, Morphism> well_marked_power(const Morphism& m) {
  MarkednessReport report = markedness(m);
  if (!report.marked)
    throw std::invalid_argument("well_marked_power needs a marked morphism");

  // First/last letter maps of chain ends compose under powers, so it is
  // enough to iterate the two permutations until they meet.  They do meet by
  // lcm(1..d), where both are the identity.
  std::uint64_t bound = 1;
  for (std::size_t i = 2; i <= m.alphabet_size(); ++i)
    bound = std::lcm(bound, static_cast<std::uint64_t>(i));

  std::vector<std::uint8_t> fst = report.fst_of_leftmost;
  std::vector<std::uint8_t> lst = report.lst_of_rightmost;
  for (unsigned k = 1; k <= bound; ++k) {
    if (fst == lst) return {k, power(m, k)};
    fst = compose_maps(report.fst_of_leftmost, fst);
    lst = compose_maps(report.lst_of_rightmost, lst);
  }
  throw std::logic_error("no well-marked power below lcm(1..d)");
}

}  // namespace palimorph
