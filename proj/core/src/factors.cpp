#include "palimorph/factors.hpp"

#include <algorithm>
#include <stdexcept>

namespace palimorph {

namespace {

void insert_factors_up_to(const Word& text, std::size_t max_len, std::set<Word>& out) {
  for (std::size_t len = 0; len <= std::min(max_len, text.size()); ++len)
    for (std::size_t pos = 0; pos + len <= text.size(); ++pos)
      out.insert(text.subword(pos, len));
}

void insert_factors_len2(const Word& text, std::set<Word>& out) {
  for (std::size_t pos = 0; pos + 2 <= text.size(); ++pos)
    out.insert(text.subword(pos, 2));
}

void require_prolongable(const Morphism& m, std::uint8_t letter) {
  auto starts = prolongable_letters(m);
  if (std::find(starts.begin(), starts.end(), letter) == starts.end())
    throw std::invalid_argument("morphism is not prolongable at this letter");
}

}  // namespace

FactorIndex build_factor_index(const Morphism& m, std::uint8_t letter, std::size_t max_len,
                               std::size_t scrape_len) {
  if (max_len == 0) throw std::invalid_argument("factor index needs max_len >= 1");
  require_prolongable(m, letter);

  FactorIndex idx{m, letter, max_len, false, {}};

  if (!is_primitive(m)) {
    Word prefix = fixed_point_prefix(m, letter, scrape_len);
    insert_factors_up_to(prefix, max_len, idx.factors);
    return idx;
  }

  // Length-2 factors by closure: a pair of adjacent letters of the fixed
  // point lies inside the image of another such pair, except for the seed
  // pairs inside the image of the starting letter.
  std::set<Word> pairs;
  insert_factors_len2(m.image(letter), pairs);
  for (bool grew = true; grew;) {
    std::set<Word> next = pairs;
    for (const Word& p : pairs) insert_factors_len2(m(p), next);
    grew = next.size() != pairs.size();
    pairs = std::move(next);
  }

  // Under a power whose shortest letter image reaches max_len, every factor
  // of that length is visible inside the image of some adjacent pair.
  Morphism expanded = m;
  auto min_image = [](const Morphism& mm) {
    std::size_t lo = mm.image(0).size();
    for (const Word& img : mm.images()) lo = std::min(lo, img.size());
    return lo;
  };
  while (min_image(expanded) < max_len) expanded = compose(m, expanded);

  for (const Word& p : pairs) insert_factors_up_to(expanded(p), max_len, idx.factors);
  idx.certified = true;
  return idx;
}

SpecialFactors special_factors(const FactorIndex& idx, std::size_t up_to_len) {
  if (up_to_len + 1 > idx.max_len)
    throw std::invalid_argument("extensions beyond the index bound are not visible");
  SpecialFactors out;
  std::size_t d = idx.source.alphabet_size();
  for (const Word& f : idx.factors) {
    if (f.size() > up_to_len) continue;
    std::size_t left = 0, right = 0;
    for (std::size_t a = 0; a < d; ++a) {
      Word single(f.alphabet(), {static_cast<std::uint8_t>(a)});
      if (idx.contains(single + f)) ++left;
      if (idx.contains(f + single)) ++right;
    }
    if (left > 1) out.left.insert(f);
    if (right > 1) out.right.insert(f);
    if (left > 1 && right > 1) out.bispecial.insert(f);
  }
  return out;
}

std::size_t PalindromeCensus::total() const {
  std::size_t sum = 0;
  for (std::size_t i = 1; i < count_by_length.size(); ++i) sum += count_by_length[i];
  return sum;
}

std::vector<std::size_t> PalindromeCensus::band_counts(std::size_t width) const {
  if (width == 0) throw std::invalid_argument("band width must be positive");
  std::vector<std::size_t> bands;
  for (std::size_t len = 1; len < count_by_length.size(); ++len) {
    std::size_t band = (len - 1) / width;
    if (band >= bands.size()) bands.resize(band + 1, 0);
    bands[band] += count_by_length[len];
  }
  return bands;
}

PalindromeCensus palindrome_census(const Word& text) {
  PalindromeCensus out{PalindromeTree(text.alphabet()), {}};
  out.tree.append(text);
  out.count_by_length = out.tree.census_by_length();
  return out;
}

PalindromeCensus palindrome_census(const FactorIndex& idx) {
  std::set<Word> pals;
  for (const Word& f : idx.factors)
    if (is_palindrome(f)) pals.insert(f);
  PalindromeCensus out{PalindromeTree::from_palindromes(idx.source.alphabet(), pals), {}};
  out.count_by_length = out.tree.census_by_length();
  return out;
}

ReturnWordScan complete_return_words(const Word& text, const Word& w) {
  if (w.empty()) throw std::invalid_argument("return words need a nonempty query");
  if (!same_alphabet(text.alphabet(), w.alphabet()))
    throw std::invalid_argument("query over a different alphabet");
  std::vector<std::size_t> hits;
  for (std::size_t pos = 0; pos + w.size() <= text.size(); ++pos) {
    bool match = true;
    for (std::size_t i = 0; i < w.size() && match; ++i)
      if (text[pos + i] != w[i]) match = false;
    if (match) hits.push_back(pos);
  }
  if (hits.size() < 2)
    throw std::invalid_argument("query occurs fewer than twice in the text");

  ReturnWordScan scan;
  std::map<Word, std::size_t> times_seen;
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    Word ret = text.subword(hits[i], hits[i + 1] + w.size() - hits[i]);
    ++times_seen[ret];
    scan.words.insert(std::move(ret));
  }
  scan.saturated = true;
  for (const auto& [word, count] : times_seen)
    if (count < 2) scan.saturated = false;
  return scan;
}

namespace {

std::size_t smallest_period(const Word& w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = fail[i];
    while (k && w[i] != w[k]) k = fail[k];
    fail[i + 1] = (w[i] == w[k]) ? k + 1 : 0;
  }
  return w.size() - fail[w.size()];
}

bool looks_eventually_periodic(const Word& prefix) {
  // Tail-period heuristic: a short period over the second half of the prefix.
  std::size_t half = prefix.size() / 2;
  if (half == 0) return false;
  Word tail = prefix.subword(prefix.size() - half, half);
  return smallest_period(tail) <= half / 4;
}

}  // namespace

Word bispecial_extension(const Morphism& m, std::uint8_t letter, const Word& w,
                         std::size_t prefix_len) {
  require_prolongable(m, letter);
  bool certified_aperiodic = false;
  if (!is_erasing(m) && !is_cyclic(m) && is_primitive(m) && is_marked(m)) {
    if (periodicity_certificate(m, letter).periodic)
      throw std::invalid_argument(
          "bispecial extension needs an aperiodic source (periodic fixed point)");
    certified_aperiodic = true;
  }

  Word prefix = fixed_point_prefix(m, letter, prefix_len);
  if (!certified_aperiodic && looks_eventually_periodic(prefix))
    throw std::invalid_argument(
        "bispecial extension needs an aperiodic source (prefix looks periodic; "
        "heuristic decision)");

  ReturnWordScan scan = complete_return_words(prefix, w);
  if (scan.words.size() < 2)
    throw std::invalid_argument(
        "bispecial extension needs an aperiodic source (single return word)");

  auto common_prefix_len = [](const std::set<Word>& words) {
    const Word& first = *words.begin();
    std::size_t len = first.size();
    for (const Word& other : words) {
      std::size_t i = 0;
      while (i < len && i < other.size() && other[i] == first[i]) ++i;
      len = i;
    }
    return len;
  };
  auto common_suffix_len = [](const std::set<Word>& words) {
    const Word& first = *words.begin();
    std::size_t len = first.size();
    for (const Word& other : words) {
      std::size_t i = 0;
      while (i < len && i < other.size() &&
             other[other.size() - 1 - i] == first[first.size() - 1 - i])
        ++i;
      len = i;
    }
    return len;
  };

  const Word& sample = *scan.words.begin();
  Word with_right = sample.prefix(common_prefix_len(scan.words));  // w·V
  Word with_left = sample.suffix(common_suffix_len(scan.words));   // U·w
  Word left_arm = with_left.prefix(with_left.size() - w.size());
  Word right_arm = with_right.subword(w.size(), with_right.size() - w.size());
  return left_arm + w + right_arm;
}

Word bispecial_step(const ConjugacyExtremes& ext, const Word& u) {
  return ext.rightmost(u) + ext.w;
}

Word bispecial_step(const Morphism& m, const Word& u) {
  return bispecial_step(conjugacy_extremes(m), u);
}

BispecialOrbit bispecial_orbit(const Morphism& m, std::size_t max_len,
                               std::optional<std::size_t> seed_bound) {
  if (!is_primitive(m))
    throw std::invalid_argument("bispecial orbit needs a primitive morphism");
  if (!is_marked(m)) throw std::invalid_argument("bispecial orbit needs a marked morphism");
  auto starts = prolongable_letters(m);
  if (starts.empty()) throw std::invalid_argument("bispecial orbit needs a fixed point");

  ConjugacyExtremes ext = conjugacy_extremes(m);
  std::size_t longest_image = 0;
  for (const Word& img : m.images()) longest_image = std::max(longest_image, img.size());
  std::size_t seed =
      seed_bound.value_or(std::max(ext.w.size(), 2 * longest_image) + m.alphabet_size());

  BispecialOrbit orbit{.w = ext.w, .seed_bound = seed, .max_len = max_len};

  FactorIndex idx = build_factor_index(m, starts[0], max_len + 1);
  const std::set<Word> bis = special_factors(idx, max_len).bispecial;

  // Seeds: bispecials within the bound that the step map does not produce
  // from a shorter bispecial.
  std::set<Word> produced;
  for (const Word& v : bis) {
    Word image = bispecial_step(ext, v);
    if (image.size() > v.size()) produced.insert(std::move(image));
  }
  for (const Word& u : bis)
    if (u.size() <= seed && !produced.count(u)) orbit.initial.insert(u);

  // Iterate the step map; every image that still fits the index must be
  // bispecial again.
  std::vector<Word> frontier(orbit.initial.begin(), orbit.initial.end());
  while (!frontier.empty()) {
    Word u = std::move(frontier.back());
    frontier.pop_back();
    Word image = bispecial_step(ext, u);
    if (image.size() > max_len) continue;
    if (!bis.count(image))
      throw std::logic_error("step image of a bispecial factor is not bispecial");
    if (orbit.orbit.emplace(std::move(u), image).second)
      frontier.push_back(std::move(image));
  }
  return orbit;
}

}  // namespace palimorph
