#include "palimorph/morphism_text.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace palimorph {

namespace {

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("morphism spec, position " + std::to_string(pos) + ": " + what);
}

bool is_letter_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

}  // namespace

Morphism parse_morphism(std::string_view text) {
  struct Rule {
    char head;
    std::string image;
    std::size_t head_pos;
  };
  std::vector<Rule> rules;

  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  while (true) {
    skip_spaces();
    if (i >= text.size()) syntax_error(i, "expected a rule head");
    if (!is_letter_char(text[i]))
      syntax_error(i, std::string("expected a letter, found '") + text[i] + "'");
    Rule rule{text[i], "", i};
    ++i;
    skip_spaces();
    if (i + 1 >= text.size() || text[i] != '-' || text[i + 1] != '>')
      syntax_error(i, "expected '->' after the rule head");
    i += 2;
    skip_spaces();
    while (i < text.size() && is_letter_char(text[i])) {
      rule.image.push_back(text[i]);
      ++i;
    }
    rules.push_back(std::move(rule));
    skip_spaces();
    if (i >= text.size()) break;
    if (text[i] != ';' && text[i] != ',')
      syntax_error(i, std::string("expected ';' or ',' between rules, found '") + text[i] + "'");
    ++i;
  }

  std::string letters;
  for (const Rule& rule : rules) {
    if (letters.find(rule.head) != std::string::npos)
      syntax_error(rule.head_pos, std::string("duplicate rule head '") + rule.head + "'");
    letters.push_back(rule.head);
  }
  AlphabetPtr alphabet = Alphabet::of(letters);

  std::vector<Word> images;
  images.reserve(rules.size());
  for (const Rule& rule : rules) {
    for (char c : rule.image)
      if (!alphabet->index_of(c))
        throw std::invalid_argument(std::string("morphism spec: image symbol '") + c +
                                    "' has no rule");
    images.push_back(Word::parse(alphabet, rule.image));
  }
  return Morphism(std::move(alphabet), std::move(images));
}

}  // namespace palimorph
