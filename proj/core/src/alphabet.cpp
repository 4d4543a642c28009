#include "palimorph/alphabet.hpp"

#include <stdexcept>

namespace palimorph {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (letters_.size() > 250) throw std::invalid_argument("alphabet too large");
  index_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(letters_[i]);
    if (index_[c] >= 0)
      throw std::invalid_argument(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
    index_[c] = static_cast<int16_t>(i);
  }
}

std::shared_ptr<const Alphabet> Alphabet::of(std::string_view letters) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::string(letters)));
}

}  // namespace palimorph
