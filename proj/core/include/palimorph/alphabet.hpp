#ifndef PALIMORPH_ALPHABET_HPP
#define PALIMORPH_ALPHABET_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace palimorph {

/// An ordered finite set of single-character letters.  The creation order is
/// canonical and drives every deterministic tie-break downstream, so two
/// alphabets with the same letters in a different order are distinct.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> of(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  char letter(std::uint8_t index) const { return letters_.at(index); }
  std::optional<std::uint8_t> index_of(char c) const {
    int16_t i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<std::uint8_t>(i);
  }
  const std::string& letters() const { return letters_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }

 private:
  explicit Alphabet(std::string letters);

  std::string letters_;
  std::array<int16_t, 256> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Value equality of the referenced alphabets (pointer identity not required).
inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace palimorph

#endif
