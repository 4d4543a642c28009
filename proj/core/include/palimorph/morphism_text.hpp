#ifndef PALIMORPH_MORPHISM_TEXT_HPP
#define PALIMORPH_MORPHISM_TEXT_HPP

#include <string_view>

#include "palimorph/morphism.hpp"

namespace palimorph {

/// Parses the rule format `a->babba;b->bab` (rules split on `;` or `,`,
/// single alphanumeric letters, spaces ignored).  The alphabet is the rule
/// heads in order of first appearance, every image symbol must be a head, and
/// duplicate heads are rejected.  Errors carry the offending position.
Morphism parse_morphism(std::string_view text);

/// Inverse of parse_morphism up to whitespace: Morphism::format already emits
/// the canonical form.
inline std::string format_morphism(const Morphism& m) { return m.format(); }

}  // namespace palimorph

#endif
