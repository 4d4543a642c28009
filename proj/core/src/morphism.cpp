#include "palimorph/morphism.hpp"

#include <set>
#include <stdexcept>

namespace palimorph {

namespace {

void require_same(const Morphism& a, const Morphism& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw std::invalid_argument("morphisms are over different alphabets");
}

}  // namespace

Morphism::Morphism(AlphabetPtr alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (!alphabet_) throw std::invalid_argument("morphism needs an alphabet");
  if (images_.size() != alphabet_->size())
    throw std::invalid_argument("morphism needs exactly one image per letter");
  for (const Word& w : images_)
    if (!same_alphabet(w.alphabet(), alphabet_))
      throw std::invalid_argument("image over a different alphabet");
}

Word Morphism::operator()(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_))
    throw std::invalid_argument("word over a different alphabet");
  std::vector<std::uint8_t> out;
  std::size_t total = 0;
  for (std::uint8_t s : w.symbols()) total += images_[s].size();
  out.reserve(total);
  for (std::uint8_t s : w.symbols()) {
    const auto& img = images_[s].symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(alphabet_, std::move(out));
}

std::string Morphism::format() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ';';
    out += alphabet_->letter(static_cast<std::uint8_t>(i));
    out += "->";
    out += images_[i].str();
  }
  return out;
}

bool operator==(const Morphism& a, const Morphism& b) {
  require_same(a, b);
  return a.images_ == b.images_;
}

bool operator<(const Morphism& a, const Morphism& b) {
  require_same(a, b);
  return a.images_ < b.images_;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  require_same(outer, inner);
  std::vector<Word> images;
  images.reserve(inner.alphabet_size());
  for (const Word& w : inner.images()) images.push_back(outer(w));
  return Morphism(outer.alphabet(), std::move(images));
}

Morphism power(const Morphism& m, unsigned k) {
  if (k == 0) throw std::invalid_argument("morphism power needs k >= 1");
  Morphism out = m;
  for (unsigned i = 1; i < k; ++i) out = compose(m, out);
  return out;
}

Morphism reversed(const Morphism& m) {
  std::vector<Word> images;
  images.reserve(m.alphabet_size());
  for (const Word& w : m.images()) images.push_back(reversed(w));
  return Morphism(m.alphabet(), std::move(images));
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  std::size_t d = m.alphabet_size();
  IncidenceMatrix mat{d, std::vector<std::uint64_t>(d * d, 0)};
  for (std::size_t col = 0; col < d; ++col)
    for (std::uint8_t s : m.image(static_cast<std::uint8_t>(col)).symbols())
      ++mat.at(s, col);
  return mat;
}

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  IncidenceMatrix out{a.dim, std::vector<std::uint64_t>(a.dim * a.dim, 0)};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      std::uint64_t aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool is_erasing(const Morphism& m) {
  for (const Word& w : m.images())
    if (w.empty()) return true;
  return false;
}

std::optional<Word> cyclic_root(const Morphism& m) {
  const Word* first_nonempty = nullptr;
  for (const Word& w : m.images())
    if (!w.empty()) {
      first_nonempty = &w;
      break;
    }
  if (!first_nonempty) return Word::empty(m.alphabet());
  Word root = primitive_root(*first_nonempty).root;
  for (const Word& w : m.images()) {
    if (w.empty()) continue;
    if (w.size() % root.size() != 0) return std::nullopt;
    if (repeat(root, w.size() / root.size()) != w) return std::nullopt;
  }
  return root;
}

bool is_primitive(const Morphism& m) {
  std::size_t d = m.alphabet_size();
  // reach[i][j]: letter i occurs in the image of j (boolean incidence).
  std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
  for (std::size_t col = 0; col < d; ++col)
    for (std::uint8_t s : m.image(static_cast<std::uint8_t>(col)).symbols())
      reach[s][col] = true;

  auto mul = [d](const std::vector<std::vector<bool>>& a,
                 const std::vector<std::vector<bool>>& b) {
    std::vector<std::vector<bool>> out(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < d; ++j)
            if (b[k][j]) out[i][j] = true;
    return out;
  };

  // Wielandt bound: a primitive matrix is positive at exponent (d-1)^2 + 1.
  std::uint64_t exponent = (d - 1) * (d - 1) + 1;
  std::vector<std::vector<bool>> acc;
  std::vector<std::vector<bool>> base = reach;
  bool acc_set = false;
  while (exponent) {
    if (exponent & 1) {
      acc = acc_set ? mul(acc, base) : base;
      acc_set = true;
    }
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  for (const auto& row : acc)
    for (bool cell : row)
      if (!cell) return false;
  return true;
}

bool is_injective(const Morphism& m) {
  if (is_erasing(m))
    throw std::invalid_argument("injectivity is not decided for erasing morphisms");
  std::set<Word> code(m.images().begin(), m.images().end());
  if (code.size() != m.alphabet_size()) return false;  // two letters share an image

  // Dangling-suffix closure: the code is uniquely decodable iff no round
  // produces the empty word.
  auto residuals = [](const std::set<Word>& xs, const std::set<Word>& ys,
                      std::set<Word>& out, bool& hit_empty) {
    for (const Word& x : xs)
      for (const Word& y : ys) {
        if (x.size() > y.size() || !y.starts_with(x)) continue;
        Word rest = y.subword(x.size(), y.size() - x.size());
        if (rest.empty())
          hit_empty = true;
        else
          out.insert(std::move(rest));
      }
  };

  std::set<Word> dangling;
  for (const Word& c : code)
    for (const Word& other : code) {
      if (c == other || c.size() >= other.size()) continue;
      if (other.starts_with(c)) dangling.insert(other.subword(c.size(), other.size() - c.size()));
    }

  std::set<std::set<Word>> seen;
  while (!dangling.empty() && seen.insert(dangling).second) {
    std::set<Word> next;
    bool hit_empty = false;
    residuals(code, dangling, next, hit_empty);
    residuals(dangling, code, next, hit_empty);
    if (hit_empty) return false;
    dangling = std::move(next);
  }
  return true;
}

std::vector<std::uint8_t> prolongable_letters(const Morphism& m) {
  std::vector<std::uint8_t> out;
  for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
    const Word& img = m.image(static_cast<std::uint8_t>(a));
    if (img.size() >= 2 && img[0] == a) out.push_back(static_cast<std::uint8_t>(a));
  }
  return out;
}

namespace {

bool prolongable_at(const Morphism& m, std::uint8_t letter) {
  if (letter >= m.alphabet_size()) throw std::invalid_argument("letter outside alphabet");
  const Word& img = m.image(letter);
  return img.size() >= 2 && img[0] == letter;
}

}  // namespace

Word fixed_point_prefix(const Morphism& m, std::uint8_t letter, std::size_t n) {
  if (!prolongable_at(m, letter))
    throw std::invalid_argument("morphism is not prolongable at this letter");
  std::vector<std::uint8_t> buf = m.image(letter).symbols();
  // buf stays the image of its own consumed prefix, hence a fixed-point prefix.
  for (std::size_t i = 1; buf.size() < n; ++i) {
    if (i >= buf.size())
      throw std::invalid_argument("fixed point at this letter is finite");
    const auto& img = m.image(buf[i]).symbols();
    buf.insert(buf.end(), img.begin(), img.end());
  }
  buf.resize(std::min(buf.size(), n));
  if (buf.size() < n) throw std::invalid_argument("fixed point at this letter is finite");
  return Word(m.alphabet(), std::move(buf));
}

// Declared in conjugacy.hpp; used here only to stamp the exactness flag.
bool is_marked(const Morphism& m);

PeriodicityCertificate periodicity_certificate(const Morphism& m, std::uint8_t letter) {
  if (!prolongable_at(m, letter))
    throw std::invalid_argument("morphism is not prolongable at this letter");
  std::size_t d = m.alphabet_size();
  PeriodicityCertificate cert;
  try {
    cert.exact = !is_erasing(m) && is_primitive(m) && is_marked(m);
  } catch (const std::exception&) {
    cert.exact = false;  // cyclic or otherwise outside the complete regime
  }

  Word head = fixed_point_prefix(m, letter, d + 1);
  std::vector<bool> seen(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    if (seen[head[i]]) return cert;  // repeated letter inside the candidate period
    seen[head[i]] = true;
  }
  if (head[d] != head[0]) return cert;

  Word candidate = head.prefix(d);
  Word img = m(candidate);
  if (img.size() % d != 0) return cert;
  std::size_t k = img.size() / d;
  if (k == 0 || repeat(candidate, k) != img) return cert;
  cert.periodic = true;
  cert.period_word = candidate;
  cert.power = static_cast<unsigned>(k);
  return cert;
}

}  // namespace palimorph
