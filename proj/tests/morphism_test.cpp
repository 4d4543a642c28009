#include <doctest.h>

#include <map>
#include <set>

#include "support/fixtures.hpp"

using namespace palimorph;
using fixtures::Rng;

namespace {

// Exhaustive collision search: feed every word up to max_len through the
// morphism and look for two preimages with one image.
std::optional<std::pair<Word, Word>> collision_up_to(const Morphism& m, std::size_t max_len) {
  std::map<Word, Word> seen;
  std::vector<Word> layer{Word::empty(m.alphabet())};
  seen.emplace(m(layer[0]), layer[0]);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& u : layer)
      for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
        Word v = u + Word(m.alphabet(), {static_cast<std::uint8_t>(a)});
        auto [it, fresh] = seen.emplace(m(v), v);
        if (!fresh) return std::make_pair(it->second, v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::uint64_t> letter_counts(const Word& w, std::size_t d) {
  std::vector<std::uint64_t> counts(d, 0);
  for (std::uint8_t s : w.symbols()) ++counts[s];
  return counts;
}

}  // namespace

TEST_CASE("application and composition") {
  Morphism tm = fixtures::thue_morse();
  CHECK(tm(fixtures::word(tm, "0")).str() == "01");
  CHECK(tm(fixtures::word(tm, "")).str() == "");

  Morphism fib = fixtures::fibonacci();
  CHECK(fib(fixtures::word(fib, "01")).str() == "010");

  Morphism tm2 = power(tm, 2);
  CHECK(tm2.image(0).str() == "0110");
  CHECK(tm2.image(1).str() == "1001");
  CHECK(power(tm, 1) == tm);
  Morphism fib2 = power(fib, 2);
  CHECK(fib2.image(0).str() == "010");
  CHECK(fib2.image(1).str() == "01");

  Rng rng(201);
  AlphabetPtr abc = Alphabet::of("abc");
  for (int i = 0; i < 200; ++i) {
    Morphism m = rng.random_morphism(abc, 0, 3);
    Word u = rng.random_word(abc, rng.below(6));
    Word v = rng.random_word(abc, rng.below(6));
    CHECK(m(u + v) == m(u) + m(v));
  }
}

TEST_CASE("reversal of a morphism") {
  Morphism phi1 = fixtures::chain(1);
  Morphism phi7 = fixtures::chain(7);
  CHECK(reversed(phi1) == phi7);
  CHECK(reversed(reversed(phi1)) == phi1);

  Morphism tm = fixtures::thue_morse();
  Morphism tm_rev = reversed(tm);
  CHECK(tm_rev.image(0).str() == "10");
  CHECK(tm_rev.image(1).str() == "01");

  Morphism id = parse_morphism("a->a;b->b");
  CHECK(reversed(id) == id);
}

TEST_CASE("incidence matrices") {
  Morphism tm = fixtures::thue_morse();
  IncidenceMatrix m = incidence_matrix(tm);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 1);

  Morphism id = parse_morphism("a->a;b->b");
  IncidenceMatrix mi = incidence_matrix(id);
  CHECK(mi.at(0, 0) == 1);
  CHECK(mi.at(0, 1) == 0);
  CHECK(mi.at(1, 0) == 0);
  CHECK(mi.at(1, 1) == 1);

  Morphism fib = fixtures::fibonacci();
  IncidenceMatrix mf = incidence_matrix(fib);
  CHECK(mf.at(0, 0) == 1);
  CHECK(mf.at(0, 1) == 1);
  CHECK(mf.at(1, 0) == 1);
  CHECK(mf.at(1, 1) == 0);

  Rng rng(202);
  AlphabetPtr abc = Alphabet::of("abc");
  for (int i = 0; i < 100; ++i) {
    Morphism f = rng.random_morphism(abc, 0, 3);
    Morphism g = rng.random_morphism(abc, 0, 3);
    CHECK(incidence_matrix(compose(f, g)) ==
          multiply(incidence_matrix(f), incidence_matrix(g)));

    // |f(w)| is the contraction of column sums with the letter counts of w
    Word w = rng.random_word(abc, rng.below(8));
    auto counts = letter_counts(w, 3);
    IncidenceMatrix mat = incidence_matrix(f);
    std::uint64_t predicted = 0;
    for (std::size_t col = 0; col < 3; ++col)
      for (std::size_t row = 0; row < 3; ++row) predicted += mat.at(row, col) * counts[col];
    CHECK(predicted == f(w).size());
  }
}

TEST_CASE("erasing and cyclic classification") {
  CHECK_FALSE(is_erasing(fixtures::thue_morse()));
  CHECK(is_erasing(parse_morphism("a->;b->ab")));
  CHECK_FALSE(is_erasing(fixtures::chain(3)));

  auto root = cyclic_root(parse_morphism("a->abab;b->ab"));
  REQUIRE(root.has_value());
  CHECK(root->str() == "ab");

  CHECK_FALSE(cyclic_root(fixtures::binary_periodic()).has_value());

  root = cyclic_root(parse_morphism("a->;b->"));
  REQUIRE(root.has_value());
  CHECK(root->empty());
}

TEST_CASE("primitivity via boolean reachability") {
  CHECK(is_primitive(fixtures::thue_morse()));
  CHECK(is_primitive(fixtures::fibonacci()));
  CHECK_FALSE(is_primitive(fixtures::nonprimitive_padded()));
  CHECK_FALSE(is_primitive(parse_morphism("a->a;b->b")));
  CHECK(is_primitive(fixtures::ternary_periodic()));
  CHECK_FALSE(is_primitive(parse_morphism("a->ab;b->")));
}

TEST_CASE("injectivity via unique decodability") {
  CHECK(is_injective(fixtures::thue_morse()));
  CHECK_FALSE(is_injective(parse_morphism("a->ab;b->a;c->ba")));
  CHECK_FALSE(is_injective(parse_morphism("a->a;b->a")));
  CHECK_THROWS_AS(is_injective(parse_morphism("a->ab;b->")), std::invalid_argument);

  // agreement with exhaustive collision search at small sizes
  Rng rng(203);
  AlphabetPtr abc = Alphabet::of("abc");
  int non_injective_seen = 0;
  for (int i = 0; i < 150; ++i) {
    Morphism m = rng.random_morphism(abc, 1, 4);
    bool decided = is_injective(m);
    auto collision = collision_up_to(m, 6);
    if (collision) {
      CHECK_FALSE(decided);
      CHECK(m(collision->first) == m(collision->second));
      ++non_injective_seen;
    }
    if (decided) CHECK_FALSE(collision.has_value());
  }
  CHECK(non_injective_seen > 10);
}

TEST_CASE("prolongable letters") {
  Morphism tm = fixtures::thue_morse();
  CHECK(prolongable_letters(tm) == std::vector<std::uint8_t>{0, 1});
  CHECK(prolongable_letters(fixtures::fibonacci()) == std::vector<std::uint8_t>{0});
  CHECK(prolongable_letters(parse_morphism("a->ba;b->ab")).empty());
}

TEST_CASE("fixed point prefixes") {
  Morphism tm = fixtures::thue_morse();
  CHECK(fixed_point_prefix(tm, 0, 8).str() == "01101001");
  CHECK(fixed_point_prefix(tm, 0, 0).str() == "");
  CHECK(fixed_point_prefix(fixtures::fibonacci(), 0, 8).str() == "01001010");
  CHECK_THROWS_AS(fixed_point_prefix(tm, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_prefix(fixtures::fibonacci(), 1, 4), std::invalid_argument);

  // a stalling expansion is a finite fixed point, not an infinite word
  CHECK_THROWS_AS(fixed_point_prefix(parse_morphism("a->ab;b->"), 0, 5), std::invalid_argument);

  Rng rng(204);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = rng.below(40), mlen = rng.between(n, n + 40);
    Word shorter = fixed_point_prefix(tm, 1, n);
    Word longer = fixed_point_prefix(tm, 1, mlen);
    CHECK(longer.prefix(n) == shorter);
  }
}

TEST_CASE("periodicity certificates") {
  Morphism ternary = fixtures::ternary_periodic();
  auto cert = periodicity_certificate(ternary, 0);
  REQUIRE(cert.periodic);
  CHECK(cert.period_word->str() == "abc");
  CHECK(cert.power == 5);
  CHECK(cert.exact);

  cert = periodicity_certificate(fixtures::thue_morse(), 0);
  CHECK_FALSE(cert.periodic);
  CHECK(cert.exact);

  Morphism mirror = fixtures::binary_periodic();
  cert = periodicity_certificate(mirror, 0);
  REQUIRE(cert.periodic);
  CHECK(cert.period_word->str() == "ab");
  CHECK(cert.power == 3);

  cert = periodicity_certificate(fixtures::fibonacci(), 0);
  CHECK_FALSE(cert.periodic);

  CHECK_THROWS_AS(periodicity_certificate(fixtures::fibonacci(), 1), std::invalid_argument);
}

TEST_CASE("fixed points of a primitive morphism share their language") {
  Morphism tm = fixtures::thue_morse();
  Word from0 = fixed_point_prefix(tm, 0, 4096);
  Word from1 = fixed_point_prefix(tm, 1, 4096);
  for (std::size_t len = 1; len <= 6; ++len) {
    std::set<Word> f0, f1;
    for (std::size_t pos = 0; pos + len <= 2048; ++pos) {
      f0.insert(from0.subword(pos, len));
      f1.insert(from1.subword(pos, len));
    }
    CHECK(f0 == f1);
  }
}
