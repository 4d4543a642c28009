#include <doctest.h>

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/report.hpp"
#include "support/fixtures.hpp"
#include "support/palindrome_oracle.hpp"

using namespace palimorph;
using fixtures::Rng;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(std::vector<std::string> args, int expect_code = 0) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  CHECK(code == expect_code);
  return out.str();
}

}  // namespace

TEST_CASE("criterion 01: binary doubling fixture fails all five conditions, its square passes with p = \"\"") {
  auto start = std::chrono::steady_clock::now();

  Morphism tm = fixtures::thue_morse();
  ClassPReport rep = class_p_conjugacy_report(tm);
  CHECK_FALSE(rep.half_shift_in_class_p);
  CHECK_FALSE(rep.has_class_p_conjugate);
  CHECK_FALSE(rep.conjugate_to_reversal);
  CHECK_FALSE(rep.extremes_mirrored);
  CHECK_FALSE(rep.word_and_heads_palindromic);

  Morphism tm2 = power(tm, 2);
  ClassPReport rep2 = class_p_conjugacy_report(tm2);
  CHECK(rep2.all_conditions());
  REQUIRE(rep2.witness.has_value());
  CHECK(rep2.witness_p->str() == "");
  CHECK(rep2.witness->image(0).str() == "0110");
  CHECK(rep2.witness->image(1).str() == "1001");

  HksVerdict verdict = hks_verify(tm);
  CHECK(verdict.power == 2);
  CHECK(verdict.palindromic);

  CHECK(seconds_since(start) < 0.1);
}

TEST_CASE("criterion 02: every chain member reports leftmost chain7, rightmost chain1, word babbab") {
  const std::string expected =
      "leftmost:       a -> abbab, b -> bab\n"
      "rightmost:      a -> babba, b -> bab\n"
      "conjugate word: babbab\n";
  for (int i = 1; i <= 7; ++i) {
    Morphism m = fixtures::chain(i);
    std::string out = run_cli({"conjugates", format_morphism(m)});
    CHECK(out.find(expected) != std::string::npos);

    ConjugacyExtremes ext = conjugacy_extremes(m);
    CHECK(ext.leftmost == fixtures::chain(7));
    CHECK(ext.rightmost == fixtures::chain(1));
    CHECK(ext.w.str() == "babbab");
  }
}

TEST_CASE("criterion 03: witness construction lands on the third right shift with p = \"\"") {
  // shift trace from the leftmost end: chain7 -> chain6 -> chain5 -> chain4
  Morphism at = fixtures::chain(7);
  for (int expected : {6, 5, 4}) {
    auto step = shift_right_once(at);
    REQUIRE(step.has_value());
    at = step->first;
    CHECK(at == fixtures::chain(expected));
  }

  ClassPReport rep = class_p_conjugacy_report(fixtures::chain(3));
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == fixtures::chain(4));
  CHECK(rep.witness->image(0).str() == "babab");
  CHECK(rep.witness->image(1).str() == "bab");
  CHECK(is_class_p(*rep.witness, false).in_class_p);
  CHECK(rep.witness_p->str() == "");
  CHECK(rep.w.str() == "babbab");
  CHECK(is_palindrome(rep.w));
}

TEST_CASE("criterion 04: markedness of the worked fixtures, with well-marked power 2 for the doubling fixture") {
  MarkednessReport chain3 = markedness(fixtures::chain(3));
  CHECK(chain3.marked);
  CHECK(chain3.well_marked);

  Morphism tm = fixtures::thue_morse();
  MarkednessReport tm_report = markedness(tm);
  CHECK(tm_report.marked);
  CHECK_FALSE(tm_report.well_marked);
  auto [k, wm] = well_marked_power(tm);
  CHECK(k == 2);
  CHECK(wm == power(tm, 2));
}

TEST_CASE("criterion 05: periodic ternary fixture certifies period abc to the fifth and is not palindromic") {
  Morphism ternary = fixtures::ternary_periodic();
  PeriodicityCertificate cert = periodicity_certificate(ternary, 0);
  REQUIRE(cert.periodic);
  CHECK(cert.period_word->str() == "abc");
  CHECK(cert.power == 5);

  HksVerdict verdict = hks_verify(ternary);
  CHECK_FALSE(verdict.palindromic);
  std::string out = run_cli({"hks", "a->abcabcab;b->cabca;c->bc"});
  CHECK(out.find("palindromic: no") != std::string::npos);
}

TEST_CASE("criterion 06: periodic binary fixture is acyclic, fixes (ab) repeated, and lies in class P") {
  Morphism mirror = fixtures::binary_periodic();
  CHECK_FALSE(is_cyclic(mirror));

  PeriodicityCertificate cert = periodicity_certificate(mirror, 0);
  REQUIRE(cert.periodic);
  CHECK(cert.period_word->str() == "ab");
  Word prefix = fixed_point_prefix(mirror, 0, 64);
  CHECK(prefix == repeat(Word::parse(mirror.alphabet(), "ab"), 32));

  HksVerdict verdict = hks_verify(mirror);
  CHECK(verdict.palindromic);
  REQUIRE(verdict.conjugate_witness.has_value());
  CHECK(*verdict.conjugate_witness == mirror);
  CHECK(is_class_p(mirror, false).in_class_p);
}

TEST_CASE("criterion 07: five-way equivalence over 500 random acyclic non-erasing morphisms") {
  auto start = std::chrono::steady_clock::now();
  Rng rng(711);
  int accepted = 0;
  int agreement = 0;
  while (accepted < 500) {
    std::size_t d = rng.between(2, 4);
    AlphabetPtr alphabet = Alphabet::of(std::string("abcd").substr(0, d));
    Morphism m = rng.random_morphism(alphabet, 1, 5);
    if (is_cyclic(m)) continue;
    ++accepted;
    ClassPReport rep = class_p_conjugacy_report(m);
    bool c1 = rep.half_shift_in_class_p;
    if (c1 == rep.has_class_p_conjugate && c1 == rep.conjugate_to_reversal &&
        c1 == rep.extremes_mirrored && c1 == rep.word_and_heads_palindromic)
      ++agreement;
  }
  CHECK(accepted == 500);
  CHECK(agreement == 500);  // 100% pairwise agreement
  CHECK(seconds_since(start) < 30.0);
}

TEST_CASE("criterion 08: word property suites pass 10000 randomized instances each") {
  auto start = std::chrono::steady_clock::now();
  AlphabetPtr ab = Alphabet::of("ab");

  // palindrome-product conjugates
  {
    Rng rng(811);
    int done = 0;
    while (done < 10000) {
      Word u = rng.random_palindrome(ab, rng.below(4), rng.below(2) == 1);
      Word v = rng.random_palindrome(ab, rng.below(4), rng.below(2) == 1);
      Word vu = v + u;
      if (vu.empty()) continue;
      std::size_t ell = rng.below(3);
      bool first_form = rng.below(2) == 0;
      std::size_t k = first_form ? u.size() + (v.size() + 1) / 2 + ell * vu.size()
                                 : (u.size() + 1) / 2 + ell * vu.size();
      std::size_t relevant = first_form ? v.size() : u.size();
      Word rotated = kth_right_conjugate(vu, k);
      if (relevant % 2 == 0) {
        CHECK(is_palindrome(rotated));
      } else {
        CHECK(is_palindrome(rotated.subword(1, rotated.size() - 1)));
      }
      ++done;
    }
  }

  // overlap equation equivalences
  {
    Rng rng(812);
    int done = 0;
    while (done < 10000) {
      bool palindromic = rng.below(2) == 0;
      Word u = palindromic ? rng.random_palindrome(ab, rng.below(3), rng.below(2) == 1)
                           : rng.random_word(ab, rng.below(4));
      Word v = palindromic ? rng.random_palindrome(ab, rng.below(3), rng.below(2) == 1)
                           : rng.random_word(ab, rng.below(4));
      if (u.empty() && v.empty()) continue;
      Word x = u + v;
      Word w = repeat(x, rng.below(3)) + u;
      Word y = v + u;
      auto rep = overlap_palindrome_report(x, w, y);
      CHECK(rep.ends_mirrored == rep.parts_palindromic);
      CHECK(rep.ends_mirrored == rep.left_product_palindromic);
      CHECK(rep.ends_mirrored == rep.full_product_palindromic);
      if (rep.ends_mirrored) CHECK(rep.overlap_palindromic);
      if (w.size() >= x.size()) CHECK(rep.overlap_palindromic == rep.ends_mirrored);
      ++done;
    }
  }

  // two-period words collapse to a common root
  {
    Rng rng(813);
    int done = 0;
    while (done < 10000) {
      Word z = rng.random_word(ab, rng.between(1, 4));
      Word u = repeat(z, rng.between(1, 3));
      Word v = rng.below(4) == 0 ? rng.random_word(ab, rng.between(1, 6))
                                 : repeat(z, rng.between(1, 3));
      std::size_t bound = u.size() + v.size() - std::gcd(u.size(), v.size());
      Word up = repeat(u, bound / u.size() + 1);
      Word vp = repeat(v, bound / v.size() + 1);
      std::size_t common = 0;
      while (common < std::min(up.size(), vp.size()) && up[common] == vp[common]) ++common;
      if (common < bound) continue;
      CHECK(primitive_root(u).root == primitive_root(v).root);
      ++done;
    }
  }

  CHECK(seconds_since(start) < 30.0);
}

TEST_CASE("criterion 09: step-map orbit reaches every bispecial between the seed bound and 60") {
  struct Case {
    Morphism m;
    std::uint8_t start;
  };
  for (const auto& c :
       {Case{power(fixtures::thue_morse(), 2), 0}, Case{fixtures::chain(3), 1}}) {
    BispecialOrbit orbit = bispecial_orbit(c.m, 60);
    FactorIndex idx = build_factor_index(c.m, c.start, 61);
    REQUIRE(idx.certified);
    std::set<Word> bispecial = special_factors(idx, 60).bispecial;

    std::set<Word> reachable = orbit.initial;
    for (const auto& [from, to] : orbit.orbit) reachable.insert(to);

    std::size_t misses = 0;
    for (const Word& u : bispecial) {
      if (u.size() <= orbit.seed_bound || u.size() > 60) continue;
      if (!reachable.count(u)) ++misses;
    }
    CHECK(misses == 0);
  }
}

TEST_CASE("criterion 10: palindrome tree census equals the expansion oracle on 100000-letter prefixes") {
  auto start = std::chrono::steady_clock::now();
  for (const Morphism& m : {fixtures::thue_morse(), fixtures::fibonacci()}) {
    Word prefix = fixed_point_prefix(m, 0, 100000);
    PalindromeCensus census = palindrome_census(prefix);
    CHECK(census.count_by_length == oracle::distinct_palindromes_by_length(prefix));
  }
  CHECK(seconds_since(start) < 5.0);
}

TEST_CASE("criterion 11: literal and strict membership split on the golden-ratio fixture and the report says so") {
  Morphism fib = fixtures::fibonacci();
  ClassPMembership literal = is_class_p(fib, false);
  CHECK(literal.in_class_p);
  CHECK(literal.witness_p->str() == "0");
  CHECK_FALSE(is_class_p(fib, true).in_class_p);

  cli::Json report = cli::analysis_report(fib);
  CHECK(report["class_p"]["literal"]["member"] == true);
  CHECK(report["class_p"]["literal"]["p"] == "0");
  CHECK(report["class_p"]["strict"]["member"] == false);
  CHECK(report["class_p"]["literal_vs_strict_differ"] == true);

  std::string out = run_cli({"classp", "0->01;1->0"});
  CHECK(out.find("note: literal and strict class P membership differ") != std::string::npos);
}
