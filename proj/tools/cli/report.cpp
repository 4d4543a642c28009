#include "cli/report.hpp"

#include <sstream>

namespace palimorph::cli {

namespace {

Json membership_json(const ClassPMembership& membership) {
  Json out;
  out["member"] = membership.in_class_p;
  out["p"] = membership.witness_p ? Json(membership.witness_p->str()) : Json(nullptr);
  return out;
}

Json class_p_modes_json(const Morphism& m) {
  ClassPMembership literal = is_class_p(m, false);
  ClassPMembership strict = is_class_p(m, true);
  ClassPMembership suffix = is_class_p_suffix_form(m);
  Json out;
  out["literal"] = membership_json(literal);
  out["strict"] = membership_json(strict);
  out["suffix_form"] = membership_json(suffix);
  out["literal_vs_strict_differ"] = literal.in_class_p != strict.in_class_p;
  out["literal_vs_suffix_form_differ"] = literal.in_class_p != suffix.in_class_p;
  return out;
}

std::string letters_string(const Morphism& m, const std::vector<std::uint8_t>& letters) {
  std::string out;
  for (std::uint8_t a : letters) out.push_back(m.alphabet()->letter(a));
  return out;
}

}  // namespace

std::string arrow_format(const Morphism& m) {
  std::string out;
  for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
    if (a) out += ", ";
    out += m.alphabet()->letter(static_cast<std::uint8_t>(a));
    out += " -> ";
    out += m.image(static_cast<std::uint8_t>(a)).str();
  }
  return out;
}

Json analysis_report(const Morphism& m, const ReportOptions& options) {
  Json report;
  std::vector<std::string> notes;

  report["spec"] = format_morphism(m);
  report["alphabet"] = m.alphabet()->letters();

  bool erasing = is_erasing(m);
  std::optional<Word> root = cyclic_root(m);
  bool primitive = is_primitive(m);

  Json classification;
  classification["erasing"] = erasing;
  classification["cyclic"] = root.has_value();
  classification["cyclic_root"] = root ? Json(root->str()) : Json(nullptr);
  classification["primitive"] = primitive;
  if (erasing) {
    classification["injective"] = nullptr;
    notes.push_back("injectivity is not decided for erasing morphisms");
  } else {
    classification["injective"] = is_injective(m);
  }
  classification["prolongable"] = letters_string(m, prolongable_letters(m));

  Json conjugacy(nullptr);
  Json class_p_conjugacy(nullptr);
  std::optional<MarkednessReport> mark;
  std::optional<unsigned> wm_power;
  if (!erasing && !root) {
    ConjugacyExtremes ext = conjugacy_extremes(m);
    conjugacy = Json::object();
    conjugacy["leftmost"] = format_morphism(ext.leftmost);
    conjugacy["rightmost"] = format_morphism(ext.rightmost);
    conjugacy["word"] = ext.w.str();
    conjugacy["left_shift"] = ext.left_shift.str();
    conjugacy["right_shift"] = ext.right_shift.str();

    mark = markedness(m);
    if (mark->marked) wm_power = well_marked_power(m).first;

    ClassPReport rep = class_p_conjugacy_report(m);
    class_p_conjugacy = Json::object();
    Json conditions;
    conditions["half_shift_in_class_p"] = rep.half_shift_in_class_p;
    conditions["has_class_p_conjugate"] = rep.has_class_p_conjugate;
    conditions["conjugate_to_reversal"] = rep.conjugate_to_reversal;
    conditions["extremes_mirrored"] = rep.extremes_mirrored;
    conditions["word_and_heads_palindromic"] = rep.word_and_heads_palindromic;
    class_p_conjugacy["conditions"] = conditions;
    class_p_conjugacy["word"] = rep.w.str();
    class_p_conjugacy["larger_letters"] = letters_string(m, rep.larger_letters);
    Json heads = Json::object();
    for (const auto& [letter, head] : rep.image_heads)
      heads[std::string(1, m.alphabet()->letter(letter))] = head.str();
    class_p_conjugacy["image_heads"] = heads;
    class_p_conjugacy["witness"] = rep.witness ? Json(format_morphism(*rep.witness)) : Json(nullptr);
    class_p_conjugacy["witness_p"] = rep.witness_p ? Json(rep.witness_p->str()) : Json(nullptr);
  } else {
    notes.push_back(erasing ? "conjugacy analysis skipped: erasing morphism"
                            : "conjugacy analysis skipped: cyclic morphism (leftmost and "
                              "rightmost conjugates need an acyclic morphism)");
  }
  classification["marked"] = mark ? Json(mark->marked) : Json(nullptr);
  classification["well_marked"] = mark ? Json(mark->well_marked) : Json(nullptr);
  classification["well_marked_power"] = wm_power ? Json(*wm_power) : Json(nullptr);
  report["classification"] = classification;
  report["conjugacy"] = conjugacy;
  report["class_p"] = class_p_modes_json(m);
  report["class_p_conjugacy"] = class_p_conjugacy;

  Json hks(nullptr);
  Json hks_reason(nullptr);
  try {
    HksVerdict verdict = hks_verify(m);
    hks = Json::object();
    hks["palindromic"] = verdict.palindromic;
    hks["power"] = verdict.power;
    hks["witness"] =
        verdict.conjugate_witness ? Json(format_morphism(*verdict.conjugate_witness)) : Json(nullptr);
    hks["witness_p"] = verdict.class_p_p ? Json(verdict.class_p_p->str()) : Json(nullptr);
    if (verdict.conjugate_witness) {
      hks["witness_class_p_literal"] = is_class_p(*verdict.conjugate_witness, false).in_class_p;
      hks["witness_class_p_strict"] = is_class_p(*verdict.conjugate_witness, true).in_class_p;
    } else {
      hks["witness_class_p_literal"] = nullptr;
      hks["witness_class_p_strict"] = nullptr;
    }
    if (verdict.periodic_case && verdict.periodic_case->periodic) {
      Json periodic;
      periodic["period"] = verdict.periodic_case->period_word->str();
      periodic["power"] = verdict.periodic_case->power;
      periodic["exact"] = verdict.periodic_case->exact;
      hks["periodic"] = periodic;
    } else {
      hks["periodic"] = nullptr;
    }
  } catch (const std::invalid_argument& e) {
    hks_reason = std::string(e.what());
  }
  report["hks"] = hks;
  report["hks_reason"] = hks_reason;

  Json factors(nullptr);
  if (options.with_factors) {
    auto starts = prolongable_letters(m);
    if (starts.empty() || erasing) {
      notes.push_back("factor statistics skipped: no fixed point to analyze");
    } else {
      FactorIndex idx =
          build_factor_index(m, starts[0], options.factor_len + 1, options.prefix_len);
      SpecialFactors specials = special_factors(idx, options.factor_len);
      factors = Json::object();
      factors["start_letter"] = std::string(1, m.alphabet()->letter(starts[0]));
      factors["certified"] = idx.certified;
      factors["max_len"] = options.factor_len;
      std::vector<std::size_t> counts(options.factor_len + 1, 0);
      for (const Word& f : idx.factors)
        if (f.size() <= options.factor_len) ++counts[f.size()];
      factors["counts_by_length"] = counts;
      factors["left_special"] = specials.left.size();
      factors["right_special"] = specials.right.size();
      factors["bispecial"] = specials.bispecial.size();
      PalindromeCensus census = palindrome_census(idx);
      factors["palindromes_total"] = census.total();
      factors["palindromes_by_length"] = census.count_by_length;
    }
  }
  report["factors"] = factors;
  report["notes"] = notes;
  return report;
}

namespace {

std::string yesno(const Json& v) {
  if (v.is_null()) return "-";
  return v.get<bool>() ? "yes" : "no";
}

std::string quoted(const Json& v) {
  if (v.is_null()) return "-";
  return "\"" + v.get<std::string>() + "\"";
}

void membership_line(std::ostringstream& out, const char* label, const Json& mode) {
  out << label << yesno(mode["member"]);
  if (!mode["p"].is_null()) out << "  p = " << quoted(mode["p"]);
  out << "\n";
}

}  // namespace

std::string human_report(const Json& report) {
  std::ostringstream out;
  const Json& cls = report["classification"];
  out << "morphism:        " << arrow_format(parse_morphism(report["spec"].get<std::string>()))
      << "\n";
  out << "alphabet:        " << report["alphabet"].get<std::string>() << "\n";
  out << "erasing:         " << yesno(cls["erasing"]) << "\n";
  out << "cyclic:          " << yesno(cls["cyclic"]);
  if (!cls["cyclic_root"].is_null()) out << "  root = " << quoted(cls["cyclic_root"]);
  out << "\n";
  out << "primitive:       " << yesno(cls["primitive"]) << "\n";
  out << "injective:       " << yesno(cls["injective"]) << "\n";
  out << "prolongable:     " << (cls["prolongable"].get<std::string>().empty()
                                     ? "-"
                                     : cls["prolongable"].get<std::string>())
      << "\n";
  out << "marked:          " << yesno(cls["marked"]) << "\n";
  out << "well-marked:     " << yesno(cls["well_marked"]);
  if (!cls["well_marked_power"].is_null())
    out << "  (well-marked power " << cls["well_marked_power"].get<unsigned>() << ")";
  out << "\n";

  if (!report["conjugacy"].is_null()) {
    const Json& conj = report["conjugacy"];
    out << "leftmost:        " << arrow_format(parse_morphism(conj["leftmost"].get<std::string>()))
        << "\n";
    out << "rightmost:       " << arrow_format(parse_morphism(conj["rightmost"].get<std::string>()))
        << "\n";
    out << "conjugate word:  " << quoted(conj["word"]) << "\n";
  }

  const Json& modes = report["class_p"];
  membership_line(out, "class P literal: ", modes["literal"]);
  membership_line(out, "class P strict:  ", modes["strict"]);
  membership_line(out, "class P suffix:  ", modes["suffix_form"]);
  if (modes["literal_vs_strict_differ"].get<bool>())
    out << "note: literal and strict class P membership differ\n";
  if (modes["literal_vs_suffix_form_differ"].get<bool>())
    out << "note: literal and suffix-form class P membership differ\n";

  if (!report["class_p_conjugacy"].is_null()) {
    const Json& rep = report["class_p_conjugacy"];
    const Json& c = rep["conditions"];
    out << "conditions:      (1) " << yesno(c["half_shift_in_class_p"]) << "  (2) "
        << yesno(c["has_class_p_conjugate"]) << "  (3) " << yesno(c["conjugate_to_reversal"])
        << "  (4) " << yesno(c["extremes_mirrored"]) << "  (5) "
        << yesno(c["word_and_heads_palindromic"]) << "\n";
    if (!rep["witness"].is_null()) {
      out << "witness:         " << arrow_format(parse_morphism(rep["witness"].get<std::string>()))
          << "\n";
      out << "witness p:       " << quoted(rep["witness_p"]) << "\n";
    }
  }

  if (!report["hks"].is_null()) {
    const Json& hks = report["hks"];
    out << "palindromic:     " << yesno(hks["palindromic"]) << "  (power "
        << hks["power"].get<unsigned>() << ")\n";
    if (!hks["witness"].is_null()) {
      out << "hks witness:     " << arrow_format(parse_morphism(hks["witness"].get<std::string>()))
          << "  p = " << quoted(hks["witness_p"]) << "\n";
    }
    if (!hks["periodic"].is_null()) {
      out << "periodic:        period " << quoted(hks["periodic"]["period"]) << ", image power "
          << hks["periodic"]["power"].get<unsigned>() << "\n";
    }
  } else if (!report["hks_reason"].is_null()) {
    out << "palindromic:     not decided (" << report["hks_reason"].get<std::string>() << ")\n";
  }

  if (!report["factors"].is_null()) {
    const Json& f = report["factors"];
    out << "factors:         up to length " << f["max_len"].get<std::size_t>()
        << (f["certified"].get<bool>() ? " (certified)" : " (scraped)") << "\n";
    out << "  counts:        ";
    for (std::size_t i = 0; i < f["counts_by_length"].size(); ++i) {
      if (i) out << " ";
      out << f["counts_by_length"][i].get<std::size_t>();
    }
    out << "\n";
    out << "  special:       left " << f["left_special"].get<std::size_t>() << ", right "
        << f["right_special"].get<std::size_t>() << ", bispecial "
        << f["bispecial"].get<std::size_t>() << "\n";
    out << "  palindromes:   " << f["palindromes_total"].get<std::size_t>() << "\n";
  }

  for (const auto& note : report["notes"]) out << "note: " << note.get<std::string>() << "\n";
  return out.str();
}

}  // namespace palimorph::cli
