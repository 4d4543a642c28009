#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli/report.hpp"

namespace palimorph::cli {

namespace {

constexpr int kOk = 0;
constexpr int kAssertFailed = 1;
constexpr int kBadInput = 2;

std::uint8_t parse_letter(const Morphism& m, const std::string& letter) {
  if (letter.size() != 1)
    throw std::invalid_argument("--letter expects a single symbol");
  auto idx = m.alphabet()->index_of(letter[0]);
  if (!idx) throw std::invalid_argument("letter '" + letter + "' is not in the alphabet");
  return *idx;
}

std::uint8_t pick_start_letter(const Morphism& m, const std::string& letter) {
  if (!letter.empty()) return parse_letter(m, letter);
  auto starts = prolongable_letters(m);
  if (starts.empty())
    throw std::invalid_argument("morphism has no prolongable letter; pass --letter explicitly");
  return starts[0];
}

void emit(std::ostream& out, bool as_json, const Json& json, const std::string& text) {
  if (as_json)
    out << json.dump(2) << "\n";
  else
    out << text;
}

int cmd_analyze(const std::string& spec, bool as_json, std::size_t factor_len,
                std::ostream& out) {
  Morphism m = parse_morphism(spec);
  ReportOptions options;
  options.with_factors = factor_len > 0;
  options.factor_len = factor_len;
  Json report = analysis_report(m, options);
  emit(out, as_json, report, human_report(report));
  return kOk;
}

int cmd_conjugates(const std::string& spec, bool as_json, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  ConjugacyExtremes ext = conjugacy_extremes(m);
  if (as_json) {
    Json json;
    json["input"] = format_morphism(m);
    json["leftmost"] = format_morphism(ext.leftmost);
    json["rightmost"] = format_morphism(ext.rightmost);
    json["word"] = ext.w.str();
    json["left_shift"] = ext.left_shift.str();
    json["right_shift"] = ext.right_shift.str();
    out << json.dump(2) << "\n";
  } else {
    out << "input:          " << arrow_format(m) << "\n"
        << "leftmost:       " << arrow_format(ext.leftmost) << "\n"
        << "rightmost:      " << arrow_format(ext.rightmost) << "\n"
        << "conjugate word: " << ext.w.str() << "\n"
        << "left shift:     " << ext.left_shift.str() << "\n"
        << "right shift:    " << ext.right_shift.str() << "\n";
  }
  return kOk;
}

int cmd_classp(const std::string& spec, bool as_json, bool do_assert, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  ClassPReport rep = class_p_conjugacy_report(m);  // rejects cyclic/erasing input
  Json report = analysis_report(m);
  Json json;
  json["spec"] = format_morphism(m);
  json["class_p"] = report["class_p"];
  json["class_p_conjugacy"] = report["class_p_conjugacy"];
  if (as_json) {
    out << json.dump(2) << "\n";
  } else {
    std::ostringstream text;
    text << "morphism:        " << arrow_format(m) << "\n";
    const Json& modes = json["class_p"];
    auto mode_line = [&](const char* label, const Json& mode) {
      text << label << (mode["member"].get<bool>() ? "yes" : "no");
      if (!mode["p"].is_null()) text << "  p = \"" << mode["p"].get<std::string>() << "\"";
      text << "\n";
    };
    mode_line("class P literal: ", modes["literal"]);
    mode_line("class P strict:  ", modes["strict"]);
    mode_line("class P suffix:  ", modes["suffix_form"]);
    if (modes["literal_vs_strict_differ"].get<bool>())
      text << "note: literal and strict class P membership differ\n";
    if (modes["literal_vs_suffix_form_differ"].get<bool>())
      text << "note: literal and suffix-form class P membership differ\n";
    text << "conditions:\n"
         << "  (1) half-shift conjugate of leftmost in class P: "
         << (rep.half_shift_in_class_p ? "yes" : "no") << "\n"
         << "  (2) has a class P conjugate:                     "
         << (rep.has_class_p_conjugate ? "yes" : "no") << "\n"
         << "  (3) conjugate to its reversal:                   "
         << (rep.conjugate_to_reversal ? "yes" : "no") << "\n"
         << "  (4) leftmost mirrors rightmost:                  "
         << (rep.extremes_mirrored ? "yes" : "no") << "\n"
         << "  (5) conjugate word and image heads palindromic:  "
         << (rep.word_and_heads_palindromic ? "yes" : "no") << "\n";
    text << "conjugate word:  " << rep.w.str() << "\n";
    if (rep.witness) {
      text << "witness:         " << arrow_format(*rep.witness) << "\n";
      text << "witness p:       \"" << rep.witness_p->str() << "\"\n";
    }
    out << text.str();
  }
  if (do_assert && !rep.has_class_p_conjugate) return kAssertFailed;
  return kOk;
}

int cmd_hks(const std::string& spec, bool as_json, bool do_assert, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  HksVerdict verdict = hks_verify(m);
  Json report = analysis_report(m);
  if (as_json) {
    Json json;
    json["spec"] = format_morphism(m);
    json["hks"] = report["hks"];
    out << json.dump(2) << "\n";
  } else {
    out << "morphism:    " << arrow_format(m) << "\n";
    out << "palindromic: " << (verdict.palindromic ? "yes" : "no") << "\n";
    out << "power:       " << verdict.power << "\n";
    if (verdict.conjugate_witness) {
      out << "witness:     " << arrow_format(*verdict.conjugate_witness) << "\n";
      out << "witness p:   \"" << verdict.class_p_p->str() << "\"\n";
      out << "witness class P literal: "
          << (is_class_p(*verdict.conjugate_witness, false).in_class_p ? "yes" : "no") << "\n";
      out << "witness class P strict:  "
          << (is_class_p(*verdict.conjugate_witness, true).in_class_p ? "yes" : "no") << "\n";
    }
    if (verdict.periodic_case && verdict.periodic_case->periodic) {
      out << "periodic:    period \"" << verdict.periodic_case->period_word->str()
          << "\", image power " << verdict.periodic_case->power << "\n";
    } else {
      out << "periodic:    no\n";
    }
  }
  if (do_assert && !verdict.palindromic) return kAssertFailed;
  return kOk;
}

int cmd_fixpoint(const std::string& spec, const std::string& letter, std::size_t length,
                 bool as_json, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  std::uint8_t start = pick_start_letter(m, letter);
  Word prefix = fixed_point_prefix(m, start, length);
  if (as_json) {
    Json json;
    json["spec"] = format_morphism(m);
    json["letter"] = std::string(1, m.alphabet()->letter(start));
    json["length"] = length;
    json["prefix"] = prefix.str();
    out << json.dump(2) << "\n";
  } else {
    out << prefix.str() << "\n";
  }
  return kOk;
}

int cmd_palindromes(const std::string& spec, const std::string& letter, std::size_t length,
                    std::size_t band_width, bool as_json, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  std::uint8_t start = pick_start_letter(m, letter);
  Word prefix = fixed_point_prefix(m, start, length);
  PalindromeCensus census = palindrome_census(prefix);
  std::vector<std::size_t> bands = census.band_counts(band_width);
  std::vector<int> branch = census.tree.longest_branch();

  std::size_t longest = census.count_by_length.empty() ? 0 : census.count_by_length.size() - 1;
  if (as_json) {
    Json json;
    json["spec"] = format_morphism(m);
    json["letter"] = std::string(1, m.alphabet()->letter(start));
    json["prefix_length"] = length;
    json["distinct_palindromes"] = census.total();
    json["longest_palindrome_length"] = longest;
    json["band_width"] = band_width;
    json["band_counts"] = bands;
    json["branch_depth"] = branch.size();
    json["branch_seed"] = branch.empty() ? "" : census.tree.node_word(branch[0]).str();
    out << json.dump(2) << "\n";
  } else {
    out << "prefix length:        " << length << "\n";
    out << "distinct palindromes: " << census.total() << "\n";
    out << "longest palindrome:   " << longest << "\n";
    for (std::size_t b = 0; b < bands.size(); ++b)
      out << "band [" << (b * band_width + 1) << "-" << ((b + 1) * band_width)
          << "]: " << bands[b] << "\n";
    out << "branch depth:         " << branch.size() << "\n";
    if (!branch.empty())
      out << "branch seed:          \"" << census.tree.node_word(branch[0]).str() << "\"\n";
  }
  return kOk;
}

int cmd_bispecials(const std::string& spec, const std::string& letter, std::size_t max_len,
                   std::size_t prefix_len, bool as_json, std::ostream& out) {
  Morphism m = parse_morphism(spec);
  std::uint8_t start = pick_start_letter(m, letter);
  FactorIndex idx = build_factor_index(m, start, max_len + 1, prefix_len);
  SpecialFactors specials = special_factors(idx, max_len);

  auto degrees = [&](const Word& f) {
    std::size_t left = 0, right = 0;
    for (std::size_t a = 0; a < m.alphabet_size(); ++a) {
      Word single(f.alphabet(), {static_cast<std::uint8_t>(a)});
      if (idx.contains(single + f)) ++left;
      if (idx.contains(f + single)) ++right;
    }
    return std::make_pair(left, right);
  };

  if (as_json) {
    Json json;
    json["spec"] = format_morphism(m);
    json["max_len"] = max_len;
    json["certified"] = idx.certified;
    Json list = Json::array();
    for (const Word& f : specials.bispecial) {
      auto [left, right] = degrees(f);
      Json entry;
      entry["word"] = f.str();
      entry["length"] = f.size();
      entry["left_degree"] = left;
      entry["right_degree"] = right;
      entry["palindrome"] = is_palindrome(f);
      list.push_back(entry);
    }
    json["bispecial"] = list;
    out << json.dump(2) << "\n";
  } else {
    out << "bispecial factors up to length " << max_len
        << (idx.certified ? " (certified)" : " (scraped)") << ":\n";
    std::vector<const Word*> ordered;
    for (const Word& f : specials.bispecial) ordered.push_back(&f);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Word* a, const Word* b) { return a->size() < b->size(); });
    for (const Word* f : ordered) {
      auto [left, right] = degrees(*f);
      out << "  len " << std::setw(2) << f->size() << "  \"" << f->str() << "\"  left " << left
          << ", right " << right << (is_palindrome(*f) ? "  palindrome" : "") << "\n";
    }
  }
  return kOk;
}

struct BatchEntry {
  std::size_t line = 0;
  std::string name;
  std::string spec;
  std::string error;
  Json report;
};

int cmd_batch(const std::string& path, bool as_json, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open corpus file: " + path);

  std::vector<BatchEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    while (!view.empty() && (view.back() == ' ' || view.back() == '\t' || view.back() == '\r'))
      view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;
    BatchEntry entry;
    entry.line = line_no;
    std::size_t colon = view.find(':');
    if (colon == std::string_view::npos) {
      entry.name = std::string(view);
      entry.error = "missing ':' between name and rules";
      entries.push_back(std::move(entry));
      continue;
    }
    entry.name = std::string(view.substr(0, colon));
    while (!entry.name.empty() && entry.name.back() == ' ') entry.name.pop_back();
    entry.spec = std::string(view.substr(colon + 1));
    try {
      Morphism m = parse_morphism(entry.spec);
      entry.report = analysis_report(m);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }

  if (as_json) {
    Json json;
    Json list = Json::array();
    std::size_t failed = 0;
    for (const BatchEntry& entry : entries) {
      Json item;
      item["name"] = entry.name;
      item["line"] = entry.line;
      if (entry.error.empty()) {
        item["report"] = entry.report;
      } else {
        item["error"] = entry.error;
        ++failed;
      }
      list.push_back(std::move(item));
    }
    json["entries"] = list;
    Json summary;
    summary["total"] = entries.size();
    summary["errors"] = failed;
    json["summary"] = summary;
    out << json.dump(2) << "\n";
    return kOk;
  }

  for (const BatchEntry& entry : entries) {
    out << "== " << entry.name << " ==\n";
    if (!entry.error.empty())
      out << "error (line " << entry.line << "): " << entry.error << "\n";
    else
      out << human_report(entry.report);
    out << "\n";
  }

  auto flag = [](const Json& report, std::initializer_list<const char*> path) {
    const Json* at = &report;
    for (const char* key : path) {
      if (at->is_null()) return std::string("-");
      at = &(*at)[key];
    }
    if (at->is_null()) return std::string("-");
    return std::string(at->get<bool>() ? "yes" : "no");
  };

  out << std::left << std::setw(24) << "name" << std::setw(11) << "primitive" << std::setw(8)
      << "marked" << std::setw(13) << "classP(lit)" << "palindromic\n";
  for (const BatchEntry& entry : entries) {
    out << std::left << std::setw(24) << entry.name;
    if (!entry.error.empty()) {
      out << "error\n";
      continue;
    }
    out << std::setw(11) << flag(entry.report, {"classification", "primitive"}) << std::setw(8)
        << flag(entry.report, {"classification", "marked"}) << std::setw(13)
        << flag(entry.report, {"class_p", "literal", "member"})
        << flag(entry.report, {"hks", "palindromic"}) << "\n";
  }
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"structural analysis of free-monoid morphisms and their fixed points"};
  app.require_subcommand(1);

  std::string spec, letter, corpus;
  std::size_t length = 64, max_len = 8, band_width = 8, factor_len = 0, prefix_len = 20000;
  bool as_json = false, do_assert = false;

  auto add_common = [&](CLI::App* cmd, bool with_assert) {
    cmd->add_flag("--json", as_json, "emit the structured report");
    if (with_assert)
      cmd->add_flag("--assert", do_assert, "exit 1 when the headline property is false");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full classification report");
  analyze->add_option("spec", spec, "morphism rules, e.g. \"a->ab;b->a\"")->required();
  analyze->add_option("--factors", factor_len, "include factor statistics up to this length");
  add_common(analyze, false);

  CLI::App* conjugates = app.add_subcommand("conjugates", "leftmost/rightmost conjugates");
  conjugates->add_option("spec", spec)->required();
  add_common(conjugates, false);

  CLI::App* classp = app.add_subcommand("classp", "class P membership and conjugacy conditions");
  classp->add_option("spec", spec)->required();
  add_common(classp, true);

  CLI::App* hks = app.add_subcommand("hks", "palindromicity of the fixed-point language");
  hks->add_option("spec", spec)->required();
  add_common(hks, true);

  CLI::App* fixpoint = app.add_subcommand("fixpoint", "prefix of a fixed point");
  fixpoint->add_option("spec", spec)->required();
  fixpoint->add_option("--letter", letter, "starting letter (default: first prolongable)");
  fixpoint->add_option("--length", length, "prefix length")->required();
  add_common(fixpoint, false);

  CLI::App* palindromes = app.add_subcommand("palindromes", "palindrome census of a prefix");
  palindromes->add_option("spec", spec)->required();
  palindromes->add_option("--letter", letter);
  palindromes->add_option("--length", length, "prefix length")->required();
  palindromes->add_option("--band-width", band_width, "length band width (default 8)");
  add_common(palindromes, false);

  CLI::App* bispecials = app.add_subcommand("bispecials", "bispecial factors of the language");
  bispecials->add_option("spec", spec)->required();
  bispecials->add_option("--letter", letter);
  bispecials->add_option("--max-len", max_len, "length bound")->required();
  bispecials->add_option("--prefix", prefix_len, "scrape length for non-primitive sources");
  add_common(bispecials, false);

  CLI::App* batch = app.add_subcommand("batch", "analyze a corpus file of `name: rules` lines");
  batch->add_option("corpus", corpus, "corpus file")->required();
  add_common(batch, false);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(spec, as_json, factor_len, out);
    if (conjugates->parsed()) return cmd_conjugates(spec, as_json, out);
    if (classp->parsed()) return cmd_classp(spec, as_json, do_assert, out);
    if (hks->parsed()) return cmd_hks(spec, as_json, do_assert, out);
    if (fixpoint->parsed()) return cmd_fixpoint(spec, letter, length, as_json, out);
    if (palindromes->parsed())
      return cmd_palindromes(spec, letter, length, band_width, as_json, out);
    if (bispecials->parsed())
      return cmd_bispecials(spec, letter, max_len, prefix_len, as_json, out);
    if (batch->parsed()) return cmd_batch(corpus, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  err << "error: no subcommand\n";
  return kBadInput;
}

}  // namespace palimorph::cli
