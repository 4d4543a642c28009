#ifndef PALIMORPH_CLI_REPORT_HPP
#define PALIMORPH_CLI_REPORT_HPP

#include <json.hpp>
#include <string>

#include "palimorph/classp.hpp"
#include "palimorph/factors.hpp"
#include "palimorph/morphism_text.hpp"

namespace palimorph::cli {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool with_factors = false;
  std::size_t factor_len = 8;      // bound for the optional factor statistics
  std::size_t prefix_len = 20000;  // scrape length for non-certified fallbacks
};

/// The full structured analysis of one morphism.  Every morphism embedded in
/// the result is in the parseable rule format, and fields that do not apply
/// (for example conjugacy data of a cyclic morphism) are null, with the cause
/// listed under "notes".
Json analysis_report(const Morphism& m, const ReportOptions& options = {});

/// Arrow notation for display: `a -> babba, b -> bab`.
std::string arrow_format(const Morphism& m);

/// Aligned plain-text rendering of an analysis report.
std::string human_report(const Json& report);

}  // namespace palimorph::cli

#endif
