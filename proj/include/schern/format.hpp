#pragma once

#include "schern/repring.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace schern {

enum class OutputFormat { text, csv, json };

/// Throws PreconditionError on anything but "text", "csv", "json".
OutputFormat parse_format(std::string_view name);

/// Table emitters. JSON schema "schern.table/1":
///   {"schema":"schern.table/1","case":..., "n":..,"d":..,"gcd":"2",
///    "rows":[{"weight":"2a1","coeffs":[...],"partition":[2],
///             "n_lambda":"10"|null,"dim":"36"|null,"method":"both"|null,
///             "cross_checked":true,"paper_n_lambda":"16"|null,
///             "flagged":true,"status":"ok"|"failed: ..."}],
///    "missing_paper_rows":[...]}
/// Big integers are decimal strings. CSV columns: weight,partition,n_lambda,flagged.
void write_table(std::ostream& out, const GeneratorTable& table, std::string_view case_id,
                 OutputFormat format);

void write_generators(std::ostream& out, GroupSpec spec, const std::vector<Weight>& basis,
                      OutputFormat format);

void write_case_report(std::ostream& out, const CaseReport& report, OutputFormat format);

void write_conjecture_report(std::ostream& out, const ConjectureReport& report,
                             OutputFormat format);

}  // namespace schern
