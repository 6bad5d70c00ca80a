#include "schern/format.hpp"

#include "schern/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace schern {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw PreconditionError("unknown format '" + std::string(name) + "' (text, csv, json)");
}

namespace {

std::string group_name(GroupSpec spec) {
  if (spec.d == 1) return "SL" + std::to_string(spec.n);
  if (spec.d == spec.n) return "PGL" + std::to_string(spec.n);
  return "SL" + std::to_string(spec.n) + "/mu" + std::to_string(spec.d);
}

std::vector<int> to_vector(std::span<const int> values) {
  return {values.begin(), values.end()};
}

ordered_json bigint_or_null(const std::optional<BigInt>& value) {
  return value ? ordered_json(value->str()) : ordered_json(nullptr);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string row_note(const GeneratorRow& row) {
  if (!row.ok()) return "FAILED: " + row.failure;
  if (row.flagged) return "flagged: printed " + row.paper_value->str();
  if (!row.paper_value) return "";
  return "matches printed";
}

void write_text_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(widths[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

}  // namespace

void write_table(std::ostream& out, const GeneratorTable& table, std::string_view case_id,
                 OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      out << "weight,partition,n_lambda,flagged\n";
      for (const auto& row : table.rows) {
        out << row.weight.to_string() << ',' << csv_quote(row.partition.to_string()) << ','
            << (row.ok() ? row.result->n_lambda.str() : "") << ','
            << (row.flagged ? "true" : "false") << '\n';
      }
      return;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["schema"] = "schern.table/1";
      j["case"] = std::string(case_id);
      j["n"] = table.spec.n;
      j["d"] = table.spec.d;
      j["gcd"] = table.gcd.str();
      j["rows"] = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json r;
        r["weight"] = row.weight.to_string();
        r["coeffs"] = to_vector(row.weight.coeffs());
        r["partition"] = to_vector(row.partition.parts());
        if (row.ok()) {
          r["n_lambda"] = row.result->n_lambda.str();
          r["dim"] = row.result->dim.str();
          r["method"] = std::string(to_string(row.result->method));
          r["cross_checked"] = row.result->cross_checked;
        } else {
          r["n_lambda"] = nullptr;
          r["dim"] = nullptr;
          r["method"] = nullptr;
          r["cross_checked"] = false;
        }
        r["paper_n_lambda"] = bigint_or_null(row.paper_value);
        r["flagged"] = row.flagged;
        r["status"] = row.ok() ? std::string("ok") : "failed: " + row.failure;
        j["rows"].push_back(std::move(r));
      }
      j["missing_paper_rows"] = ordered_json::array();
      for (const auto& printed : table.missing_paper_rows) {
        j["missing_paper_rows"].push_back({{"coeffs", printed.coeffs},
                                           {"partition", to_vector(printed.partition.parts())},
                                           {"n_lambda", printed.n_lambda.str()}});
      }
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::text: break;
  }

  out << group_name(table.spec) << ": " << table.rows.size() << " generators, gcd "
      << table.gcd.str() << '\n';
  std::vector<std::vector<std::string>> rows{{"weight", "partition", "n_lambda", "note"}};
  for (const auto& row : table.rows) {
    rows.push_back({row.weight.to_string(), row.partition.to_string(),
                    row.ok() ? row.result->n_lambda.str() : "-", row_note(row)});
  }
  write_text_rows(out, rows);
  for (const auto& printed : table.missing_paper_rows)
    out << "printed row not among generators: " << printed.partition.to_string() << " "
        << printed.n_lambda.str() << '\n';
}

void write_generators(std::ostream& out, GroupSpec spec, const std::vector<Weight>& basis,
                      OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << "weight,partition\n";
      for (const auto& w : basis)
        out << w.to_string() << ',' << csv_quote(partition_of(w).to_string()) << '\n';
      return;
    case OutputFormat::json: {
      ordered_json j;
      j["schema"] = "schern.generators/1";
      j["n"] = spec.n;
      j["d"] = spec.d;
      j["count"] = basis.size();
      j["generators"] = ordered_json::array();
      for (const auto& w : basis) {
        j["generators"].push_back({{"weight", w.to_string()},
                                   {"coeffs", to_vector(w.coeffs())},
                                   {"partition", to_vector(partition_of(w).parts())}});
      }
      out << j.dump(2) << '\n';
      return;
    }
    case OutputFormat::text: break;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : basis) rows.push_back({w.to_string(), partition_of(w).to_string()});
  write_text_rows(out, rows);
}

void write_case_report(std::ostream& out, const CaseReport& report, OutputFormat format) {
  const auto& e = report.expectation;
  if (format == OutputFormat::json) {
    ordered_json j;
    j["schema"] = "schern.case/1";
    j["case"] = e.id;
    j["n"] = e.spec.n;
    j["d"] = e.spec.d;
    j["image_index"] = report.index.str();
    j["expected_gcd"] = e.expected_gcd.str();
    j["matches_expected"] = report.matches_expected;
    j["h4_multiplier"] = e.h4_multiplier.str();
    j["verdict"] = std::string(to_string(report.verdict));
    j["source"] = e.source;
    out << j.dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::csv) {
    out << "case,n,d,image_index,expected_gcd,h4_multiplier,verdict\n"
        << e.id << ',' << e.spec.n << ',' << e.spec.d << ',' << report.index.str() << ','
        << e.expected_gcd.str() << ',' << e.h4_multiplier.str() << ','
        << csv_quote(std::string(to_string(report.verdict))) << '\n';
    return;
  }
  out << "case: " << e.id << " (" << group_name(e.spec) << ")\n"
      << "image index: " << report.index.str() << '\n'
      << "expected gcd: " << e.expected_gcd.str()
      << (report.matches_expected ? " (match)" : " (MISMATCH)") << '\n'
      << "H^4 multiplier: " << e.h4_multiplier.str() << '\n'
      << "verdict: " << to_string(report.verdict) << '\n'
      << "source: " << e.source << '\n';
}

void write_conjecture_report(std::ostream& out, const ConjectureReport& report,
                             OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["schema"] = "schern.conjecture/1";
    j["ell"] = report.ell;
    j["n"] = report.spec.n;
    j["d"] = report.spec.d;
    j["generators"] = report.basis_size;
    j["image_index"] = report.index.str();
    j["equals_ell"] = report.equals_ell;
    j["divisible_by_ell"] = report.divisible_by_ell;
    j["duality_failures"] = report.duality_failures;
    out << j.dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::csv) {
    out << "ell,n,d,generators,image_index,equals_ell,divisible_by_ell,duality_failures\n"
        << report.ell << ',' << report.spec.n << ',' << report.spec.d << ','
        << report.basis_size << ',' << report.index.str() << ','
        << (report.equals_ell ? "true" : "false") << ','
        << (report.divisible_by_ell ? "true" : "false") << ',' << report.duality_failures
        << '\n';
    return;
  }
  out << "group: " << group_name(report.spec) << '\n'
      << "generators: " << report.basis_size << '\n'
      << "image index: " << report.index.str() << '\n'
      << "equals ell: " << (report.equals_ell ? "yes" : "no") << '\n'
      << "divisible by ell: " << (report.divisible_by_ell ? "yes" : "no") << '\n'
      << "duality failures: " << report.duality_failures << '\n';
}

}  // namespace schern
