// SPDX-License-Identifier: Apache-2.0
#pragma once

// Machine-readable verification records and their json/csv/text renderings.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sharpc::report {

enum class Status { OK, FAIL, INFO };

/// How `numerical` is judged against `closed_form`:
///  - Match: relative discrepancy at most the record tolerance;
///  - LowerBound: closed_form bounds numerical from below (relative slack);
///  - UpperBound: closed_form bounds numerical from above (relative slack);
///  - Exceeds: numerical - closed_form > tolerance (a strict gap).
enum class Relation { Match, LowerBound, UpperBound, Exceeds };

enum class Format { Json, Csv, Text };

using Parameters = std::vector<std::pair<std::string, std::string>>;

struct ReportRecord {
  std::string quantity;
  Parameters parameters;
  std::optional<double> closed_form;
  std::optional<double> numerical;
  std::optional<double> discrepancy;  // |numerical - closed_form| / |closed_form|
  std::string method;
  Status status = Status::INFO;
  Relation relation = Relation::Match;
};

/// Numbers in records and parameters are printed with 10 significant digits.
std::string format_number(double v);
std::pair<std::string, std::string> param(std::string key, double value);
std::pair<std::string, std::string> param(std::string key, std::string value);

/// Fills discrepancy and status. `tolerance` is the Match/Exceeds threshold,
/// `slack` the relative slack of the bound relations.
ReportRecord make_record(std::string quantity, Parameters parameters, std::optional<double> closed_form,
                         std::optional<double> numerical, std::string method, double tolerance,
                         Relation relation = Relation::Match, double slack = 1e-12);

std::string to_string(Status s);
std::string to_string(Relation r);
std::string to_string(Format f);
/// Throws DomainError on an unknown name.
Format parse_format(const std::string& name);

/// Writes the CSV header (csv only); json and text need none.
void write_header(Format format, std::ostream& out);
void write_record(const ReportRecord& record, Format format, std::ostream& out);
void write_records(const std::vector<ReportRecord>& records, Format format, std::ostream& out);

bool any_failed(const std::vector<ReportRecord>& records);

inline constexpr const char* kCsvHeader = "quantity,parameters,closed_form,numerical,discrepancy,method,status,relation";

}  // namespace sharpc::report
