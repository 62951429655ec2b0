// SPDX-License-Identifier: Apache-2.0
#include "sharpc/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "sharpc/error.hpp"

namespace sharpc::report {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string joined(const Parameters& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

nlohmann::ordered_json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  // Round-trip through the 10-digit text so output is stable across runs.
  return nlohmann::ordered_json::parse(format_number(*v));
}

std::string optional_text(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::pair<std::string, std::string> param(std::string key, double value) { return {std::move(key), format_number(value)}; }

std::pair<std::string, std::string> param(std::string key, std::string value) { return {std::move(key), std::move(value)}; }

ReportRecord make_record(std::string quantity, Parameters parameters, std::optional<double> closed_form,
                         std::optional<double> numerical, std::string method, double tolerance, Relation relation,
                         double slack) {
  ReportRecord r{std::move(quantity), std::move(parameters), closed_form, numerical, std::nullopt, std::move(method),
                 Status::INFO, relation};
  if (!closed_form || !numerical) return r;
  const double c = *closed_form;
  const double x = *numerical;
  const double diff = std::abs(x - c);
  r.discrepancy = c != 0.0 ? diff / std::abs(c) : diff;
  bool ok = false;
  switch (relation) {
    case Relation::Match:
      ok = *r.discrepancy <= tolerance;
      break;
    case Relation::LowerBound:
      ok = x >= c - slack * std::abs(c);
      break;
    case Relation::UpperBound:
      ok = x <= c + slack * std::abs(c);
      break;
    case Relation::Exceeds:
      ok = x - c > tolerance;
      break;
  }
  if (!std::isfinite(x)) ok = false;
  r.status = ok ? Status::OK : Status::FAIL;
  return r;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::OK:
      return "OK";
    case Status::FAIL:
      return "FAIL";
    case Status::INFO:
      return "INFO";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Match:
      return "match";
    case Relation::LowerBound:
      return "lower_bound";
    case Relation::UpperBound:
      return "upper_bound";
    case Relation::Exceeds:
      return "exceeds";
  }
  return "?";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Text:
      return "text";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw DomainError("unknown format '" + name + "' (expected json, csv or text)");
}

void write_header(Format format, std::ostream& out) {
  if (format == Format::Csv) out << kCsvHeader << '\n';
}

void write_record(const ReportRecord& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["quantity"] = r.quantity;
      auto params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.parameters) params[k] = v;
      j["parameters"] = params;
      j["closed_form"] = number_or_null(r.closed_form);
      j["numerical"] = number_or_null(r.numerical);
      j["discrepancy"] = number_or_null(r.discrepancy);
      j["method"] = r.method;
      j["status"] = to_string(r.status);
      j["relation"] = to_string(r.relation);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << csv_field(r.quantity) << ',' << csv_field(joined(r.parameters)) << ',' << optional_text(r.closed_form) << ','
          << optional_text(r.numerical) << ',' << optional_text(r.discrepancy) << ',' << csv_field(r.method) << ','
          << to_string(r.status) << ',' << to_string(r.relation) << '\n';
      break;
    case Format::Text: {
      out << std::left << std::setw(5) << to_string(r.status) << ' ' << r.quantity;
      if (!r.parameters.empty()) out << " [" << joined(r.parameters) << ']';
      out << "\n      closed_form=" << (r.closed_form ? format_number(*r.closed_form) : "-")
          << "  numerical=" << (r.numerical ? format_number(*r.numerical) : "-")
          << "  discrepancy=" << (r.discrepancy ? format_number(*r.discrepancy) : "-") << "  (" << to_string(r.relation)
          << ", " << r.method << ")\n";
      break;
    }
  }
}

void write_records(const std::vector<ReportRecord>& records, Format format, std::ostream& out) {
  write_header(format, out);
  for (const auto& r : records) write_record(r, format, out);
}

bool any_failed(const std::vector<ReportRecord>& records) {
  for (const auto& r : records)
    if (r.status == Status::FAIL) return true;
  return false;
}

}  // namespace sharpc::report
