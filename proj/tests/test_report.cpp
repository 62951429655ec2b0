// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sharpc/error.hpp"
#include "sharpc/report.hpp"

using namespace sharpc::report;

TEST_CASE("status rules") {
  CHECK(make_record("x", {}, 1.0, 1.005, "m", 0.01).status == Status::OK);
  CHECK(make_record("x", {}, 1.0, 1.02, "m", 0.01).status == Status::FAIL);
  CHECK(make_record("x", {}, 1.0, std::nullopt, "m", 0.01).status == Status::INFO);
  CHECK_FALSE(make_record("x", {}, std::nullopt, 2.0, "m", 0.01).discrepancy.has_value());
  CHECK(*make_record("x", {}, 2.0, 2.5, "m", 0.01).discrepancy == doctest::Approx(0.25));

  CHECK(make_record("x", {}, 1.0, 3.0, "m", 0.0, Relation::LowerBound).status == Status::OK);
  CHECK(make_record("x", {}, 1.0, 1.0 - 1e-13, "m", 0.0, Relation::LowerBound).status == Status::OK);
  CHECK(make_record("x", {}, 1.0, 0.99, "m", 0.0, Relation::LowerBound).status == Status::FAIL);
  CHECK(make_record("x", {}, 1.0, 0.5, "m", 0.0, Relation::UpperBound).status == Status::OK);
  CHECK(make_record("x", {}, 1.0, 1.001, "m", 0.0, Relation::UpperBound, 1e-9).status == Status::FAIL);
  CHECK(make_record("x", {}, 1.0, 1.01, "m", 1e-3, Relation::Exceeds).status == Status::OK);
  CHECK(make_record("x", {}, 1.0, 1.0005, "m", 1e-3, Relation::Exceeds).status == Status::FAIL);
  CHECK(make_record("x", {}, 1.0, std::nan(""), "m", 1.0).status == Status::FAIL);
}

TEST_CASE("ten significant digits") {
  CHECK(format_number(0.31830988618379067) == "0.3183098862");
  CHECK(format_number(19.739208802178716) == "19.7392088");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(param("h", 0.05).second == "0.05");
}

TEST_CASE("json lines are valid and stable") {
  const auto r = make_record("lambda_h", {param("domain", "disk(1)"), param("h", 0.1)}, 5.783185963, 5.8, "fem", 0.01);
  std::ostringstream a, b;
  write_record(r, Format::Json, a);
  write_record(r, Format::Json, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().back() == '\n');
  const auto j = nlohmann::json::parse(a.str());
  CHECK(j["quantity"] == "lambda_h");
  CHECK(j["parameters"]["h"] == "0.1");
  CHECK(j["closed_form"].get<double>() == 5.783185963);
  CHECK(j["status"] == "OK");
  std::ostringstream info;
  write_record(make_record("q", {}, std::nullopt, 1.0, "m", 0.1), Format::Json, info);
  CHECK(nlohmann::json::parse(info.str())["closed_form"].is_null());
  CHECK(nlohmann::json::parse(info.str())["discrepancy"].is_null());
}

TEST_CASE("csv has a fixed header and quotes commas") {
  std::ostringstream os;
  write_records({make_record("q", {param("a", 1.0), param("b", 2.0)}, 1.0, 1.0, "x, y", 0.1)}, Format::Csv, os);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == kCsvHeader);
  CHECK(row == "q,a=1;b=2,1,1,0,\"x, y\",OK,match");
}

TEST_CASE("format names and failure detection") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(to_string(parse_format("json")) == "json");
  CHECK_THROWS_AS(parse_format("xml"), sharpc::DomainError);
  CHECK_FALSE(any_failed({make_record("q", {}, 1.0, 1.0, "m", 0.1)}));
  CHECK(any_failed({make_record("q", {}, 1.0, 1.0, "m", 0.1), make_record("q", {}, 1.0, 2.0, "m", 0.1)}));
}
