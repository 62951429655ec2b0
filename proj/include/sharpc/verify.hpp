// SPDX-License-Identifier: Apache-2.0
#pragma once

// Verification suites: each compares the closed-form catalog with an
// independent numerical oracle and yields report records in a fixed order.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sharpc/report.hpp"

namespace sharpc::verify {

enum class Suite { Tables, OneD, Sobolev, Trace, Bounds, All };

/// Throws DomainError on an unknown name.
Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

/// 0.01 for the FEM and radial suites, 1e-3 for the interval and trace
/// suites. Bounds records use exact relations and ignore it.
double default_tolerance(Suite suite);

struct VerifyOptions {
  std::optional<double> tol;  // overrides the suite default
  int jobs = 1;
};

using Task = std::function<std::vector<report::ReportRecord>()>;

/// Runs the tasks on up to `jobs` threads and concatenates their records in
/// task order. A task that throws contributes one FAIL record naming the
/// error.
std::vector<report::ReportRecord> run_tasks(const std::vector<Task>& tasks, int jobs);

std::vector<Task> suite_tasks(Suite suite, const VerifyOptions& options);
std::vector<report::ReportRecord> run_suite(Suite suite, const VerifyOptions& options);

/// Mesh sizes used by the FEM records: 0.1 halved three times.
std::vector<double> default_h_sequence();

}  // namespace sharpc::verify
