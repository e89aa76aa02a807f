// Copyright 2026 The levyfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace levyfp {

/// One checked quantity. `discrepancy` is in `units`: "sigma" (combined
/// standard errors), "abs", "rel", or "" for informational rows.
struct ReportRow {
  std::string label;  // key=value pairs joined by ';', never a comma
  double estimate = 0.0;
  double stderr_ = 0.0;
  double target = 0.0;
  double discrepancy = 0.0;
  double threshold = 0.0;
  std::string units;
  bool gated = false;  // counts toward the report verdict
  bool pass = true;

  bool operator==(const ReportRow&) const;
};

struct VerificationReport {
  std::string experiment;
  nlohmann::json inputs;
  std::vector<ReportRow> rows;
  double censored_fraction = 0.0;
  std::vector<double> dt_used;
  std::vector<std::string> notes;
  bool pass = true;
  double runtime_seconds = 0.0;

  /// |estimate - target| / sqrt(se_e^2 + se_t^2) <= sigma.
  ReportRow& add_sigma(const std::string& label, double estimate, double se_estimate, double target,
                       double se_target, double sigma);
  /// value < threshold.
  ReportRow& add_below(const std::string& label, double value, double threshold, double target = 0.0);
  /// value > threshold.
  ReportRow& add_above(const std::string& label, double value, double threshold, double target = 0.0);
  /// |estimate / target - 1| <= rel_tol.
  ReportRow& add_relative(const std::string& label, double estimate, double target, double rel_tol);
  /// lo <= value <= hi; discrepancy is the distance outside the interval.
  ReportRow& add_range(const std::string& label, double value, double lo, double hi);
  /// A boolean property (1 = holds).
  ReportRow& add_flag(const std::string& label, bool holds);
  ReportRow& add_info(const std::string& label, double estimate, double stderr_ = 0.0,
                      double target = std::numeric_limits<double>::quiet_NaN());

  void note_dt(double dt);
  void note_censoring(double fraction);
  /// pass = every gated row passes.
  void finalize();

  const ReportRow* find(const std::string& label) const;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  bool operator==(const VerificationReport&) const;
};

/// data.csv body: a fixed header and one row per ReportRow, numbers as %.17g.
std::string report_csv(const VerificationReport& report);

/// gnuplot script drawing estimate and target per row from data.csv.
std::string report_gnuplot(const VerificationReport& report);

/// Writes report.json, data.csv and plot.gp into `dir` (created if needed).
/// Throws std::runtime_error when the directory cannot be written.
void emit(const VerificationReport& report, const std::filesystem::path& dir);

}  // namespace levyfp
