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

#include "levyfp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace levyfp {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// NaN has no JSON spelling; it travels as null.
json num(double v) { return std::isfinite(v) ? json(v) : (std::isnan(v) ? json(nullptr) : json(v > 0 ? "inf" : "-inf")); }

double denum(const json& v) {
  if (v.is_null()) return kNaN;
  if (v.is_string()) return v.get<std::string>() == "inf" ? INFINITY : -INFINITY;
  return v.get<double>();
}

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace

bool ReportRow::operator==(const ReportRow& o) const {
  return label == o.label && same(estimate, o.estimate) && same(stderr_, o.stderr_) && same(target, o.target) &&
         same(discrepancy, o.discrepancy) && same(threshold, o.threshold) && units == o.units &&
         gated == o.gated && pass == o.pass;
}

ReportRow& VerificationReport::add_sigma(const std::string& label, double estimate, double se_estimate,
                                         double target, double se_target, double sigma) {
  const double se = std::sqrt(se_estimate * se_estimate + se_target * se_target);
  const double diff = std::abs(estimate - target);
  const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
  rows.push_back({label, estimate, se, target, z, sigma, "sigma", true, z <= sigma});
  return rows.back();
}

ReportRow& VerificationReport::add_below(const std::string& label, double value, double threshold, double target) {
  rows.push_back({label, value, 0.0, target, value, threshold, "abs", true, value < threshold});
  return rows.back();
}

ReportRow& VerificationReport::add_above(const std::string& label, double value, double threshold, double target) {
  rows.push_back({label, value, 0.0, target, value, threshold, "abs", true, value > threshold});
  return rows.back();
}

ReportRow& VerificationReport::add_relative(const std::string& label, double estimate, double target,
                                            double rel_tol) {
  const double rel = std::abs(estimate / target - 1.0);
  rows.push_back({label, estimate, 0.0, target, rel, rel_tol, "rel", true, rel <= rel_tol});
  return rows.back();
}

ReportRow& VerificationReport::add_range(const std::string& label, double value, double lo, double hi) {
  const double off = value < lo ? lo - value : (value > hi ? value - hi : 0.0);
  rows.push_back({label, value, 0.0, 0.5 * (lo + hi), off, 0.0, "abs", true, value >= lo && value <= hi});
  return rows.back();
}

ReportRow& VerificationReport::add_flag(const std::string& label, bool holds) {
  rows.push_back({label, holds ? 1.0 : 0.0, 0.0, 1.0, holds ? 0.0 : 1.0, 0.0, "abs", true, holds});
  return rows.back();
}

ReportRow& VerificationReport::add_info(const std::string& label, double estimate, double stderr_, double target) {
  rows.push_back({label, estimate, stderr_, target, kNaN, kNaN, "", false, true});
  return rows.back();
}

void VerificationReport::note_dt(double dt) {
  if (std::find(dt_used.begin(), dt_used.end(), dt) == dt_used.end()) dt_used.push_back(dt);
}

void VerificationReport::note_censoring(double fraction) { censored_fraction = std::max(censored_fraction, fraction); }

void VerificationReport::finalize() {
  pass = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.gated || r.pass; });
}

const ReportRow* VerificationReport::find(const std::string& label) const {
  for (const auto& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

json VerificationReport::to_json() const {
  json estimates = json::array();
  json targets = json::array();
  json discrepancies = json::array();
  for (const auto& r : rows) {
    estimates.push_back({{"label", r.label}, {"value", num(r.estimate)}, {"stderr", num(r.stderr_)}});
    targets.push_back({{"label", r.label}, {"value", num(r.target)}});
    discrepancies.push_back({{"label", r.label},
                             {"value", num(r.discrepancy)},
                             {"units", r.units},
                             {"threshold", num(r.threshold)},
                             {"gated", r.gated},
                             {"pass", r.pass}});
  }
  return {{"experiment", experiment},
          {"inputs", inputs},
          {"estimates", estimates},
          {"analytic_targets", targets},
          {"discrepancies", discrepancies},
          {"censored_fraction", censored_fraction},
          {"dt", dt_used},
          {"notes", notes},
          {"pass", pass},
          {"runtime_seconds", runtime_seconds}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.inputs = j.at("inputs");
  const auto& est = j.at("estimates");
  const auto& tgt = j.at("analytic_targets");
  const auto& dis = j.at("discrepancies");
  if (est.size() != tgt.size() || est.size() != dis.size()) throw std::runtime_error("report.json: ragged row lists");
  for (std::size_t i = 0; i < est.size(); ++i) {
    ReportRow row;
    row.label = est[i].at("label").get<std::string>();
    row.estimate = denum(est[i].at("value"));
    row.stderr_ = denum(est[i].at("stderr"));
    row.target = denum(tgt[i].at("value"));
    row.discrepancy = denum(dis[i].at("value"));
    row.units = dis[i].at("units").get<std::string>();
    row.threshold = denum(dis[i].at("threshold"));
    row.gated = dis[i].at("gated").get<bool>();
    row.pass = dis[i].at("pass").get<bool>();
    r.rows.push_back(std::move(row));
  }
  r.censored_fraction = j.at("censored_fraction").get<double>();
  r.dt_used = j.at("dt").get<std::vector<double>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.pass = j.at("pass").get<bool>();
  r.runtime_seconds = j.at("runtime_seconds").get<double>();
  return r;
}

bool VerificationReport::operator==(const VerificationReport& o) const {
  return experiment == o.experiment && inputs == o.inputs && rows == o.rows &&
         censored_fraction == o.censored_fraction && dt_used == o.dt_used && notes == o.notes && pass == o.pass &&
         runtime_seconds == o.runtime_seconds;
}

std::string report_csv(const VerificationReport& report) {
  std::string out = "experiment,row,label,estimate,stderr,target,discrepancy,units,threshold,gated,pass\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ReportRow& r = report.rows[i];
    out += report.experiment + ',' + std::to_string(i) + ',' + r.label + ',' + fmt(r.estimate) + ',' +
           fmt(r.stderr_) + ',' + fmt(r.target) + ',' + fmt(r.discrepancy) + ',' + r.units + ',' + fmt(r.threshold) +
           ',' + (r.gated ? "1" : "0") + ',' + (r.pass ? "1" : "0") + '\n';
  }
  return out;
}

std::string report_gnuplot(const VerificationReport& report) {
  std::string s;
  s += "# Estimate (with 1.96 stderr bars) and target for each row of data.csv.\n";
  s += "# Usage: gnuplot plot.gp   (writes plot.png next to data.csv)\n";
  s += "set datafile separator ','\n";
  s += "set terminal pngcairo size 1200,600\n";
  s += "set output 'plot.png'\n";
  s += "set title '" + report.experiment + "'\n";
  s += "set xlabel 'row'\n";
  s += "set ylabel 'value'\n";
  s += "set key outside right\n";
  s += "set xtics rotate by -45 font ',7'\n";
  s += "plot 'data.csv' every ::1 using 2:4:(1.96*$5):xticlabels(3) with yerrorbars title 'estimate', \\\n";
  s += "     'data.csv' every ::1 using 2:6 with points pt 6 ps 1.5 title 'target'\n";
  return s;
}

void emit(const VerificationReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  write_file(dir / "report.json", report.to_json().dump(2) + "\n");
  write_file(dir / "data.csv", report_csv(report));
  write_file(dir / "plot.gp", report_gnuplot(report));
}

}  // namespace levyfp
