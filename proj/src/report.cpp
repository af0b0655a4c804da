#include "harmlab/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "harmlab/errors.hpp"

namespace harmlab {

CheckResult make_check(const std::string& name, const std::string& grid, double step,
                       const ResidualMax& rm, double tolerance, const std::string& note) {
  CheckResult c;
  c.name = name;
  c.grid = grid;
  c.step = step;
  c.max_residual = rm.value;
  c.tolerance = tolerance;
  c.worst_point = rm.where;
  c.pass = rm.value <= tolerance;
  c.note = note;
  return c;
}

std::string format_cx(Cx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::string report_to_json(const CheckReport& report, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["version"] = "harmlab-report/1";
  j["suite_name"] = report.suite_name;
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["grid"] = c.grid;
    jc["step"] = c.step;
    jc["max_residual"] = c.max_residual;
    jc["tolerance"] = c.tolerance;
    jc["worst_point"] = {{"re", c.worst_point.real()}, {"im", c.worst_point.imag()}};
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

void write_report_json(const CheckReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  out << report_to_json(report);
  if (!out) raise(Errc::io_error, "failed writing report to '" + path + "'");
}

}  // namespace harmlab
