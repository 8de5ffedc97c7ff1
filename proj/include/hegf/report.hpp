#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hegf {

// Machine-readable outcome of one identity check. passed is true exactly
// when residual <= tolerance (a NaN residual never passes).
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, double>> inputs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;

  static IdentityReport make(std::string id, std::vector<std::pair<std::string, double>> inputs,
                             double residual, double tolerance, std::string notes = {});

  bool operator==(const IdentityReport&) const = default;
};

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(std::string_view s);  // throws usage_error

// 17 significant digits, the file-mode number format.
std::string format_fixed17(double v);
// Shortest representation that round-trips, the human-mode number format.
std::string format_shortest(double v);

// JSON: an array of objects with exactly the IdentityReport fields; inputs is
// an object of numbers. CSV: header `identity_id,inputs,residual,tolerance,passed,notes`,
// inputs as a quoted `key=value;key=value` list. Numbers use format_fixed17,
// non-finite numbers are written as nan / inf / -inf (JSON strings).
// Throws std::ios_base::failure when the sink reports an error.
void emit_report(const std::vector<IdentityReport>& results, ReportFormat format, std::ostream& sink);

// Inverse of emit_report. Throws usage_error on malformed input.
std::vector<IdentityReport> parse_report(std::string_view text, ReportFormat format);

}  // namespace hegf
