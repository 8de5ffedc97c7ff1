#include "hegf/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "hegf/errors.hpp"

namespace hegf {

namespace {

std::string json_number(double v) {
  // JSON readers take "-0" as the integer 0.
  if (v == 0.0 && std::signbit(v)) return "-0.0";
  if (std::isfinite(v)) return format_fixed17(v);
  return nlohmann::json(format_fixed17(v)).dump();
}

double parse_number(std::string_view s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw usage_error("report: malformed number '" + std::string(s) + "'");
  return v;
}

double json_to_number(const nlohmann::ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw usage_error("report: expected a number");
}

void check_key(const std::string& key) {
  if (key.empty() || key.find_first_of("=;\",\n\r") != std::string::npos)
    throw usage_error("report: input key '" + key + "' is empty or contains a reserved character");
}

std::string csv_field(const std::string& s, bool force_quotes) {
  if (!force_quotes && s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// RFC 4180 records; quoted fields may contain separators and newlines.
std::vector<std::vector<std::string>> read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw usage_error("report: unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::string_view kCsvHeader = "identity_id,inputs,residual,tolerance,passed,notes";

}  // namespace

IdentityReport IdentityReport::make(std::string id, std::vector<std::pair<std::string, double>> inputs,
                                    double residual, double tolerance, std::string notes) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.inputs = std::move(inputs);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.notes = std::move(notes);
  return r;
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw usage_error("unknown format '" + std::string(s) + "' (expected json or csv)");
}

std::string format_fixed17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void emit_report(const std::vector<IdentityReport>& results, ReportFormat format, std::ostream& sink) {
  if (format == ReportFormat::json) {
    if (results.empty()) {
      sink << "[]\n";
    } else {
      sink << "[\n";
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        sink << "  {\"identity_id\":" << nlohmann::json(r.identity_id).dump() << ",\"inputs\":{";
        for (std::size_t k = 0; k < r.inputs.size(); ++k) {
          check_key(r.inputs[k].first);
          if (k) sink << ',';
          sink << nlohmann::json(r.inputs[k].first).dump() << ':' << json_number(r.inputs[k].second);
        }
        sink << "},\"residual\":" << json_number(r.residual) << ",\"tolerance\":" << json_number(r.tolerance)
             << ",\"passed\":" << (r.passed ? "true" : "false") << ",\"notes\":" << nlohmann::json(r.notes).dump()
             << '}' << (i + 1 < results.size() ? ",\n" : "\n");
      }
      sink << "]\n";
    }
  } else {
    sink << kCsvHeader << '\n';
    for (const auto& r : results) {
      std::string inputs;
      for (std::size_t k = 0; k < r.inputs.size(); ++k) {
        check_key(r.inputs[k].first);
        if (k) inputs += ';';
        inputs += r.inputs[k].first + '=' + format_fixed17(r.inputs[k].second);
      }
      sink << csv_field(r.identity_id, false) << ',' << csv_field(inputs, true) << ','
           << format_fixed17(r.residual) << ',' << format_fixed17(r.tolerance) << ','
           << (r.passed ? "true" : "false") << ',' << csv_field(r.notes, false) << '\n';
    }
  }
  sink.flush();
  if (!sink) throw std::ios_base::failure("emit_report: write to sink failed");
}

std::vector<IdentityReport> parse_report(std::string_view text, ReportFormat format) {
  std::vector<IdentityReport> out;
  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw usage_error(std::string("report: ") + e.what());
    }
    if (!doc.is_array()) throw usage_error("report: JSON document is not an array");
    for (const auto& obj : doc) {
      try {
        IdentityReport r;
        r.identity_id = obj.at("identity_id").get<std::string>();
        for (const auto& [key, value] : obj.at("inputs").items()) r.inputs.emplace_back(key, json_to_number(value));
        r.residual = json_to_number(obj.at("residual"));
        r.tolerance = json_to_number(obj.at("tolerance"));
        r.passed = obj.at("passed").get<bool>();
        r.notes = obj.at("notes").get<std::string>();
        if (obj.size() != 6) throw usage_error("report: unexpected fields in JSON object");
        out.push_back(std::move(r));
      } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("report: ") + e.what());
      }
    }
    return out;
  }

  const auto rows = read_csv(text);
  if (rows.empty() || rows.front().size() != 6) throw usage_error("report: missing CSV header");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 6) throw usage_error("report: CSV row " + std::to_string(i) + " has wrong arity");
    IdentityReport r;
    r.identity_id = f[0];
    std::string_view list = f[1];
    while (!list.empty()) {
      const auto semi = list.find(';');
      const auto item = list.substr(0, semi);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw usage_error("report: malformed inputs entry");
      r.inputs.emplace_back(std::string(item.substr(0, eq)), parse_number(item.substr(eq + 1)));
      list = semi == std::string_view::npos ? std::string_view{} : list.substr(semi + 1);
    }
    r.residual = parse_number(f[2]);
    r.tolerance = parse_number(f[3]);
    if (f[4] != "true" && f[4] != "false") throw usage_error("report: passed must be true or false");
    r.passed = f[4] == "true";
    r.notes = f[5];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hegf
