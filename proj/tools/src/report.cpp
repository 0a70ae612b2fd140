#include "avoidlab/cli/report.hpp"

#include <algorithm>
#include <ostream>

#ifndef AVOIDLAB_VERSION
#define AVOIDLAB_VERSION "unknown"
#endif

namespace avoidlab::cli {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kTable: return "table";
  }
  return "?";
}

Json big_json(const BigInt& v) {
  try {
    return to_int64(v);
  } catch (const std::overflow_error&) {
    return avoidlab::to_string(v);
  }
}

Json claim_json(Json value, const char* provenance) {
  Json j = Json::object();
  j["value"] = std::move(value);
  j["provenance"] = provenance;
  return j;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct FlatRow {
  std::string key, value, provenance;
};

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

bool is_claim(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("value") && j.contains("provenance");
}

void flatten(const Json& j, const std::string& prefix, std::vector<FlatRow>& out) {
  if (is_claim(j)) {
    out.push_back({prefix, scalar_text(j["value"]), j["provenance"].get<std::string>()});
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out.push_back({prefix, "[]", ""});
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.push_back({prefix, scalar_text(j), ""});
  }
}

Json header(const Report& r) {
  Json j = Json::object();
  j["tool"] = "avoidlab";
  j["version"] = AVOIDLAB_VERSION;
  j["subcommand"] = r.subcommand;
  j["config"] = r.config;
  j["status"] = r.mismatch ? "mismatch" : "ok";
  return j;
}

void write_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

}  // namespace

void emit(const Report& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    Json j = header(report);
    if (report.tabular) {
      Json rows = Json::array();
      for (const auto& r : report.sweep) {
        Json row = Json::object();
        row["n"] = r.n;
        row["s"] = r.s;
        row["d"] = r.d;
        row["quantity"] = r.quantity;
        row["value"] = r.value;
        row["provenance"] = r.provenance;
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
    } else {
      j["result"] = report.result;
    }
    out << j.dump(2) << '\n';
    return;
  }

  std::vector<std::vector<std::string>> rows;
  if (report.tabular) {
    rows.push_back(kSweepColumns);
    for (const auto& r : report.sweep) {
      rows.push_back({std::to_string(r.n), std::to_string(r.s), std::to_string(r.d), r.quantity, r.value,
                      r.provenance});
    }
  } else {
    std::vector<FlatRow> flat;
    flatten(report.result, "", flat);
    rows.push_back({"key", "value", "provenance"});
    for (auto& f : flat) rows.push_back({f.key, f.value, f.provenance});
  }

  if (format == OutputFormat::kCsv) {
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out << ',';
        out << csv_field(r[c]);
      }
      out << "\r\n";
    }
  } else {
    out << "avoidlab " << AVOIDLAB_VERSION << "  " << report.subcommand << "  status="
        << (report.mismatch ? "mismatch" : "ok") << '\n';
    write_table(rows, out);
  }
}

}  // namespace avoidlab::cli
