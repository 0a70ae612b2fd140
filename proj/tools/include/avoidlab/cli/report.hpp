#pragma once

// Report assembly and emission for the avoidlab tool.

#include <iosfwd>
#include <string>
#include <type_traits>
#include <vector>

#include "avoidlab/bigint.hpp"
#include "json.hpp"

namespace avoidlab::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { kJson, kCsv, kTable };

std::string to_string(OutputFormat f);

inline constexpr const char* kFormula = "formula";
inline constexpr const char* kMeasured = "measured";
inline constexpr const char* kConjecture = "conjecture";

/// int64 when it fits, decimal string otherwise.
Json big_json(const BigInt& v);

/// {"value": v, "provenance": p}
Json claim_json(Json value, const char* provenance);

template <typename T>
Json claim(const T& v, const char* provenance) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return claim_json(big_json(v), provenance);
  } else {
    return claim_json(Json(v), provenance);
  }
}

/// One row of a sweep table.
struct SweepRow {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t d = 0;
  std::string quantity;
  std::string value;
  std::string provenance;
};

inline const std::vector<std::string> kSweepColumns = {"n", "s", "d", "quantity", "value", "provenance"};

struct Report {
  std::string subcommand;
  Json config = Json::object();
  Json result = Json::object();
  bool mismatch = false;
  std::vector<SweepRow> sweep;  // set by sweep only
  bool tabular = false;
};

/// RFC 4180 field quoting: quotes when the field holds a comma, quote, CR or LF.
std::string csv_field(const std::string& field);

void emit(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace avoidlab::cli
