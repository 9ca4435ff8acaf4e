#include "report.hpp"

#include <algorithm>
#include <ostream>

namespace diagonalis::cli {

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : ",") + scalar(x);
    out.emplace_back(prefix, joined);
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar(v));
}

}  // namespace

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(std::ostream& out, const Report& r, const std::string& format) {
  if (format == "json") {
    out << r.data.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  if (format == "csv") {
    if (!r.table.empty()) {
      for (const auto& row : r.table) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
      }
      return;
    }
    flatten(r.data, "", flat);
    out << "key,value\n";
    for (const auto& [k, v] : flat) out << csv_escape(k) << "," << csv_escape(v) << "\n";
    return;
  }
  if (!r.text.empty()) {
    for (const auto& line : r.text) out << line << "\n";
    return;
  }
  flatten(r.data, "", flat);
  for (const auto& [k, v] : flat) out << k << ": " << v << "\n";
}

}  // namespace diagonalis::cli
