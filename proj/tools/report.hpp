#pragma once

#include "diagonalis/json_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace diagonalis::cli {

// Everything a command prints. The JSON form is always filled; text and csv
// fall back to a flattened key/value listing when left empty.
struct Report {
  json data = json::object();
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> table;  // first row is the header
};

void emit(std::ostream& out, const Report& r, const std::string& format);

std::string csv_escape(const std::string& s);

}  // namespace diagonalis::cli
