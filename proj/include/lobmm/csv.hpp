#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lobmm::csv {

/// Splits one RFC-4180 record. Quoted fields may contain commas and doubled quotes;
/// embedded newlines are not supported.
std::vector<std::string> split_record(std::string_view line);

/// Reads all records; skips blank lines and strips a trailing '\r'.
std::vector<std::vector<std::string>> read_records(std::istream& in);

/// Quotes a field only when it contains a comma, quote, or line break.
std::string quote(std::string_view field);

/// Shortest round-trip decimal representation, '.' separator, locale independent.
std::string format_double(double value);

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace lobmm::csv
