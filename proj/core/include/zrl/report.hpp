#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zrl/special_functions.hpp"

namespace zrl {

/// Ordered key-value report. Keys keep insertion order, numbers are printed
/// with 12 significant digits, so identical inputs give identical bytes.
class ReportDocument {
 public:
  enum class Format { Text, Kv };

  void set(const std::string& section, const std::string& key, double value);
  void set(const std::string& section, const std::string& key, std::int64_t value);
  void set(const std::string& section, const std::string& key, int value);
  void set(const std::string& section, const std::string& key, std::size_t value);
  void set(const std::string& section, const std::string& key, const std::string& value);
  void set(const std::string& section, const std::string& key, const char* value);
  /// key holds the real part, key_im the imaginary part.
  void set(const std::string& section, const std::string& key, Complex value);
  void set_check(const std::string& section, const std::string& key, bool pass);

  /// Table rows are emitted as section.name.<row>.<column> in kv format.
  void add_table(const std::string& section, const std::string& name, std::vector<std::string> columns,
                 std::vector<std::vector<std::string>> rows);

  /// Value of section.key as printed, or empty when absent.
  std::string get(const std::string& section, const std::string& key) const;

  void write(std::ostream& out, Format format) const;
  std::string str(Format format) const;

  static std::string format_number(double value);

 private:
  struct Entry {
    std::string section;
    std::string key;
    std::string value;
  };
  struct Table {
    std::string section;
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
  };

  void put(const std::string& section, const std::string& key, std::string value);

  std::vector<Entry> entries_;
  std::vector<Table> tables_;
};

}  // namespace zrl
