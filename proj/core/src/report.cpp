#include "zrl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "zrl/error.hpp"

namespace zrl {

std::string ReportDocument::format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void ReportDocument::put(const std::string& section, const std::string& key, std::string value) {
  for (auto& e : entries_) {
    if (e.section == section && e.key == key) {
      e.value = std::move(value);
      return;
    }
  }
  entries_.push_back({section, key, std::move(value)});
}

void ReportDocument::set(const std::string& section, const std::string& key, double value) {
  put(section, key, format_number(value));
}

void ReportDocument::set(const std::string& section, const std::string& key, std::int64_t value) {
  put(section, key, std::to_string(value));
}

void ReportDocument::set(const std::string& section, const std::string& key, int value) {
  put(section, key, std::to_string(value));
}

void ReportDocument::set(const std::string& section, const std::string& key, std::size_t value) {
  put(section, key, std::to_string(value));
}

void ReportDocument::set(const std::string& section, const std::string& key, const std::string& value) {
  put(section, key, value);
}

void ReportDocument::set(const std::string& section, const std::string& key, const char* value) {
  put(section, key, value);
}

void ReportDocument::set(const std::string& section, const std::string& key, Complex value) {
  put(section, key, format_number(value.real()));
  put(section, key + "_im", format_number(value.imag()));
}

void ReportDocument::set_check(const std::string& section, const std::string& key, bool pass) {
  put(section, key, pass ? "pass" : "fail");
}

void ReportDocument::add_table(const std::string& section, const std::string& name,
                               std::vector<std::string> columns,
                               std::vector<std::vector<std::string>> rows) {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw DomainError("table row width differs from its header");
  }
  tables_.push_back({section, name, std::move(columns), std::move(rows)});
}

std::string ReportDocument::get(const std::string& section, const std::string& key) const {
  for (const auto& e : entries_) {
    if (e.section == section && e.key == key) return e.value;
  }
  return {};
}

void ReportDocument::write(std::ostream& out, Format format) const {
  std::vector<std::string> sections;
  for (const auto& e : entries_) {
    if (std::find(sections.begin(), sections.end(), e.section) == sections.end()) sections.push_back(e.section);
  }
  for (const auto& t : tables_) {
    if (std::find(sections.begin(), sections.end(), t.section) == sections.end()) sections.push_back(t.section);
  }

  if (format == Format::Kv) {
    for (const auto& section : sections) {
      for (const auto& e : entries_) {
        if (e.section == section) out << e.section << '.' << e.key << " = " << e.value << '\n';
      }
      for (const auto& t : tables_) {
        if (t.section != section) continue;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out << t.section << '.' << t.name << '.' << r << '.' << t.columns[c] << " = " << t.rows[r][c]
                << '\n';
          }
        }
      }
    }
    return;
  }

  bool first = true;
  for (const auto& section : sections) {
    if (!first) out << '\n';
    first = false;
    out << '[' << section << "]\n";
    std::size_t width = 0;
    for (const auto& e : entries_) {
      if (e.section == section) width = std::max(width, e.key.size());
    }
    for (const auto& e : entries_) {
      if (e.section != section) continue;
      out << "  " << std::left << std::setw(static_cast<int>(width)) << e.key << "  " << e.value << '\n';
    }
    for (const auto& t : tables_) {
      if (t.section != section) continue;
      std::vector<std::size_t> widths(t.columns.size());
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        widths[c] = t.columns[c].size();
        for (const auto& row : t.rows) widths[c] = std::max(widths[c], row[c].size());
      }
      out << "  " << t.name << ":\n";
      const auto print_row = [&](const std::vector<std::string>& cells) {
        out << "   ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << ' ' << std::right << std::setw(static_cast<int>(widths[c])) << cells[c];
        }
        out << '\n';
      };
      print_row(t.columns);
      for (const auto& row : t.rows) print_row(row);
    }
  }
}

std::string ReportDocument::str(Format format) const {
  std::ostringstream out;
  write(out, format);
  return out.str();
}

}  // namespace zrl
