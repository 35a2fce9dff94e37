// Deterministic table emission for the CLI: identical invocations must
// produce byte-identical CSV/JSON/table output, so every number is
// rendered once via %.17g and inserted verbatim everywhere.
#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "mfi/errors.hpp"

namespace mfi::cli {

inline std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Column {
  std::string name;
  bool numeric = true;
};

struct OutputTable {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::string>& add_row() {
    rows.emplace_back(columns.size());
    return rows.back();
  }
};

inline void emit_csv(std::ostream& out, const OutputTable& table) {
  for (size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c].name;
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

inline void emit_json(std::ostream& out, const OutputTable& table) {
  out << "[";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? ", " : "") << "\"" << table.columns[c].name << "\": ";
      if (table.columns[c].numeric)
        out << table.rows[r][c];
      else
        out << "\"" << table.rows[r][c] << "\"";
    }
    out << "}";
  }
  out << "\n]\n";
}

inline void emit_aligned(std::ostream& out, const OutputTable& table) {
  std::vector<size_t> width(table.columns.size());
  for (size_t c = 0; c < table.columns.size(); ++c) {
    width[c] = table.columns[c].name.size();
    for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
  }
  auto pad = [&](const std::string& text, size_t c) {
    if (c + 1 == table.columns.size() && !table.columns[c].numeric) return text;
    std::string cell(width[c] - text.size(), ' ');
    return table.columns[c].numeric ? cell + text : text + cell;
  };
  for (size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "  " : "") << pad(table.columns[c].name, c);
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << pad(row[c], c);
    out << "\n";
  }
}

enum class Format { csv, table, json };

inline void emit(std::ostream& out, const OutputTable& table, Format format) {
  switch (format) {
    case Format::csv: emit_csv(out, table); break;
    case Format::json: emit_json(out, table); break;
    case Format::table: emit_aligned(out, table); break;
  }
}

/// Writes to `path` (or stdout when empty); unwritable paths raise
/// io_failure so the driver can exit with the documented code.
struct io_failure : error {
  using error::error;
};

inline void write_output(const std::string& path, const OutputTable& table,
                         Format format) {
  if (path.empty()) {
    emit(std::cout, table, format);
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_failure("cannot open output path: " + path);
  emit(out, table, format);
  if (!out.good()) throw io_failure("failed writing output: " + path);
}

}  // namespace mfi::cli
