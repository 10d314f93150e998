#include "staged/table.hpp"

#include <fstream>
#include <sstream>

#include "staged/errors.hpp"

namespace staged {

std::size_t RawTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw validation_error("unknown column: " + name);
}

bool RawTable::has_column(const std::string& name) const {
  for (const auto& c : columns) {
    if (c == name) return true;
  }
  return false;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  out.push_back(cell);
  return out;
}

}  // namespace

RawTable read_csv(std::istream& in) {
  RawTable table;
  std::string line;
  if (!std::getline(in, line)) throw io_error("empty CSV input");
  table.columns = split_csv_line(line);
  if (table.columns.empty()) throw io_error("CSV header has no columns");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != table.columns.size()) {
      throw validation_error("CSV line " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(table.columns.size()));
    }
    for (const auto& cell : cells) {
      if (cell.empty()) {
        throw validation_error("missing value on CSV line " + std::to_string(line_no));
      }
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

RawTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_csv(in);
}

namespace {

void write_cell(std::ostream& out, const std::string& cell) {
  const bool needs_quotes = cell.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_csv_file(const std::string& path, const RawTable& table) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    write_cell(out, table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      write_cell(out, row[i]);
    }
    out << '\n';
  }
}

}  // namespace staged
