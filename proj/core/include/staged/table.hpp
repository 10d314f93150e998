#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace staged {

// Raw CSV contents: a header row plus string cells, all UTF-8.
// Missing values (empty cells) are rejected at ingestion.
struct RawTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t column_index(const std::string& name) const;  // throws validation_error
  bool has_column(const std::string& name) const;
};

RawTable read_csv(std::istream& in);
RawTable read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const RawTable& table);

}  // namespace staged
