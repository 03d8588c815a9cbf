#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zetalab::cli {

enum class Status { pass, fail, skip };
enum class Format { table, csv, json };

std::string to_string(Status status);
std::string to_string(Format format);

using Params = std::vector<std::pair<std::string, std::string>>;

/// One verification record.
struct Report {
  std::string id;
  Params params;
  std::string numeric;
  std::string reference;
  std::string residual;
  std::string tolerance;
  Status status = Status::skip;
  long long runtime_ms = 0;
};

/// A generic table: a header and rows of equal width. Cells are plain strings;
/// `numeric_columns` marks cells written as JSON numbers, `bool_columns` as
/// JSON booleans.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric_columns;
  std::vector<bool> bool_columns;
};

/// Sorts by id, then parameters (integers compared by value).
void sort_reports(std::vector<Report>& reports);

std::string params_to_string(const Params& params);

/// Reports as a human table, CSV (header row first) or a JSON array. With
/// `errata`, the errata rows follow as a second section; in JSON the output
/// becomes {"reports": [...], "errata": [...]}.
void write_reports(std::ostream& out, const std::vector<Report>& reports, Format format,
                   const Table* errata = nullptr);

/// Same for sequence tables; the JSON key of the main section is "rows".
void write_rows(std::ostream& out, const Table& table, Format format,
                const Table* errata = nullptr);

}  // namespace zetalab::cli
