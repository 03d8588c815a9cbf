#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace zetalab::cli {

using nlohmann::ordered_json;

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "skip";
}

std::string to_string(Format format) {
  switch (format) {
    case Format::table: return "table";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "table";
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool value_less(const std::string& a, const std::string& b) {
  if (all_digits(a) && all_digits(b) && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool params_less(const Params& a, const Params& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return value_less(a[i].second, b[i].second);
  }
  return a.size() < b.size();
}

const std::vector<std::string> kReportHeader = {"id",       "params",    "numeric", "reference",
                                                "residual", "tolerance", "status",  "runtime_ms"};

std::vector<std::string> report_cells(const Report& r) {
  return {r.id,       params_to_string(r.params), r.numeric,
          r.reference, r.residual,                r.tolerance,
          to_string(r.status), std::to_string(r.runtime_ms)};
}

void check_csv_cell(const std::string& cell) {
  if (cell.find(',') != std::string::npos || cell.find('\n') != std::string::npos)
    throw std::logic_error("CSV cell contains a separator: " + cell);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      check_csv_cell(cells[i]);
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_text(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
    }
    out << text << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) line(row);
}

ordered_json report_json(const Report& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : r.params) {
    if (all_digits(value) && value.size() < 19)
      params[key] = std::stoll(value);
    else
      params[key] = value;
  }
  ordered_json j;
  j["id"] = r.id;
  j["params"] = params;
  j["numeric"] = r.numeric;
  j["reference"] = r.reference;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["status"] = to_string(r.status);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

ordered_json rows_json(const Table& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      const std::string& cell = row[i];
      if (i < table.numeric_columns.size() && table.numeric_columns[i])
        obj[table.header[i]] = std::stoll(cell);
      else if (i < table.bool_columns.size() && table.bool_columns[i])
        obj[table.header[i]] = cell == "true";
      else
        obj[table.header[i]] = cell;
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

void write_plain(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, Format format) {
  if (format == Format::csv)
    write_csv(out, header, rows);
  else
    write_text(out, header, rows);
}

void write_errata_section(std::ostream& out, const Table& errata, Format format) {
  out << '\n';
  if (format == Format::table) out << "errata\n";
  write_plain(out, errata.header, errata.rows, format);
}

}  // namespace

void sort_reports(std::vector<Report>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
    if (a.id != b.id) return a.id < b.id;
    return params_less(a.params, b.params);
  });
}

std::string params_to_string(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + '=' + value;
  }
  return out;
}

void write_reports(std::ostream& out, const std::vector<Report>& reports, Format format,
                   const Table* errata) {
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    if (errata) {
      ordered_json doc;
      doc["reports"] = std::move(arr);
      doc["errata"] = rows_json(*errata);
      out << doc.dump(2) << '\n';
    } else {
      out << arr.dump(2) << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(report_cells(r));
  write_plain(out, kReportHeader, rows, format);
  if (errata) write_errata_section(out, *errata, format);
}

void write_rows(std::ostream& out, const Table& table, Format format, const Table* errata) {
  if (format == Format::json) {
    if (errata) {
      ordered_json doc;
      doc["rows"] = rows_json(table);
      doc["errata"] = rows_json(*errata);
      out << doc.dump(2) << '\n';
    } else {
      out << rows_json(table).dump(2) << '\n';
    }
    return;
  }
  write_plain(out, table.header, table.rows, format);
  if (errata) write_errata_section(out, *errata, format);
}

}  // namespace zetalab::cli
