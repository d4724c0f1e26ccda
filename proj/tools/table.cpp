#include "table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gossipcli {

namespace {

std::string render(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return ResultTable::format_number(*d);
  return std::get<std::string>(cell);
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

Cell parse_cell(const std::string& field) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  long long i;
  if (auto [p, ec] = std::from_chars(first, last, i); ec == std::errc() && p == last) return i;
  double d;
  if (auto [p, ec] = std::from_chars(first, last, d); ec == std::errc() && p == last &&
                                                      std::isfinite(d))
    return d;
  return field;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

}  // namespace

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ResultTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string ResultTable::format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c > 0) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += render(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += r == 0 ? "\n" : ",\n";
    out += "  {";
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c > 0) out += ", ";
      append_json_string(out, columns_[c]);
      out += ": ";
      const Cell& cell = rows_[r][c];
      if (std::holds_alternative<std::string>(cell))
        append_json_string(out, std::get<std::string>(cell));
      else
        out += render(cell);
    }
    out += '}';
  }
  out += rows_.empty() ? "]\n" : "\n]\n";
  return out;
}

ResultTable ResultTable::from_csv(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line)) throw std::invalid_argument("empty table text");
  std::vector<std::string> header = split_fields(line);
  ResultTable table(std::move(header));
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    std::vector<Cell> cells;
    cells.reserve(fields.size());
    for (const std::string& f : fields) cells.push_back(parse_cell(f));
    table.add_row(std::move(cells));
  }
  return table;
}

}  // namespace gossipcli
