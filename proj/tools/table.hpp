#pragma once

#include <string>
#include <variant>
#include <vector>

namespace gossipcli {

// One output cell; integers and reals render differently so size columns
// stay exact while freshness columns get 12 significant digits.
using Cell = std::variant<long long, double, std::string>;

// Column-ordered result rows with CSV and JSON renderings. Rendering then
// re-parsing then rendering again is byte-stable, which keeps saved runs
// comparable.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  void add_row(std::vector<Cell> cells);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;
  std::string to_json() const;

  static ResultTable from_csv(const std::string& text);
  static std::string format_number(double value);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace gossipcli
