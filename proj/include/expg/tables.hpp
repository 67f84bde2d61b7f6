#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace expg {

struct TableCell {
  enum class Status { kLabel, kFormula, kVerified, kMismatch };
  std::string value;                    // "<=" prefix marks an upper bound
  std::optional<std::string> measured;  // exact value beside a bound
  Status status = Status::kFormula;
  std::string note;
};

struct Table {
  int number = 0;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<TableCell>> rows;
  std::vector<std::string> notes;

  std::size_t count(TableCell::Status s) const;
  bool ok() const { return count(TableCell::Status::kMismatch) == 0; }
};

struct TableOptions {
  std::uint64_t max_vertices = 100'000;
  // Vertex connectivity is measured by max-flow only up to this order.
  std::uint64_t max_flow_vertices = 2'000;
};

constexpr int kTableCount = 8;
Table build_table(int which, const TableOptions& opts = {});
std::string render(const Table& t);
nlohmann::json to_json(const Table& t);
std::string_view to_string(TableCell::Status s);

}  // namespace expg
