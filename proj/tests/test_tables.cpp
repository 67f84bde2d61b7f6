#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expg/tables.hpp"

using namespace expg;
using Status = TableCell::Status;

namespace {

const TableCell& cell(const Table& t, std::size_t row, const std::string& col) {
  auto it = std::find(t.columns.begin(), t.columns.end(), col);
  REQUIRE(it != t.columns.end());
  return t.rows.at(row).at(static_cast<std::size_t>(it - t.columns.begin()));
}

}  // namespace

TEST_CASE("table 8 verifies the exponential cubes within budget") {
  Table t = build_table(8);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.ok());
  const char* orders[] = {"8", "128", "32768"};
  const char* diams[] = {"4", "10", "22"};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(cell(t, k, "O:order").value == orders[k]);
    CHECK(cell(t, k, "O:order").status == Status::kVerified);
    CHECK(cell(t, k, "O:diam").value == diams[k]);
    CHECK(cell(t, k, "O:diam").status == Status::kVerified);
  }
  CHECK(cell(t, 3, "O:order").status == Status::kFormula);
  CHECK(cell(t, 1, "P:order").value == "2048");
  CHECK(cell(t, 1, "P:order").status == Status::kVerified);
  CHECK(cell(t, 1, "P:diam").measured == std::optional<std::string>("18"));
  CHECK(cell(t, 2, "P:order").value == "2^2059");
  CHECK(cell(t, 2, "P:order").status == Status::kFormula);
  CHECK(cell(t, 3, "P:order").value == "2^(2^2059+2059)");
  CHECK(cell(t, 3, "P:diam").value == "<=3*2^2059-2");
  CHECK(cell(t, 4, "D:order").value == "10650056950806");
}

TEST_CASE("table 5 and table 2 anchor cells") {
  TableOptions small;
  small.max_vertices = 5000;
  Table t5 = build_table(5, small);
  CHECK(t5.ok());
  // n = 2, k = 2 is the fourth printed row
  CHECK(cell(t5, 3, "K:order").value == "64");
  CHECK(cell(t5, 3, "K:order").status == Status::kVerified);
  CHECK(cell(t5, 3, "K:diam").value == "8");
  CHECK(cell(t5, 3, "K:diam").status == Status::kVerified);
  CHECK(cell(t5, 3, "deg").value == "3");
  CHECK(cell(t5, 1, "K:diam").value == "4");

  Table t2 = build_table(2, small);
  CHECK(t2.ok());
  bool found = false;
  for (std::size_t r = 0; r < t2.rows.size(); ++r)
    if (t2.rows[r][0].value == "2" && t2.rows[r][1].value == "2") {
      found = true;
      CHECK(t2.rows[r][2].value == "42");
      for (const auto& c : t2.rows[r])
        if (c.value == "64") CHECK(c.status == Status::kVerified);
    }
  CHECK(found);
}

TEST_CASE("every table builds without mismatches at a small budget") {
  TableOptions small;
  small.max_vertices = 3000;
  small.max_flow_vertices = 300;
  for (int k = 1; k <= kTableCount; ++k) {
    CAPTURE(k);
    Table t = build_table(k, small);
    CHECK(t.number == k);
    CHECK(t.ok());
    CHECK(!t.rows.empty());
    CHECK(t.count(Status::kVerified) > 0);
    for (const auto& r : t.rows) CHECK(r.size() == t.columns.size());
    auto j = to_json(t);
    CHECK(j["table"] == k);
    CHECK(j["rows"].size() == t.rows.size());
    CHECK(j["summary"]["mismatch"] == 0);
    CHECK(render(t).find("Table " + std::to_string(k)) == 0);
  }
  CHECK_THROWS(build_table(9));
}

TEST_CASE("budget controls materialization") {
  TableOptions tiny;
  tiny.max_vertices = 100;
  Table t = build_table(8, tiny);
  CHECK(cell(t, 1, "O:order").status == Status::kFormula);
  CHECK(cell(t, 0, "O:order").status == Status::kVerified);
  CHECK(t.ok());
}
