#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "divgraph/table.hpp"

using divgraph::Cell;
using divgraph::Column;
using divgraph::ColumnKind;
using divgraph::OutputConfig;
using divgraph::OutputFormat;
using divgraph::Table;

namespace {

Table sample_table() {
  Table t({{"n", ColumnKind::integer},
           {"value", ColumnKind::real},
           {"flag", ColumnKind::boolean},
           {"label", ColumnKind::text}});
  t.add_row({std::int64_t{1}, 2.0 / 3.0, true, std::string("2/3")});
  t.add_row({std::int64_t{2}, 0.25, false, std::string("1/4")});
  t.add_row({std::int64_t{3}, std::monostate{}, true, std::monostate{}});
  return t;
}

}  // namespace

TEST_CASE("format_real uses fixed decimal places") {
  CHECK(divgraph::format_real(2.0 / 3.0, 12) == "0.666666666667");
  CHECK(divgraph::format_real(1.6, 3) == "1.600");
  CHECK(divgraph::format_real(0.0, 4) == "0.0000");
  CHECK(divgraph::format_real(-2.0 / 3.0, 6) == "-0.666667");
}

TEST_CASE("csv rendering") {
  std::ostringstream out;
  sample_table().write_csv(out, 12);
  CHECK(out.str() ==
        "n,value,flag,label\n"
        "1,0.666666666667,true,2/3\n"
        "2,0.250000000000,false,1/4\n"
        "3,,true,\n");
}

TEST_CASE("csv quotes fields containing separators") {
  Table t({{"msg", ColumnKind::text}});
  t.add_row({std::string("a,b")});
  t.add_row({std::string("say \"hi\"")});
  std::ostringstream out;
  t.write_csv(out, 12);
  CHECK(out.str() == "msg\n\"a,b\"\n\"say \"\"hi\"\"\"\n");
}

TEST_CASE("csv footer comments render after the rows") {
  Table t({{"n", ColumnKind::integer}});
  t.add_row({std::int64_t{7}});
  t.add_footer_comment("zero_delta_rows=3");
  std::ostringstream out;
  t.write_csv(out, 12);
  CHECK(out.str() == "n\n7\n# zero_delta_rows=3\n");
}

TEST_CASE("json rendering parses back with identical keys") {
  std::ostringstream out;
  sample_table().write_json(out, 12);
  auto parsed = nlohmann::json::parse(out.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["n"] == 1);
  CHECK(parsed[0]["value"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK(parsed[0]["flag"] == true);
  CHECK(parsed[0]["label"] == "2/3");
  CHECK(parsed[2]["value"].is_null());
  // key order matches the CSV header order
  auto ordered = nlohmann::ordered_json::parse(out.str());
  std::vector<std::string> keys;
  for (auto it = ordered[0].begin(); it != ordered[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "value", "flag", "label"});
}

TEST_CASE("identical tables render byte-identically") {
  for (OutputFormat format : {OutputFormat::csv, OutputFormat::json}) {
    OutputConfig config;
    config.format = format;
    std::ostringstream first, second;
    sample_table().write(first, config);
    sample_table().write(second, config);
    CHECK(first.str() == second.str());
    CHECK(!first.str().empty());
  }
}

TEST_CASE("row width and precision are validated") {
  Table t({{"a", ColumnKind::integer}, {"b", ColumnKind::integer}});
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::invalid_argument);
  t.add_row({std::int64_t{1}, std::int64_t{2}});
  std::ostringstream out;
  CHECK_THROWS_AS(t.write_csv(out, 0), std::invalid_argument);
  CHECK_THROWS_AS(t.write_csv(out, 18), std::invalid_argument);
}
