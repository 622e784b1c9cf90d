#include <doctest.h>

#include <sstream>

#include "mgcount/output.hpp"

using namespace mgcount;

TEST_CASE("3-significant-figure rendering rounds half up") {
  CHECK_EQ(to_sci3(BigCount::from_decimal("4405")), "4.41e+3");
  CHECK_EQ(to_sci3(BigCount::from_decimal("4404")), "4.40e+3");
  CHECK_EQ(to_sci3(BigCount::from_decimal("44149")), "4.41e+4");
  CHECK_EQ(to_sci3(BigCount::from_decimal("44150")), "4.42e+4");
  CHECK_EQ(to_sci3(BigCount::from_decimal("9995")), "1.00e+4");
  CHECK_EQ(to_sci3(BigCount::from_decimal("1")), "1.00e+0");
  CHECK_EQ(to_sci3(BigCount::from_decimal("45")), "4.50e+1");
  CHECK_EQ(to_sci3(BigCount::from_decimal("0")), "0");
  CHECK_EQ(to_sci3(BigCount::from_decimal("592" + std::string(101, '0'))), "5.92e+103");
}

TEST_CASE("scientific strings compare by value") {
  CHECK(sci_equal("4.41e3", "4.41e+3"));
  CHECK(sci_equal("4.41E+03", "4.41e+3"));
  CHECK(sci_equal("2.93e+9", "2.93e9"));
  CHECK(sci_equal("4.4e3", "4.40e+3"));
  CHECK_FALSE(sci_equal("4.41e3", "4.42e+3"));
  CHECK_FALSE(sci_equal("4.41e3", "4.41e+4"));
  CHECK_FALSE(sci_equal("garbage", "4.41e+3"));
  CHECK(sci_equal("0", "0.0"));
}

TEST_CASE("records derive sci from exact") {
  OutputRecord r = make_record(8, 5, BigCount::from_decimal("4211"), 12);
  CHECK_EQ(r.count_exact, "4211");
  CHECK_EQ(r.count_sci, "4.21e+3");
  CHECK(sci_equal(r.count_sci, to_sci3(BigCount::from_decimal(r.count_exact))));
}

TEST_CASE("csv shape") {
  std::ostringstream os;
  write_csv(os, {make_record(1, 0, BigCount(1ul), 0), make_record(2, 1, BigCount(1ul), 3)});
  CHECK_EQ(os.str(), "n,delta,count_exact,count_sci,millis\n1,0,1,1.00e+0,0\n2,1,1,1.00e+0,3\n");
}

TEST_CASE("json round trip is idempotent") {
  std::vector<OutputRecord> recs = {make_record(8, 5, BigCount::from_decimal("4211"), 7),
                                    make_record(1, 0, BigCount(1ul), 0)};
  std::ostringstream first;
  write_json(first, recs);
  auto parsed = parse_json(first.str());
  REQUIRE_EQ(parsed.size(), recs.size());
  std::ostringstream second;
  write_json(second, parsed);
  CHECK_EQ(first.str(), second.str());
  CHECK_EQ(parsed[0].count_exact, "4211");
  CHECK_EQ(parsed[1].n, 1);
}

TEST_CASE("markdown table") {
  std::ostringstream os;
  write_markdown(os, {make_record(3, 2, BigCount(2ul), 1)});
  CHECK_EQ(os.str(),
           "| n | delta | count_exact | count_sci | millis |\n"
           "| --- | --- | --- | --- | --- |\n"
           "| 3 | 2 | 2 | 2.00e+0 | 1 |\n");
}
