#include <clocale>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "heatlab/csv.hpp"
#include "heatlab/errors.hpp"

using namespace heatlab;

TEST_CASE("format_real uses 17 significant digits") {
  CHECK(csv::format_real(0.5) == "0.5");
  CHECK(csv::format_real(0.1) == "0.10000000000000001");
  CHECK(csv::format_real(-0.75) == "-0.75");
  CHECK(csv::parse_real(csv::format_real(0.1)) == 0.1);
  CHECK_THROWS_AS(csv::parse_real("1.5x"), DomainError);
  CHECK_THROWS_AS(csv::parse_real(""), DomainError);
}

TEST_CASE("format_real is lossless for random doubles") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    CHECK(csv::parse_real(csv::format_real(v)) == v);
  }
}

TEST_CASE("tables round-trip byte for byte") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::bernoulli_distribution hole(0.1);
  csv::Table table;
  table.header = {"x", "a", "b"};
  for (int r = 0; r < 50; ++r) {
    std::vector<csv::Cell> row;
    for (int c = 0; c < 3; ++c) row.push_back(hole(rng) ? csv::Cell{} : csv::Cell{value(rng)});
    table.rows.push_back(row);
  }
  const std::string text = csv::to_string(table);
  CHECK(csv::to_string(csv::parse(text)) == text);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.substr(0, 6) == "x,a,b\n");
}

TEST_CASE("formatting ignores the global C locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  // Any comma-decimal locale that happens to be installed.
  for (const char* name : {"de_DE.UTF-8", "fr_FR.UTF-8", "de_DE", "C"}) {
    if (std::setlocale(LC_NUMERIC, name)) break;
  }
  CHECK(csv::format_real(1.25) == "1.25");
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("parse rejects ragged rows") {
  CHECK_THROWS_AS(csv::parse("a,b\n1,2\n3\n"), DomainError);
  CHECK_THROWS_AS(csv::parse("a,b\n1,zz\n"), DomainError);
  const auto t = csv::parse("a,b\n1,\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == 1.0);
  CHECK_FALSE(t.rows[0][1].has_value());
}
