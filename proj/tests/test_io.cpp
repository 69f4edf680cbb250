#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "bgeom/errors.hpp"
#include "bgeom/io/atomic_file.hpp"
#include "bgeom/io/csv.hpp"

using namespace bgeom;

TEST_CASE("reals round-trip through text") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-50, 50);
  for (int n = 0; n < 2000; ++n) {
    const double x = std::exp(U(rng)) * (n % 2 ? -1 : 1);
    CHECK(std::stod(io::format_real(x)) == x);
  }
  CHECK(io::format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_real(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("CSV tables round-trip") {
  io::CsvTable t({"name", "value", "note"});
  t.comment("generated for a test");
  t.add_row({"collar", io::format_real(1.4068291137), "plain"});
  t.add_row({"a,b", "2", "say \"hi\""});
  t.add_row({"", "3", ""});
  t.add_row({"#4", "two\nlines", "x"});
  CHECK_THROWS_AS(t.add_row({"short"}), std::invalid_argument);
  const std::string text = t.str();
  CHECK(text.rfind("# generated for a test\n", 0) == 0);
  const auto back = io::parse_csv(text);
  CHECK(back.columns() == t.columns());
  CHECK(back.rows() == t.rows());
  CHECK(back.str() == text);
  CHECK_THROWS_AS(io::parse_csv("a,b\n1,\"2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_csv("a,b\n1,2,3\n"), ParseError);
}

TEST_CASE("atomic writes replace the target") {
  const auto dir = std::filesystem::temp_directory_path() / "bgeom_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto f = dir / "out.txt";
  io::write_atomic(f, "first\n");
  io::write_atomic(f, "second\n");
  CHECK(io::read_file(f) == "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS_AS(io::write_atomic(dir / "missing" / "x.txt", "x"), std::runtime_error);
  CHECK_THROWS_AS(io::read_file(dir / "nope.txt"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
