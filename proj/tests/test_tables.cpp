#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "scb/error.hpp"
#include "scb/tables.hpp"

using namespace scb;

TEST_SUITE("tables") {

TEST_CASE("partition syntax") {
  auto p = parse_partition("{{1,2},{3}}");
  CHECK(p == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(format_partition(p) == "{{1,2},{3}}");
  CHECK(parse_partition(" { {1, 2} , {3,4} } ").size() == 2);
  CHECK_THROWS_AS(parse_partition("{1,2}"), Error);
  CHECK_THROWS_AS(parse_partition("{{1,2}"), Error);
  CHECK_THROWS_AS(parse_partition("{{1;2}}"), Error);
}

TEST_CASE("CSV with quoted fields") {
  auto dir = std::filesystem::temp_directory_path() / "scb_tables_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "t.csv");
    f << "a,b\n\"{{1,2},{3}}\",5/2\n";
  }
  auto t = read_csv(dir / "t.csv");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "{{1,2},{3}}");
  CHECK(t.rows[0][1] == "5/2");
  try {
    read_csv(dir / "missing.csv");
    FAIL("expected FixtureNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FixtureNotFound);
  }
}

TEST_CASE("bound rows for single instances") {
  Instance cb;
  cb.kind = MetricKind::CityBlock;
  cb.m = 4;
  cb.n = 3;
  cb.k = 5;
  auto v = compute_bounds(cb, {"inertia", "plotkin", "hamming", "ratio"});
  CHECK(v[0].display == "4");
  CHECK(v[1].display == "4");
  CHECK(v[2].display == "32/5");
  CHECK(v[3].display == "-");
  Instance pr;
  pr.kind = MetricKind::PhaseRotation;
  pr.q = 3;
  pr.n = 4;
  pr.k = 2;
  auto w = compute_bounds(pr, {"inertia", "ratio", "singleton", "alpha"});
  CHECK(w[0].display == "11");
  CHECK(w[1].display == "6");
  CHECK(w[2].display == "9");
  CHECK(w[3].display == "6");
  CHECK_THROWS_AS(compute_bounds(pr, {"lovasz"}), Error);
}

TEST_CASE("fixture verification detects a corrupted cell") {
  auto dir = std::filesystem::temp_directory_path() / "scb_tables_corrupt";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(fixture_path(dir, 4));
    f << "n,q,b,k,inertia,ratio,alpha,theta,singleton\n3,2,2,1,5,2,2,2,2\n3,3,2,1,15,4,3,3,3\n";
  }
  auto rep = verify_table(4, dir);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].ok);
  CHECK_FALSE(rep.rows[1].ok);
  CHECK_FALSE(rep.ok);
  try {
    verify_table(3, dir);
    FAIL("expected FixtureNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FixtureNotFound);
  }
}

TEST_CASE("threaded verification keeps fixture order") {
  auto a = verify_table(3, SCB_FIXTURE_DIR, {}, 1);
  auto b = verify_table(3, SCB_FIXTURE_DIR, {}, 3);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].label == b.rows[i].label);
  CHECK(a.ok);
  CHECK(b.ok);
}

}
