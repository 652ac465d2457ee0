#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "seqmon/errors.hpp"
#include "seqmon/io.hpp"
#include "seqmon/rng.hpp"

using namespace seqmon;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("seqmon_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("read_series accepts plain and headered files") {
  TempDir dir;
  write_text(dir.file("plain.txt"), "1.0\n2.0\n3.0\n");
  CHECK(read_series(dir.file("plain.txt")) == std::vector<double>{1.0, 2.0, 3.0});

  write_text(dir.file("headered.txt"), "value\n0.5\n");
  CHECK(read_series(dir.file("headered.txt")) == std::vector<double>{0.5});

  write_text(dir.file("blank.txt"), "\n1.5\n\n2.5\n");
  CHECK(read_series(dir.file("blank.txt")) == std::vector<double>{1.5, 2.5});
}

TEST_CASE("read_series rejects bad input with the line number") {
  TempDir dir;
  write_text(dir.file("nan.txt"), "1.0\nNaN\n2.0\n");
  CHECK_THROWS_WITH_AS(read_series(dir.file("nan.txt")),
                       doctest::Contains(":2:"), ParseError);

  write_text(dir.file("junk.txt"), "1.0\n2.0x\n");
  CHECK_THROWS_WITH_AS(read_series(dir.file("junk.txt")),
                       doctest::Contains(":2:"), ParseError);

  write_text(dir.file("empty.txt"), "");
  CHECK_THROWS_AS(read_series(dir.file("empty.txt")), EmptyFile);

  write_text(dir.file("header_only.txt"), "value\n");
  CHECK_THROWS_AS(read_series(dir.file("header_only.txt")), EmptyFile);

  CHECK_THROWS_AS(read_series(dir.file("missing.txt")), IoError);
}

TEST_CASE("series round trip is lossless") {
  TempDir dir;
  RngStream rng(70, 0);
  std::vector<double> series(500);
  for (auto& v : series) v = 1e6 * (rng.uniform() - 0.5) * rng.normal();
  series.push_back(1.0 / 3.0);
  series.push_back(-0.1);
  write_series(dir.file("round.txt"), series);
  const auto back = read_series(dir.file("round.txt"));
  REQUIRE(back.size() == series.size());
  for (std::size_t i = 0; i < series.size(); ++i) CHECK(back[i] == series[i]);
}

namespace {

CalibrationKey sample_key() {
  LimitFunctionalSpec spec;
  spec.kind = FunctionalKind::u1;
  spec.zeta = 5.0;
  spec.kernel = Kernel::epanechnikov();
  return CalibrationKey::from_spec(spec, 0.05, 0.3, 2000, 150, 42);
}

}  // namespace

TEST_CASE("calibration cache round trip and key identity") {
  TempDir dir;
  const auto cache_path = dir.file("cache.csv");
  {
    CalibrationCache cache(cache_path);
    CalibrationResult result;
    result.control_limit = 0.123456789012345678;
    result.quantile_se = 3.5e-4;
    result.alpha = 0.05;
    result.kappa = 0.3;
    result.replications = 2000;
    result.grid = 150;
    result.seed = 42;
    cache.insert(sample_key(), result);
    CHECK(cache.size() == 1);
  }
  CalibrationCache reloaded(cache_path);
  CHECK(reloaded.size() == 1);
  auto hit = reloaded.lookup(sample_key());
  REQUIRE(hit.has_value());
  CHECK(hit->control_limit == 0.123456789012345678);
  CHECK(hit->quantile_se == 3.5e-4);

  auto other = sample_key();
  other.zeta = 10.0;
  CHECK_FALSE(reloaded.lookup(other).has_value());
}

TEST_CASE("corrupted cache rows name the offending line") {
  TempDir dir;
  const auto path = dir.file("bad.csv");
  write_text(path, "kind,zeta,kernel,alpha,kappa,R,G,seed,c,se\nu1,5,epanechnikov,0.05\n");
  CHECK_THROWS_WITH_AS(CalibrationCache{path}, doctest::Contains("row 2"), IoError);

  write_text(path,
             "kind,zeta,kernel,alpha,kappa,R,G,seed,c,se\n"
             "u1,5,epanechnikov,0.05,0.3,2000,150,42,-1.0,0.1\n");
  CHECK_THROWS_WITH_AS(CalibrationCache{path}, doctest::Contains("row 2"), IoError);

  // duplicate keys are rejected on load
  write_text(path,
             "kind,zeta,kernel,alpha,kappa,R,G,seed,c,se\n"
             "u1,5,epanechnikov,0.05,0.29999999999999999,2000,150,42,0.5,0.1\n"
             "u1,5,epanechnikov,0.05,0.29999999999999999,2000,150,42,0.5,0.1\n");
  CHECK_THROWS_WITH_AS(CalibrationCache{path}, doctest::Contains("duplicate"), IoError);
}

TEST_CASE("load_or_calibrate computes once and then hits the cache") {
  TempDir dir;
  CalibrationCache cache(dir.file("cache.csv"));
  LimitFunctionalSpec spec;
  spec.kind = FunctionalKind::u1;
  spec.zeta = 5.0;
  spec.kernel = Kernel::epanechnikov();

  const auto first = load_or_calibrate(cache, spec, 0.05, 0.3, 1200, 120, 77);
  CHECK(cache.size() == 1);
  const auto second = load_or_calibrate(cache, spec, 0.05, 0.3, 1200, 120, 77);
  CHECK(cache.size() == 1);
  CHECK(first.control_limit == second.control_limit);

  // a different alpha is a different key
  const auto third = load_or_calibrate(cache, spec, 0.10, 0.3, 1200, 120, 77);
  CHECK(cache.size() == 2);
  CHECK(third.control_limit >= first.control_limit);

  // reload from disk and hit again without recomputation
  CalibrationCache reloaded(dir.file("cache.csv"));
  const auto key = CalibrationKey::from_spec(spec, 0.05, 0.3, 1200, 120, 77);
  auto hit = reloaded.lookup(key);
  REQUIRE(hit.has_value());
  CHECK(hit->control_limit == first.control_limit);
}
