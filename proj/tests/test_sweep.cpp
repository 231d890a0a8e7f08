#include <doctest.h>

#include <string>
#include <vector>

#include "ordkit/sweep.hpp"

using namespace ordkit;

TEST_CASE("index sweep merges findings in index order") {
  std::function<std::vector<int>(size_t)> visit = [](size_t i) {
    std::vector<int> out;
    // emit i copies of i so bucket sizes vary
    for (size_t k = 0; k < i % 3; ++k) out.push_back((int)i);
    return out;
  };
  auto serial = sweep_indices<int>(20, Exec::Serial, visit);
  auto parallel = sweep_indices<int>(20, Exec::Parallel, visit);
  CHECK(serial == parallel);
  // 1 copy of each i = 1 mod 3, 2 copies of each i = 2 mod 3
  std::vector<int> expect;
  for (int i = 0; i < 20; ++i)
    for (int k = 0; k < i % 3; ++k) expect.push_back(i);
  CHECK(serial == expect);
}

TEST_CASE("empty sweeps produce empty reports") {
  std::function<std::vector<int>(size_t)> visit = [](size_t) { return std::vector<int>{1}; };
  CHECK(sweep_indices<int>(0, Exec::Serial, visit).empty());
  CHECK(sweep_indices<int>(0, Exec::Parallel, visit).empty());
  std::function<std::vector<int>(size_t, size_t)> visit2 = [](size_t, size_t) {
    return std::vector<int>{1};
  };
  CHECK(sweep_pairs<int>(0, Exec::Parallel, visit2).empty());
}

TEST_CASE("pair sweep is row major") {
  std::function<std::vector<std::string>(size_t, size_t)> visit = [](size_t i, size_t j) {
    std::vector<std::string> out;
    if ((i + j) % 2 == 0) out.push_back(std::to_string(i) + "," + std::to_string(j));
    return out;
  };
  auto serial = sweep_pairs<std::string>(5, Exec::Serial, visit);
  auto parallel = sweep_pairs<std::string>(5, Exec::Parallel, visit);
  CHECK(serial == parallel);
  REQUIRE(!serial.empty());
  CHECK(serial.front() == "0,0");
  CHECK(serial.back() == "4,4");
  // row-major: "0,2" comes before "1,1"
  size_t a = 0, b = 0;
  for (size_t idx = 0; idx < serial.size(); ++idx) {
    if (serial[idx] == "0,2") a = idx;
    if (serial[idx] == "1,1") b = idx;
  }
  CHECK(a < b);
}

TEST_CASE("triple sweep covers the cube lexicographically") {
  std::function<std::vector<long long>(size_t, size_t, size_t)> visit = [](size_t i, size_t j,
                                                                           size_t k) {
    return std::vector<long long>{(long long)(i * 16 + j * 4 + k)};
  };
  auto serial = sweep_triples<long long>(4, Exec::Serial, visit);
  auto parallel = sweep_triples<long long>(4, Exec::Parallel, visit);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == 64);
  for (size_t idx = 0; idx < 64; ++idx) CHECK(serial[idx] == (long long)idx);
}

TEST_CASE("default policy is compiled in") {
#ifdef _OPENMP
  CHECK(default_exec() == Exec::Parallel);
#else
  CHECK(default_exec() == Exec::Serial);
#endif
}
