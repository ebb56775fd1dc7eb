#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "x0eis/cusps.hpp"

namespace x0eis {

struct VerifyOptions {
  std::int64_t T = 200; // eigenform coefficient window
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::int64_t nmax = 500; // twisted-series coefficient window
  std::vector<std::uint64_t> chi_conductors{1, 3, 5, 7};
};

struct VerifyRecord {
  std::string id;
  bool pass = true;
  std::string payload; // JSON details
};

// suite is one of "cusps", "eigen", "constants", "orders", "lseries"
std::vector<VerifyRecord> run_suite(const std::string& suite, const LevelShape& shape,
                                    const VerifyOptions& opts);

struct SweepSpec {
  std::uint64_t max_level = 0;    // enumerate shapes up to this level when set
  std::vector<LevelShape> shapes; // used when max_level is 0
  std::vector<std::string> suites;
  VerifyOptions opts;
  int jobs = 1;
};

struct SweepResult {
  std::uint64_t records = 0;
  std::uint64_t failed = 0;
  std::vector<VerifyRecord> failures;
};

SweepResult run_sweep(const SweepSpec& spec);

// all (D, C) with D squarefree, C | D, D*C <= max_level, by level then D
std::vector<LevelShape> shapes_up_to(std::uint64_t max_level);

std::uint64_t fnv1a64(const std::string& data);

// version-salted content key for a canonical request string
std::string cache_key(const std::string& request);

// JSON blobs stored as <dir>/<key>.json; writes go through a temp file and a
// rename so a reader never sees a partial record
std::optional<std::string> cache_load(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, const std::string& value);

} // namespace x0eis
