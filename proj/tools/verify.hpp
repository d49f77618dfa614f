#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schubert::verify {

struct Options {
  // Exhaustive checks run over S_2 .. S_n.
  int n = 5;
  // Random permutations drawn from S_{n+1} where a criterion samples.
  int sample = 200;
  std::uint64_t seed = 20240607;
  // 0: SCHUBERT_THREADS, else hardware concurrency.
  int threads = 0;
};

struct Result {
  std::string id;
  std::string title;
  long long checks = 0;
  long long failures = 0;
  std::string firstFailure;
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

struct Criterion {
  std::string id;
  std::string suite;
  std::string title;
  std::function<Result(const Options&)> run;
};

// The ten acceptance criteria, in order.
const std::vector<Criterion>& criteria();

// Suite names accepted by selectCriteria, "all" included.
std::vector<std::string> suiteNames();
// Criteria belonging to `suite`; empty for an unknown name.
std::vector<Criterion> selectCriteria(const std::string& suite);

// "PASS [id] title: checks=..., failures=..., time=...s" and, on failure,
// the first counterexample.
std::string formatResult(const Result& r);

int threadCount(const Options& opts);

}  // namespace schubert::verify
