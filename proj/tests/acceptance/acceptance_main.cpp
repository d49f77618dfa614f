// Runs every acceptance criterion at the pinned sizes and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero if any fails.

#include <iostream>

#include "verify.hpp"

int main() {
  schubert::verify::Options opts;
  opts.n = 5;
  opts.sample = 200;
  opts.seed = 20240607;
  bool ok = true;
  for (const auto& criterion : schubert::verify::criteria()) {
    const auto result = criterion.run(opts);
    ok = ok && result.passed();
    std::cout << schubert::verify::formatResult(result) << std::endl;
  }
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return ok ? 0 : 1;
}
