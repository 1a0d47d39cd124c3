#include <cstdlib>
#include <iostream>

#include "acceptance.hpp"

int main() {
  hnc::acceptance::Options opt;
  if (const char* s = std::getenv("HNC_SEED")) opt.seed = std::strtoull(s, nullptr, 10);
  int failed = 0;
  hnc::acceptance::run_all(opt, [&](const hnc::acceptance::CriterionResult& r) {
    std::cout << hnc::acceptance::format_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
