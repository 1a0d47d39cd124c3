#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hnc::acceptance {

struct Options {
  std::uint64_t seed = 20240601;
  int dirac_truncation = 48;
  int n_commutators = 4;
  double tol = 1e-8;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs criteria 1..10 in order; `progress` sees each result as it lands.
std::vector<CriterionResult> run_all(const Options& opt,
                                     const std::function<void(const CriterionResult&)>& progress = {});

std::string format_line(const CriterionResult& r);

}  // namespace hnc::acceptance
