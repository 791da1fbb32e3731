#pragma once

#include <string>
#include <vector>

#include "coalglab/budget.hpp"
#include "coalglab/parallel.hpp"

namespace coalglab {

struct CriterionResult {
  int number = 0;
  bool pass = false;
  std::string name;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
  // canonical text: one pass/fail line per criterion, no timing, byte-stable
  std::string to_string() const;
};

// Runs the full acceptance suite. Criterion 10 re-runs criteria 1-9 and
// compares the rendered reports byte for byte.
AcceptanceReport run_acceptance(const Budget& budget = Budget{},
                                ParallelMode mode = ParallelMode::openmp);

}  // namespace coalglab
