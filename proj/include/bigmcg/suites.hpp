#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bigmcg/rewrite.hpp"

namespace bigmcg {

enum class StepStatus { Pass, Fail, Unknown };

struct StepResult {
  std::string id;
  std::string anchor;  // the identity being replayed, in word grammar
  StepStatus status = StepStatus::Unknown;
  std::string detail;
};

// Registered figure fact consumed by a chain; reported, never counted as a verified step.
struct AxiomNote {
  std::string id;
  std::string anchor;
  bool homology_agrees = false;
};

struct Report {
  std::string suite;
  int ends = 0;
  int window = 0;
  std::vector<StepResult> steps;
  std::vector<AxiomNote> axioms;

  bool passed() const;
  bool any_failed() const;
  std::string text() const;
};

std::vector<std::string> suite_names();

// threads == 0 picks the hardware concurrency; results are ordered by step regardless.
Report verify_suite(std::string_view name, int ends, int window, std::size_t budget = kDefaultBudget,
                    unsigned threads = 0);

std::string_view to_string(StepStatus status);

}  // namespace bigmcg
