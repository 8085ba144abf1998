#pragma once

// Theorem-check report suite. Every check either passes, fails, or is skipped
// with the reason; a report passes when no check fails. Output is fully
// deterministic given the input and options.

#include <cstdint>
#include <string>
#include <vector>

#include "linewalk/digraph.hpp"

namespace linewalk {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct Report {
  std::string command;
  int n = 0;
  int m = 0;
  int regularity = -1;  // -1 when not regular
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int count(CheckStatus s) const;
};

struct VerifyOptions {
  std::string coin = "auto";  // auto | hadamard | grover | fourier
  double tol = 1e-12;
  int max_recognition_n = 10;   // forbidden-pattern scan bound
  int max_permanent_arcs = 20;  // inclusion-exclusion bound
};

// Runs every applicable check on one digraph.
Report verify_digraph(const Digraph& g, const VerifyOptions& options = {});

// Runs the suite over `count` seeded instances (rotating between the plain,
// regular, and eulerian models); check ids get a per-instance prefix.
Report verify_random(int count, std::uint64_t seed, const VerifyOptions& options = {});

std::string report_to_text(const Report& report);
std::string report_to_json(const Report& report);

}  // namespace linewalk
