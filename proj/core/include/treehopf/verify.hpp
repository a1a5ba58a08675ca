#pragma once

#include <string>
#include <vector>

namespace treehopf {

/// Bounds for the invariant sweeps. Defaults keep `verify all` well under
/// two minutes: decorated trees to 5 vertices, undecorated to 7, words to 6
/// letters, B-series order 4.
struct VerifyOptions {
  int decorated_vertices = 5;
  int undecorated_vertices = 7;
  int word_length = 6;
  int bseries_order = 4;
  std::vector<std::string> alphabet = {"a", "b"};
  unsigned seed = 20250801;
};

struct VerifyFailure {
  std::string check;
  std::string counterexample;  // replayable text-format inputs
};

struct VerifyReport {
  std::string suite;
  std::string parameters;
  int checks_run = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

/// Suite names accepted by run_verify, "all" included.
const std::vector<std::string>& verify_suites();

/// Runs one suite; each check stops at its first (minimal) counterexample.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt = {});

}  // namespace treehopf
