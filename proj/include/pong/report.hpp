#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pong {

// A generator in a failure dump; algebra, m and k come from the report.
struct OperandDump {
  std::vector<int> domain;
  std::vector<int> values;
};

struct Failure {
  std::string check;
  std::vector<OperandDump> operands;
  std::string detail;
};

struct CheckTally {
  std::string name;
  std::int64_t run = 0;
  std::int64_t failed = 0;
};

struct VerificationReport {
  static constexpr std::size_t kMaxFailuresPerCheck = 10;

  std::string suite;
  std::string algebra;
  int m = 0;
  int k = 0;
  int max_disp = 0;
  std::vector<CheckTally> checks;  // registration order
  std::vector<Failure> failures;   // at most kMaxFailuresPerCheck per check
  double wall_time_ms = 0;

  // Index of a check, registering it on first use.
  std::size_t check_index(const std::string& name);

  template <class MakeFailure>
  void record(std::size_t check, bool ok, MakeFailure&& make_failure) {
    CheckTally& t = checks[check];
    ++t.run;
    if (ok) return;
    if (t.failed++ < static_cast<std::int64_t>(kMaxFailuresPerCheck)) {
      Failure f = make_failure();
      f.check = t.name;
      failures.push_back(std::move(f));
    }
  }

  bool passed() const;
  std::int64_t total_failures() const;
  std::int64_t total_checks() const;

  // Adds tallies and failures of a later chunk of the same run; prefix is
  // prepended to the other report's check names.
  void merge(const VerificationReport& other, const std::string& prefix = "");
};

}  // namespace pong
