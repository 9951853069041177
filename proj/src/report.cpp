#include "pong/report.hpp"

#include <algorithm>
#include <map>

namespace pong {

std::size_t VerificationReport::check_index(const std::string& name) {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].name == name) return i;
  }
  checks.push_back({name, 0, 0});
  return checks.size() - 1;
}

bool VerificationReport::passed() const { return total_failures() == 0; }

std::int64_t VerificationReport::total_failures() const {
  std::int64_t n = 0;
  for (const CheckTally& t : checks) n += t.failed;
  return n;
}

std::int64_t VerificationReport::total_checks() const {
  std::int64_t n = 0;
  for (const CheckTally& t : checks) n += t.run;
  return n;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  std::map<std::string, std::int64_t> kept;
  for (const Failure& f : failures) ++kept[f.check];
  for (const CheckTally& t : other.checks) {
    CheckTally& mine = checks[check_index(prefix + t.name)];
    mine.run += t.run;
    mine.failed += t.failed;
  }
  for (const Failure& f : other.failures) {
    const std::string name = prefix + f.check;
    if (kept[name]++ >= static_cast<std::int64_t>(kMaxFailuresPerCheck)) continue;
    failures.push_back(f);
    failures.back().check = name;
  }
}

}  // namespace pong
