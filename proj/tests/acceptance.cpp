// One PASS/FAIL line per acceptance criterion.

#include <cstdio>
#include <cstring>

#include "suites.hpp"

int main(int argc, char** argv) {
  dlab::suites::SuiteConfig cfg;
  for (int i = 1; i + 1 < argc; ++i)
    if (!std::strcmp(argv[i], "--seed")) cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
  auto result = dlab::suites::run_suite("all", cfg);
  int failed = 0;
  for (const auto& c : result.criteria) {
    bool in_time = c.limit_seconds <= 0 || c.seconds <= c.limit_seconds;
    bool ok = c.passed && in_time;
    failed += !ok;
    std::printf("%s %2d %-32s %8.3fs", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), c.seconds);
    if (c.limit_seconds > 0) std::printf(" (limit %gs)", c.limit_seconds);
    if (!in_time) std::printf(" time limit exceeded");
    if (!c.passed && c.details.contains("error")) std::printf(" error: %s", c.details["error"].get<std::string>().c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(result.criteria.size()) - failed, result.criteria.size());
  return failed ? 1 : 0;
}
