// Acceptance run: one PASS/FAIL line per criterion, printed as each finishes.
#include <cstdio>
#include <cstring>

#include <schromax/verify.hpp>

int main(int argc, char** argv) {
  namespace v = schromax::verify;
  bool ladder = true;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--skip-ladder")) ladder = false;
  const auto checks = v::checks({}, ladder);
  int failed = 0;
  for (auto& c : checks) {
    const v::CheckResult r = c.run();
    std::printf("%s criterion %d: %s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, checks.size());
  return failed ? 1 : 0;
}
