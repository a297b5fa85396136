// Runs the acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "washburn/verify.hpp"

using namespace washburn;

int main(int argc, char** argv) {
  std::string only = "acceptance.";
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    const int n = std::atoi(argv[2]);
    if (n < 1 || n > 11) {
      std::fprintf(stderr, "criterion must be 1..11\n");
      return 2;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "acceptance.%02d_", n);
    only = buf;
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }

  verify::VerifyOptions opt;
  opt.only = only;
  opt.parallel = false;
  const auto results = verify::run(opt);
  if (results.empty()) return 2;
  for (const auto& r : results) {
    std::printf("%s %-28s metric=%-12.4g threshold=%-10.3g %.3fs%s%s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.metric, r.threshold, r.seconds, r.detail.empty() ? "" : "  ",
                r.detail.c_str());
  }
  return verify::all_passed(results) ? 0 : 1;
}
