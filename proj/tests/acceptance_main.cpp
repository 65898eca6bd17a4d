#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "acceptance_suite.hpp"

namespace {

bool parse_only(const char* arg, std::vector<int>& only) {
  std::string list(arg);
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t next = list.find(',', pos);
    if (next == std::string::npos) next = list.size();
    try {
      const int value = std::stoi(list.substr(pos, next - pos));
      if (value < 1 || value > 11) return false;
      only.push_back(value);
    } catch (const std::exception&) {
      return false;
    }
    pos = next + 1;
  }
  return !only.empty();
}

}  // namespace

int main(int argc, char** argv) {
  regen::acceptance::SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      if (!parse_only(argv[++i], options.only)) {
        std::fprintf(stderr, "--only expects a comma-separated list of "
                             "criterion numbers in 1..11\n");
        return 1;
      }
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--only N[,N...]]\n", argv[0]);
      return 1;
    }
  }

  const auto results = regen::acceptance::run_suite(options, true);
  for (const auto& r : results) {
    std::printf("criterion %2d [%s] %s: %s\n", r.index,
                r.pass ? "pass" : "FAIL", r.name.c_str(), r.detail.c_str());
  }
  const bool ok = regen::acceptance::all_passed(results);
  std::printf("%zu/%zu criteria passed%s\n",
              results.size() - static_cast<std::size_t>(
                                   std::count_if(results.begin(), results.end(),
                                                 [](const auto& r) {
                                                   return !r.pass;
                                                 })),
              results.size(), ok ? "" : " -- FAILURES PRESENT");
  return ok ? 0 : 2;
}
