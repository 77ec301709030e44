// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [seed] [id ...]

#include <cstdlib>
#include <iostream>
#include <string>

#include "galecubic/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::vector<int> ids;
  if (argc > 1) seed = std::stoull(argv[1]);
  for (int k = 2; k < argc; ++k) ids.push_back(std::atoi(argv[k]));
  int failed = 0;
  for (const auto& r : galecubic::run_acceptance(seed, ids)) {
    std::cout << galecubic::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
