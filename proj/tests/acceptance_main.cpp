#include "qc/acceptance.hpp"

#include <cstring>

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  auto results = qc::run_acceptance(quick);
  return qc::print_acceptance(results) ? 0 : 1;
}
