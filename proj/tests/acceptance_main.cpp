#include <cstdio>
#include <exception>

#include "coalglab/acceptance.hpp"

int main() {
  try {
    coalglab::Budget budget = coalglab::Budget::from_env();
    coalglab::AcceptanceReport rep = coalglab::run_acceptance(budget);
    std::fputs(rep.to_string().c_str(), stdout);
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite error: %s\n", e.what());
    return 2;
  }
}
