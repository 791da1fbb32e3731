#include "coalglab/budget.hpp"

#include <cstdlib>
#include <string>

namespace coalglab {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("COALGLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.work = v;
  }
  return b;
}

}  // namespace coalglab
