#include <cstdlib>
#include <string>

#include "destab/errors.hpp"

namespace destab {

unsigned long long max_cells() {
  static const unsigned long long cells = [] {
    const char* env = std::getenv("DESTAB_MAX_CELLS");
    if (env == nullptr || *env == '\0') return 1000000ull;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0) return 1000000ull;
    return value;
  }();
  return cells;
}

void guard_cells(unsigned long long needed, const std::string& what) {
  if (needed > max_cells()) {
    throw TooLarge(what + " needs " + std::to_string(needed) +
                   " cells, above the budget of " + std::to_string(max_cells()) +
                   " (raise DESTAB_MAX_CELLS to override)");
  }
}

}  // namespace destab
