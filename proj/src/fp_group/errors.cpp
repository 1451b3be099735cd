#include "moore/fp_group/errors.hpp"

#include <cstdlib>
#include <string>

namespace moore {

std::size_t max_elements() {
  constexpr std::size_t kDefault = 100000;
  const char* env = std::getenv("MOORE_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    const auto v = std::stoull(env);
    return v == 0 ? kDefault : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace moore
