#pragma once

#include <functional>
#include <optional>

#include "k3corr/error.hpp"

namespace k3corr::testing {

// Runs f and reports the k3_error code it threw, if any.
inline std::optional<errc> thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const k3_error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace k3corr::testing
