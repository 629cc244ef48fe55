#pragma once

#include <string_view>

namespace hearth {

/// Access a request needs. `none` means "any authenticated, active session".
enum class AccessClass { none, read, write };

constexpr std::string_view to_string(AccessClass a) {
  switch (a) {
    case AccessClass::none:
      return "none";
    case AccessClass::read:
      return "read";
    case AccessClass::write:
      return "write";
  }
  return "unknown";
}

}  // namespace hearth
