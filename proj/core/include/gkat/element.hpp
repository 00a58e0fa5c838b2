#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace gkat {

/// Handle to a carrier element. `owner` identifies the algebra instance that
/// issued the handle; `index` is only meaningful relative to that owner.
struct Element {
  std::uint32_t owner = 0;
  std::uint32_t index = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

enum class Sort : std::uint8_t { Program, Test };

constexpr const char* to_string(Sort s) {
  return s == Sort::Test ? "test" : "program";
}

}  // namespace gkat

template <>
struct std::hash<gkat::Element> {
  std::size_t operator()(gkat::Element e) const noexcept {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(e.owner) << 32) | e.index);
  }
};
