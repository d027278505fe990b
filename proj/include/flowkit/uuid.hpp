#ifndef FLOWKIT_UUID_HPP
#define FLOWKIT_UUID_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace flowkit {

// 128-bit identifier for tasks and jobs.
struct Uuid {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  auto operator<=>(const Uuid&) const = default;

  std::string to_string() const;  // 32 lowercase hex digits

  static Uuid random();
  static Uuid of(std::uint64_t hi, std::uint64_t lo) { return Uuid{hi, lo}; }
};

struct UuidHash {
  std::size_t operator()(const Uuid& u) const {
    return std::hash<std::uint64_t>{}(u.hi) * 31 ^ std::hash<std::uint64_t>{}(u.lo);
  }
};

}  // namespace flowkit

#endif
