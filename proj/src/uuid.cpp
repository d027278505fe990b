#include "flowkit/uuid.hpp"

#include <mutex>
#include <random>

namespace flowkit {

std::string Uuid::to_string() const {
  static const char* digits = "0123456789abcdef";
  std::string out(32, '0');
  for (int i = 0; i < 16; ++i) out[15 - i] = digits[(hi >> (4 * i)) & 0xf];
  for (int i = 0; i < 16; ++i) out[31 - i] = digits[(lo >> (4 * i)) & 0xf];
  return out;
}

Uuid Uuid::random() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  return Uuid{rng(), rng()};
}

}  // namespace flowkit
