#ifndef FLOWKIT_SIGNATURE_HPP
#define FLOWKIT_SIGNATURE_HPP

#include <string>
#include <vector>

#include "flowkit/errors.hpp"
#include "flowkit/value.hpp"

namespace flowkit {

// A store kind is purely nominal: two kinds are the same iff their names are.
// Capabilities (which value types a kind carries) live in the store registry.
struct StoreKind {
  std::string name;

  bool operator==(const StoreKind&) const = default;
};

namespace kinds {
inline const StoreKind Var{"Var"};
inline const StoreKind FileStore{"FileStore"};
inline const StoreKind CSVStore{"CSVStore"};
inline const StoreKind CommaSepFile{"CommaSepFile"};
}  // namespace kinds

// One input or output slot: where the value lives and what it is.
struct Port {
  StoreKind kind;
  ValueType value;

  bool operator==(const Port&) const = default;

  std::string to_string() const { return kind.name + "<" + value.to_string() + ">"; }
};

inline Port port(StoreKind k, ValueType v) { return Port{std::move(k), std::move(v)}; }

// The typed contract of a circuit. Both sides are non-empty: a circuit always
// consumes at least one value and always produces at least one.
struct Signature {
  std::vector<Port> ins;
  std::vector<Port> outs;

  Signature(std::vector<Port> ins_, std::vector<Port> outs_);

  std::size_t n_ins() const { return ins.size(); }

  bool operator==(const Signature&) const = default;

  std::string to_string() const;
};

std::string ports_to_string(const std::vector<Port>& ports);

// Sequential composition: defined iff s1.outs == s2.ins slot for slot.
// Throws CompositionError (ArityMismatch or PortMismatch naming both ports).
Signature compose_then(const Signature& s1, const Signature& s2);

// Parallel composition: never fails, appends both sides.
Signature compose_beside(const Signature& s1, const Signature& s2);

inline Signature identity_sig(std::vector<Port> ports) {
  auto copy = ports;
  return Signature(std::move(ports), std::move(copy));
}

}  // namespace flowkit

#endif
